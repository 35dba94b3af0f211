#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <tuple>

#include "dpois/bell.hpp"
#include "dpois/errors.hpp"
#include "dpois/moments.hpp"
#include "dpois/report.hpp"
#include "dpois/triangles.hpp"

using dpois::DegenParam;
using dpois::MomentFamily;
using dpois::MomentKind;
using dpois::Rational;
using dpois::Value;

namespace {

dpois::PoissonParams params(Rational l, Rational a) { return dpois::classify_params(DegenParam(std::move(l)), std::move(a)); }

bool all_pass(const std::vector<dpois::IdentityCheckResult>& r) {
    return !r.empty() && std::all_of(r.begin(), r.end(), [](const auto& c) { return c.pass; });
}

}  // namespace

TEST_SUITE("moment-lab") {

TEST_CASE("integrands") {
    const DegenParam half(Rational(1, 2));
    CHECK(dpois::moment_integrand({MomentFamily::Power, 3}, 2, half) == Rational(8));
    CHECK(dpois::moment_integrand({MomentFamily::Falling, 2}, 3, half) == Rational(6));
    CHECK(dpois::moment_integrand({MomentFamily::Rising, 2}, 3, half) == Rational(12));
    CHECK(dpois::moment_integrand({MomentFamily::LambdaFalling, 2}, 1, half) == Rational(1, 2));
    CHECK(dpois::moment_integrand({MomentFamily::Binomial, 2}, 3, half) == Rational(6));
    CHECK(dpois::moment_integrand({MomentFamily::Binomial, 0}, 0, half) == Rational(1));
}

TEST_CASE("direct moments") {
    const auto p = params(Rational(1, 2), 1);
    CHECK(dpois::moment_direct({MomentFamily::Falling, 2}, p, false).exact() == Rational(2, 9));
    CHECK(dpois::moment_direct({MomentFamily::LambdaFalling, 1}, p, true).exact() == Rational(6, 5));
    CHECK(dpois::moment_direct({MomentFamily::Power, 0}, p, false).exact() == Rational(1));
    CHECK(dpois::moment_direct({MomentFamily::Power, 0}, p, true).exact() == Rational(1));
    CHECK(dpois::moment_direct({MomentFamily::Power, 0}, params(Rational(-1, 3), 2), false).contains(Rational(1)));
}

TEST_CASE("closed-form moments") {
    const auto p = params(Rational(1, 2), 1);
    CHECK(dpois::moment_closed_form({MomentFamily::Falling, 2}, p, false).exact() == Rational(2, 9));
    CHECK(dpois::moment_closed_form({MomentFamily::LambdaFalling, 2}, p, true).exact() == Rational(1));
    CHECK(dpois::moment_closed_form({MomentFamily::Binomial, 2}, p, false).exact() == Rational(7, 9));
    CHECK(dpois::moment_closed_form({MomentFamily::Falling, 2}, p, true).exact() == Rational(2, 5));
    CHECK_THROWS_AS(dpois::moment_closed_form({MomentFamily::Rising, 2}, p, true), dpois::NoClosedForm);
    CHECK_THROWS_AS(dpois::moment_closed_form({MomentFamily::Power, 2}, p, true), dpois::NoClosedForm);
}

TEST_CASE("infinite support moments") {
    const auto p = params(Rational(-1, 2), 1);
    const Value mean = dpois::moment_direct({MomentFamily::Falling, 1}, p, false);
    const Value f2 = dpois::moment_direct({MomentFamily::Falling, 2}, p, false);
    CHECK(dpois::moment_closed_form({MomentFamily::Falling, 1}, p, false).exact() == Rational(2));
    CHECK(dpois::moment_closed_form({MomentFamily::Falling, 2}, p, false).exact() == Rational(6));
    CHECK(mean.contains(Rational(2)));
    CHECK(f2.contains(Rational(6)));
    CHECK(mean.width() <= Rational(1) / Rational(10).pow(30));
    CHECK(f2.width() <= Rational(1) / Rational(10).pow(30));
}

TEST_CASE("Monte Carlo estimates") {
    const auto inf = params(Rational(-1, 2), 1);
    const auto est = dpois::moment_mc({MomentFamily::Power, 1}, inf, false, 42, 1000000);
    CHECK(std::abs(est.mean - 2.0) < 0.006);
    CHECK(est.std_error == doctest::Approx(0.002).epsilon(0.05));
    const auto zero = dpois::moment_mc({MomentFamily::Power, 0}, inf, false, 42, 1000);
    CHECK(zero.mean == 1.0);
    CHECK(zero.std_error == 0.0);
    CHECK(zero.band(4).lo() == Rational(1));
    const auto fin = params(Rational(1, 2), 1);
    const auto zt = dpois::moment_mc({MomentFamily::LambdaFalling, 1}, fin, true, 9, 100000);
    CHECK(zt.band(3).contains(Rational(6, 5)));
    // Reproducible.
    CHECK(dpois::moment_mc({MomentFamily::Power, 2}, inf, false, 3, 5000).mean ==
          dpois::moment_mc({MomentFamily::Power, 2}, inf, false, 3, 5000).mean);
}

TEST_CASE("identity verification examples") {
    const auto t4 = dpois::verify_identity("T4", Rational(1, 2), Rational(1), 2);
    CHECK(all_pass(t4));
    bool saw = false;
    for (const auto& c : t4) {
        if (c.n == 2 && c.lhs.is_exact() && c.lhs.exact() == Rational(2, 9)) {
            CHECK(c.rhs.exact() == Rational(2, 9));
            saw = true;
        }
    }
    CHECK(saw);

    CHECK(all_pass(dpois::verify_identity("E6", Rational(-1, 3), Rational(1), 20)));

    const auto t10 = dpois::verify_identity("T10", Rational(1, 2), Rational(1), 2);
    CHECK(all_pass(t10));
    const auto it = std::find_if(t10.begin(), t10.end(), [](const auto& c) { return c.n == 2; });
    REQUIRE(it != t10.end());
    CHECK(it->lhs.exact() == Rational(2, 5));
    CHECK(it->rhs.exact() == Rational(2, 5));
}

TEST_CASE("identity verification errors") {
    CHECK_THROWS_AS(dpois::verify_identity("T99", Rational(1, 2), Rational(1), 2), dpois::UnknownIdentity);
    CHECK_THROWS_AS(dpois::verify_identity("T4", Rational(-1, 2), Rational(3), 2), dpois::RegimeError);
    CHECK_THROWS_AS(dpois::verify_identity("E12", Rational(2, 3), Rational(1), 2), dpois::RegimeError);
}

TEST_CASE("every identity passes at an infinite-support point") {
    for (const auto& id : dpois::identity_ids()) {
        CAPTURE(id);
        const auto r = dpois::verify_identity(id, Rational(-1, 2), Rational(1), 6);
        CHECK(all_pass(r));
    }
}

TEST_CASE("the two zero-truncated falling-moment formulas agree") {
    for (const auto& pt : dpois::default_exact_grid()) {
        const auto p = params(pt.lambda, pt.alpha);
        const Rational norm = Rational(1) - p.normalizer().reciprocal();
        for (std::int64_t n = 1; n <= 8; ++n) {
            Rational via_bel(0);
            for (std::int64_t k = 1; k <= n; ++k) {
                via_bel += dpois::bell_deg_closed_form(k, pt.alpha, p.lambda()) * dpois::stirling1_deg(n, k, p.lambda());
            }
            CHECK(dpois::moment_closed_form({MomentFamily::Falling, n}, p, true).exact() == via_bel / norm);
        }
    }
}

TEST_CASE("zero-truncated Lah-Bell rescales the full one") {
    for (const auto& pt : dpois::default_exact_grid()) {
        const auto ep = dpois::EvalPoint::make(pt.alpha, DegenParam(pt.lambda));
        const Rational norm = Rational(1) - ep.normalizer().reciprocal();
        for (std::int64_t n = 1; n <= 8; ++n) {
            CHECK(dpois::lah_bell_zt(n, ep).exact() * norm == dpois::lah_bell_deg(n, ep).exact());
        }
    }
}

TEST_CASE("suite reports") {
    const auto empty = dpois::run_suite("empty", {}, 8, {}, 1);
    CHECK(empty.checks.empty());
    CHECK(empty.verdict() == "vacuous pass");

    const auto inf = dpois::run_suite("point", {{Rational(-1, 2), Rational(1)}}, 4, {}, 1);
    CHECK(inf.failed() == 0);
    CHECK(inf.verdict() == "pass");
    const auto it = std::find_if(inf.checks.begin(), inf.checks.end(), [](const auto& c) {
        return c.identity_id == "T4" && c.n == 1 && c.method == dpois::CheckMethod::CertifiedTruncation;
    });
    REQUIRE(it != inf.checks.end());
    CHECK(((it->lhs.is_exact() && it->lhs.exact() == Rational(2)) || (it->rhs.is_exact() && it->rhs.exact() == Rational(2))));

    // Bad points become failed checks instead of aborting.
    const auto bad = dpois::run_suite("bad", {{Rational(1, 2), Rational(1)}, {Rational(-1, 2), Rational(5)}}, 2, {}, 1);
    CHECK(bad.failed() > 0);
    CHECK(bad.verdict() == "fail");
}

TEST_CASE("suite output is sorted and deterministic") {
    const std::vector<dpois::GridPoint> grid{{Rational(1, 3), Rational(2)}, {Rational(1), Rational(1, 2)},
                                             {Rational(-1, 4), Rational(1)}};
    const auto a = dpois::run_suite("s", grid, 5, {}, 7);
    const auto b = dpois::run_suite("s", {grid[2], grid[0], grid[1]}, 5, {}, 7);
    CHECK(dpois::to_json(a).dump() == dpois::to_json(b).dump());
    CHECK(std::is_sorted(a.checks.begin(), a.checks.end(), [](const auto& x, const auto& y) {
        return std::tie(x.identity_id, x.lambda, x.alpha, x.n) < std::tie(y.identity_id, y.lambda, y.alpha, y.n);
    }));
}

TEST_CASE("json report schema") {
    const auto r = dpois::run_suite("point", {{Rational(-1, 2), Rational(1)}}, 2, {}, 42);
    const auto j = dpois::to_json(r);
    CHECK(j["suite"] == "point");
    CHECK(j["seed"] == 42);
    REQUIRE(j["checks"].is_array());
    for (const auto& c : j["checks"]) {
        for (const char* key : {"id", "lambda", "alpha", "n", "lhs", "rhs", "method", "pass"}) CHECK(c.contains(key));
        CHECK((c["lhs"].is_string() || (c["lhs"].contains("lo") && c["lhs"].contains("hi"))));
    }
    CHECK(j["summary"]["total"] == r.checks.size());
    CHECK(j["summary"]["failed"] == 0);
    CHECK(dpois::to_json(Value(Rational(-3, 7))) == "-3/7");
}

TEST_CASE("Monte Carlo bands cover every moment family in repeated runs") {
    const auto p = params(Rational(-1, 2), 1);
    for (const bool truncated : {false, true}) {
        for (const auto f : {MomentFamily::Power, MomentFamily::Falling, MomentFamily::Rising,
                             MomentFamily::LambdaFalling, MomentFamily::Binomial}) {
            for (std::int64_t n = 1; n <= 3; ++n) {
                const MomentKind mk{f, n};
                const Value exact = dpois::moment_direct(mk, p, truncated);
                int inside = 0;
                for (std::uint64_t rep = 0; rep < 100; ++rep) {
                    const auto batch = dpois::sample(p, 77, 4000, truncated, rep);
                    inside += dpois::consistent(dpois::moment_mc(mk, p.lambda(), batch.draws).band(4.0), exact) ? 1 : 0;
                }
                CAPTURE(dpois::to_string(f));
                CAPTURE(truncated);
                CAPTURE(n);
                CHECK(inside >= 99);
            }
        }
    }
}

TEST_CASE("Monte Carlo suite") {
    const auto r = dpois::run_mc_suite({Rational(-1, 2), Rational(1)}, 42, 20000);
    CHECK(r.failed() == 0);
    for (const auto& c : r.checks) CHECK(c.method == dpois::CheckMethod::MonteCarlo);
    const bool tagged = std::any_of(r.checks.begin(), r.checks.end(),
                                    [](const auto& c) { return c.detail.find("no-closed-form") != std::string::npos; });
    CHECK(tagged);
    CHECK(dpois::to_json(r).dump() == dpois::to_json(dpois::run_mc_suite({Rational(-1, 2), Rational(1)}, 42, 20000)).dump());
}

}  // TEST_SUITE
