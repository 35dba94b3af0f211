#include "dpois/moments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <tuple>

#include "dpois/bell.hpp"
#include "dpois/bell_series.hpp"
#include "dpois/errors.hpp"
#include "dpois/triangles.hpp"
#include "parallel.hpp"

namespace dpois {

namespace {

using Checks = std::vector<IdentityCheckResult>;

IdentityCheckResult compare(std::string id, const Rational& lambda, const Rational& alpha, std::int64_t n, Value lhs,
                            Value rhs, std::string detail = {}) {
    IdentityCheckResult r;
    r.identity_id = std::move(id);
    r.lambda = lambda;
    r.alpha = alpha;
    r.n = n;
    r.method = lhs.is_exact() && rhs.is_exact() ? CheckMethod::ExactEnum : CheckMethod::CertifiedTruncation;
    r.pass = consistent(lhs, rhs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.detail = std::move(detail);
    return r;
}

Rational zero_truncation_scale(const PoissonParams& p) {
    return Rational(1) - p.normalizer().reciprocal();
}

// sum_{k=from}^{n} value(k) * weight(n, k)
Value weighted_row(std::int64_t n, std::int64_t from, const std::function<Value(std::int64_t)>& value,
                   const std::vector<Rational>& row) {
    Value sum(Rational(0));
    for (std::int64_t k = from; k <= n; ++k) sum += value(k) * row[static_cast<std::size_t>(k)];
    return sum;
}

std::vector<Rational> unsigned_row(std::int64_t n) {
    auto row = triangle_table(TriangleKind::Stirling1Classical, DegenParam()).row(n);
    for (auto& v : row) v = v.abs();
    return row;
}

Checks check_e6(const Rational& lambda, const Rational& alpha, std::int64_t n_max) {
    const DegenParam lam(lambda);
    Checks out;
    std::vector<std::vector<Rational>> s1, s2;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        s1.push_back(triangle_table(TriangleKind::Stirling1Deg, lam).row(n));
        s2.push_back(triangle_table(TriangleKind::Stirling2Deg, lam).row(n));
    }
    const auto product = [](const auto& a, const auto& b, std::int64_t n, std::int64_t k) {
        Rational sum(0);
        for (std::int64_t l = k; l <= n; ++l) {
            sum += a[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)] *
                   b[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
        }
        return sum;
    };
    for (std::int64_t n = 0; n <= n_max; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            const Rational delta(n == k ? 1 : 0);
            out.push_back(compare("E6", lambda, alpha, n, product(s1, s2, n, k), delta,
                                  "k=" + std::to_string(k) + " S1*S2"));
            out.push_back(compare("E6", lambda, alpha, n, product(s2, s1, n, k), delta,
                                  "k=" + std::to_string(k) + " S2*S1"));
        }
    }
    return out;
}

Checks check_t1(const Rational& lambda, const Rational& x, std::int64_t n_max) {
    const DegenParam lam(lambda);
    Checks out;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto s1 = triangle_table(TriangleKind::Stirling1Deg, lam).row(n);
        const Value rhs = weighted_row(n, 0, [&](std::int64_t k) { return Value(fully_degen_bell(k, x, lam)); }, s1);
        out.push_back(compare("T1", lambda, x, n, lambda_falling(x, n, lam), rhs));
    }
    return out;
}

Checks check_c2(const Rational& lambda, const Rational& x, std::int64_t n_max) {
    const DegenParam lam(lambda);
    const auto gf = series::fully_degen_bell(static_cast<std::size_t>(n_max), x, lam);
    Checks out;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        out.push_back(compare("C2", lambda, x, n, fully_degen_bell(n, x, lam), gf[static_cast<std::size_t>(n)],
                              "finite sum vs generating function"));
    }
    return out;
}

Checks check_e11(const Rational& x, std::int64_t n_max) {
    const auto classical = series::bell_classical(static_cast<std::size_t>(n_max), x);
    Checks out;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const Rational& expected = classical[static_cast<std::size_t>(n)];
        out.push_back(compare("E11", Rational(0), x, n, fully_degen_bell(n, x, DegenParam()), expected,
                              "fully degenerate Bell at lambda=0"));
        out.push_back(compare("E11", Rational(0), x, n, bell_deg_closed_form(n, x, DegenParam()), expected,
                              "degenerate Bell at lambda=0"));
    }
    return out;
}

Checks check_gate(const PoissonParams& p, const EvalPoint& pt, std::int64_t n_max, const TruncationBudget& budget) {
    Checks out;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        out.push_back(compare("GBEL", p.lambda().value(), p.alpha(), n,
                              bell_deg_closed_form(n, p.alpha(), p.lambda()), bell_deg(n, pt, budget),
                              "Stirling closed form vs Dobinski sum"));
    }
    return out;
}

Checks check_moment(const std::string& id, MomentFamily family, bool truncated, const PoissonParams& p,
                    std::int64_t n_max, const TruncationBudget& budget) {
    Checks out;
    for (std::int64_t n = truncated ? 1 : 0; n <= n_max; ++n) {
        const MomentKind mk{family, n};
        out.push_back(compare(id, p.lambda().value(), p.alpha(), n, moment_direct(mk, p, truncated, budget),
                              moment_closed_form(mk, p, truncated, budget),
                              std::string("direct vs closed form, ") + std::string(to_string(family))));
    }
    return out;
}

Checks check_t3(const PoissonParams& p, const EvalPoint& pt, std::int64_t n_max, const TruncationBudget& budget) {
    Checks out;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto s1 = triangle_table(TriangleKind::Stirling1Deg, p.lambda()).row(n);
        const Value rhs = weighted_row(n, 0, [&](std::int64_t k) { return bell_deg(k, pt, budget); }, s1);
        out.push_back(compare("T3", p.lambda().value(), p.alpha(), n,
                              moment_direct({MomentFamily::Falling, n}, p, false, budget), rhs,
                              "E[(X)_n] vs sum Bel_k S1(n,k)"));
    }
    return out;
}

Checks check_t4(const PoissonParams& p, const EvalPoint& pt, std::int64_t n_max, const TruncationBudget& budget) {
    Checks out = check_moment("T4", MomentFamily::Falling, false, p, n_max, budget);
    const Rational& lam = p.lambda().value();
    const Rational shift = Rational(1) + lam * p.alpha();
    for (std::int64_t m = 0; m <= n_max; ++m) {
        const auto s1 = triangle_table(TriangleKind::Stirling1Deg, p.lambda()).row(m);
        const Value lhs =
            weighted_row(m, 0, [&](std::int64_t k) { return bell_deg(k, pt, budget); }, s1) * shift.pow(m);
        const Rational rhs = p.alpha().pow(m) * lambda_falling(Rational(1), m, p.lambda());
        out.push_back(compare("T4", lam, p.alpha(), m, lhs, rhs, "(1+l a)^m sum Bel_k S1(m,k) = a^m (1)_{m,l}"));
    }
    return out;
}

Checks check_t6(const PoissonParams& p, const EvalPoint& pt, std::int64_t n_max, const TruncationBudget& budget) {
    Checks out = check_moment("T6", MomentFamily::Rising, false, p, n_max, budget);
    const auto dimorphic_gf = series::dimorphic_bell(static_cast<std::size_t>(n_max), p.alpha(), p.lambda());
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const Value rhs = weighted_row(
            n, 0, [&](std::int64_t k) { return Value(dimorphic_gf[static_cast<std::size_t>(k)]); }, unsigned_row(n));
        out.push_back(compare("T6", p.lambda().value(), p.alpha(), n, lah_bell_deg(n, pt, budget), rhs,
                              "B^L_n = sum B_k |S1(n,k)|"));
    }
    return out;
}

Checks check_t7(const Rational& lambda, const Rational& x, std::int64_t n_max, const TruncationBudget& budget) {
    const EvalPoint pt = EvalPoint::make(x, DegenParam(lambda));
    if (pt.regime == EvalRegime::ClassicalLimit) throw RegimeError("T7 needs lambda != 0");
    const auto gf = series::lah_bell_zt(static_cast<std::size_t>(n_max), x, pt.lambda);
    Checks out;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        out.push_back(compare("T7", lambda, x, n, gf[static_cast<std::size_t>(n)], lah_bell_zt(n, pt, budget),
                              "generating function vs B^L_n/(1 - e^{-1})"));
    }
    return out;
}

Checks check_t10(const PoissonParams& p, const EvalPoint& pt, std::int64_t n_max, const TruncationBudget& budget) {
    Checks out;
    const Rational scale = zero_truncation_scale(p);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const auto s1 = triangle_table(TriangleKind::Stirling1Deg, p.lambda()).row(n);
        const Value rhs = weighted_row(n, 1, [&](std::int64_t k) { return bell_deg(k, pt, budget); }, s1) / scale;
        out.push_back(compare("T10", p.lambda().value(), p.alpha(), n,
                              moment_direct({MomentFamily::Falling, n}, p, true, budget), rhs,
                              "E*[(X)_n] vs sum Bel_k S1(n,k)/(1 - e^{-1})"));
    }
    return out;
}

bool needs_distribution(std::string_view id) {
    return id != "T1" && id != "C2" && id != "E6" && id != "E11" && id != "T7";
}

}  // namespace

std::string_view to_string(MomentFamily family) {
    switch (family) {
        case MomentFamily::Power: return "power";
        case MomentFamily::Falling: return "falling";
        case MomentFamily::Rising: return "rising";
        case MomentFamily::LambdaFalling: return "lambda-falling";
        case MomentFamily::Binomial: return "binomial";
    }
    return "unknown";
}

std::string_view to_string(CheckMethod method) {
    switch (method) {
        case CheckMethod::ExactEnum: return "ExactEnum";
        case CheckMethod::CertifiedTruncation: return "CertifiedTruncation";
        case CheckMethod::MonteCarlo: return "MonteCarlo";
    }
    return "unknown";
}

Rational moment_integrand(const MomentKind& mk, std::int64_t i, const DegenParam& lambda) {
    const Rational x(i);
    switch (mk.family) {
        case MomentFamily::Power: return x.pow(mk.n);
        case MomentFamily::Falling: return falling_factorial(x, mk.n);
        case MomentFamily::Rising: return rising_factorial(x, mk.n);
        case MomentFamily::LambdaFalling: return lambda_falling(x, mk.n, lambda);
        case MomentFamily::Binomial: return rising_factorial(x, mk.n) / factorial(mk.n);
    }
    throw DomainError("unknown moment family");
}

Value moment_direct(const MomentKind& mk, const PoissonParams& p, bool truncated, const TruncationBudget& budget) {
    if (mk.n < 0) throw DomainError("negative moment order");
    const DegenParam& lam = p.lambda();
    return expectation(
        p, truncated, [&](std::int64_t i) { return moment_integrand(mk, i, lam); },
        static_cast<std::size_t>(std::max<std::int64_t>(1, mk.n)), budget);
}

Value moment_closed_form(const MomentKind& mk, const PoissonParams& p, bool truncated,
                         const TruncationBudget& budget) {
    const std::int64_t n = mk.n;
    if (n < 0) throw DomainError("negative moment order");
    const DegenParam& lam = p.lambda();
    const Rational& a = p.alpha();
    const auto order = static_cast<std::size_t>(n);

    if (truncated) {
        if (mk.family == MomentFamily::Rising || mk.family == MomentFamily::Power) {
            throw NoClosedForm(std::string("no closed form for zero-truncated ") + std::string(to_string(mk.family)) +
                               " moments");
        }
        if (n == 0) return Value(Rational(1));
        const Rational scale = zero_truncation_scale(p);
        switch (mk.family) {
            case MomentFamily::Falling:
                return Value(a.pow(n) * lambda_falling(Rational(1), n, lam) /
                             (scale * (Rational(1) + lam.value() * a).pow(n)));
            case MomentFamily::LambdaFalling: return Value(bell_deg_closed_form(n, a, lam) / scale);
            case MomentFamily::Binomial: return Value(series::lah_bell_zt(order, a, lam)[order] / factorial(n));
            default: break;
        }
        throw NoClosedForm("no closed form");
    }

    switch (mk.family) {
        case MomentFamily::Falling:
            return Value(a.pow(n) * lambda_falling(Rational(1), n, lam) / (Rational(1) + lam.value() * a).pow(n));
        case MomentFamily::LambdaFalling: return Value(bell_deg_closed_form(n, a, lam));
        case MomentFamily::Binomial: return Value(series::lah_bell_deg(order, a, lam)[order] / factorial(n));
        case MomentFamily::Rising: {
            const EvalPoint pt = EvalPoint::make(a, lam);
            return weighted_row(n, 0, [&](std::int64_t k) { return dimorphic_bell(k, pt, budget); }, unsigned_row(n));
        }
        case MomentFamily::Power: return dimorphic_bell(n, EvalPoint::make(a, lam), budget);
    }
    throw NoClosedForm("no closed form");
}

Value McEstimate::band(double sigmas) const {
    return Value::interval(Rational::from_double(mean - sigmas * std_error),
                           Rational::from_double(mean + sigmas * std_error));
}

McEstimate moment_mc(const MomentKind& mk, const DegenParam& lambda, const std::vector<std::int64_t>& draws) {
    McEstimate est;
    est.count = draws.size();
    if (draws.empty()) return est;
    std::vector<double> cache;
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t seen = 0;
    for (const std::int64_t i : draws) {
        const auto idx = static_cast<std::size_t>(i);
        while (cache.size() <= idx) {
            cache.push_back(moment_integrand(mk, static_cast<std::int64_t>(cache.size()), lambda).to_double());
        }
        const double v = cache[idx];
        ++seen;
        const double delta = v - mean;
        mean += delta / static_cast<double>(seen);
        m2 += delta * (v - mean);
    }
    est.mean = mean;
    if (seen > 1) {
        const double variance = m2 / static_cast<double>(seen - 1);
        est.std_error = std::sqrt(variance / static_cast<double>(seen));
    }
    return est;
}

McEstimate moment_mc(const MomentKind& mk, const PoissonParams& p, bool truncated, std::uint64_t seed,
                     std::size_t count, std::uint64_t stream) {
    const SampleBatch batch = sample(p, seed, count, truncated, stream);
    return moment_mc(mk, p.lambda(), batch.draws);
}

const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids{"E6", "T1",  "C2", "E11", "GBEL", "E12", "T3", "T4",
                                              "T5", "T6",  "T7", "T8",  "T9",   "T10", "C8"};
    return ids;
}

std::vector<IdentityCheckResult> verify_identity(std::string_view id, const Rational& lambda, const Rational& alpha,
                                                 std::int64_t n_max, const TruncationBudget& budget) {
    if (std::find(identity_ids().begin(), identity_ids().end(), id) == identity_ids().end()) {
        throw UnknownIdentity("unknown identity id '" + std::string(id) + "'");
    }
    if (n_max < 0) throw DomainError("n_max must be nonnegative");
    if (id == "E6") return check_e6(lambda, alpha, n_max);
    if (id == "T1") return check_t1(lambda, alpha, n_max);
    if (id == "C2") return check_c2(lambda, alpha, n_max);
    if (id == "E11") return check_e11(alpha, n_max);
    if (id == "T7") return check_t7(lambda, alpha, n_max, budget);

    const PoissonParams p = classify_params(DegenParam(lambda), alpha);
    const EvalPoint pt = EvalPoint::make(alpha, DegenParam(lambda));
    if (id == "GBEL") return check_gate(p, pt, n_max, budget);
    if (id == "E12") return check_moment("E12", MomentFamily::LambdaFalling, false, p, n_max, budget);
    if (id == "T3") return check_t3(p, pt, n_max, budget);
    if (id == "T4") return check_t4(p, pt, n_max, budget);
    if (id == "T5") return check_moment("T5", MomentFamily::Binomial, false, p, n_max, budget);
    if (id == "T6") return check_t6(p, pt, n_max, budget);
    if (id == "T8") return check_moment("T8", MomentFamily::Falling, true, p, n_max, budget);
    if (id == "T9") return check_moment("T9", MomentFamily::LambdaFalling, true, p, n_max, budget);
    if (id == "T10") return check_t10(p, pt, n_max, budget);
    return check_moment("C8", MomentFamily::Binomial, true, p, n_max, budget);
}

std::vector<GridPoint> default_exact_grid() {
    std::vector<GridPoint> grid;
    for (std::int64_t m = 1; m <= 5; ++m) {
        for (const Rational& a : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
            grid.push_back({Rational(1, m), a});
        }
    }
    return grid;
}

std::size_t SuiteReport::failed() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

std::string SuiteReport::verdict() const {
    if (checks.empty()) return "vacuous pass";
    return failed() == 0 ? "pass" : "fail";
}

namespace {

void sort_checks(std::vector<IdentityCheckResult>& checks) {
    std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) {
        return std::tie(a.identity_id, a.lambda, a.alpha, a.n) < std::tie(b.identity_id, b.lambda, b.alpha, b.n);
    });
}

IdentityCheckResult failed_check(const std::string& id, const GridPoint& pt, const std::string& why) {
    IdentityCheckResult r;
    r.identity_id = id;
    r.lambda = pt.lambda;
    r.alpha = pt.alpha;
    r.pass = false;
    r.detail = why;
    return r;
}

Checks run_point(const GridPoint& pt, std::int64_t n_max, const TruncationBudget& budget) {
    Checks out;
    bool gate_ok = true;
    for (const auto& id : identity_ids()) {
        if (needs_distribution(id)) {
            try {
                classify_params(DegenParam(pt.lambda), pt.alpha);
            } catch (const Error&) {
                continue;  // grid point outside the distribution regimes: polynomial identities only
            }
        }
        try {
            auto checks = verify_identity(id, pt.lambda, pt.alpha, n_max, budget);
            if (id == "GBEL") {
                gate_ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
            }
            if (!gate_ok && (id == "E12" || id == "T9")) {
                for (auto& c : checks) {
                    c.pass = false;
                    c.detail = "closed form for Bel failed its Dobinski gate";
                }
            }
            for (auto& c : checks) out.push_back(std::move(c));
        } catch (const Error& e) {
            out.push_back(failed_check(id, pt, e.what()));
        }
    }
    return out;
}

}  // namespace

SuiteReport run_suite(std::string name, const std::vector<GridPoint>& grid, std::int64_t n_max,
                      const TruncationBudget& budget, std::uint64_t seed) {
    SuiteReport report;
    report.suite = std::move(name);
    report.seed = seed;

    auto per_point =
        detail::parallel_map(grid.size(), [&](std::size_t i) { return run_point(grid[i], n_max, budget); });
    for (auto& checks : per_point) {
        for (auto& c : checks) report.checks.push_back(std::move(c));
    }
    sort_checks(report.checks);
    return report;
}

SuiteReport run_mc_suite(const GridPoint& point, std::uint64_t seed, std::size_t count, std::int64_t n_max,
                         double sigmas, const TruncationBudget& budget) {
    const PoissonParams p = classify_params(DegenParam(point.lambda), point.alpha);

    struct Job {
        std::string id;
        MomentKind mk;
        bool truncated;
    };
    const auto id_for = [](MomentFamily f, bool truncated) -> std::string {
        if (!truncated) {
            switch (f) {
                case MomentFamily::Power: return "E26";
                case MomentFamily::Falling: return "T4";
                case MomentFamily::Rising: return "T6";
                case MomentFamily::LambdaFalling: return "E12";
                case MomentFamily::Binomial: return "T5";
            }
        }
        switch (f) {
            case MomentFamily::Power: return "NCF-POWER-ZT";
            case MomentFamily::Falling: return "T8";
            case MomentFamily::Rising: return "NCF-RISING-ZT";
            case MomentFamily::LambdaFalling: return "T9";
            case MomentFamily::Binomial: return "C8";
        }
        return "?";
    };

    std::vector<Job> jobs;
    for (bool truncated : {false, true}) {
        for (auto f : {MomentFamily::Power, MomentFamily::Falling, MomentFamily::Rising, MomentFamily::LambdaFalling,
                       MomentFamily::Binomial}) {
            for (std::int64_t n = 0; n <= n_max; ++n) jobs.push_back({id_for(f, truncated), {f, n}, truncated});
        }
    }

    auto results = detail::parallel_map(jobs.size(), [&](std::size_t c) {
        const Job& job = jobs[c];
        IdentityCheckResult r;
        r.identity_id = job.id;
        r.lambda = point.lambda;
        r.alpha = point.alpha;
        r.n = job.mk.n;
        r.method = CheckMethod::MonteCarlo;
        try {
            Value reference(Rational(0));
            std::string source = "closed form";
            try {
                reference = moment_closed_form(job.mk, p, job.truncated, budget);
            } catch (const NoClosedForm&) {
                reference = moment_direct(job.mk, p, job.truncated, budget);
                source = "direct sum (no-closed-form)";
            }
            const McEstimate est = moment_mc(job.mk, p, job.truncated, seed, count, c);
            r.lhs = est.band(sigmas);
            r.rhs = reference;
            r.pass = consistent(r.lhs, r.rhs);
            r.detail = std::string(to_string(job.mk.family)) + (job.truncated ? " zero-truncated" : "") +
                       ", MC mean " + std::to_string(est.mean) + " +- " + std::to_string(est.std_error) +
                       " vs " + source + ", stream " + std::to_string(c);
        } catch (const Error& e) {
            r.pass = false;
            r.detail = e.what();
        }
        return r;
    });

    SuiteReport report;
    report.suite = "mc";
    report.seed = seed;
    report.checks = std::move(results);
    sort_checks(report.checks);
    return report;
}

}  // namespace dpois
