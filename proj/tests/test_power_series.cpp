#include <doctest.h>

#include <random>
#include <sstream>

#include "dpois/errors.hpp"
#include "dpois/power_series.hpp"
#include "oracles.hpp"

using dpois::DegenParam;
using dpois::PowerSeries;
using dpois::Rational;

namespace {

PowerSeries series(std::size_t order, std::initializer_list<Rational> c) { return PowerSeries(order, c); }

PowerSeries random_series(std::mt19937_64& gen, std::size_t order, bool zero_constant) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= order; ++i) c.push_back(oracle::random_rational(gen, 9, 5));
    if (zero_constant) c[0] = Rational(0);
    return PowerSeries(order, c);
}

PowerSeries exp_series(std::size_t order) {
    std::vector<Rational> c;
    for (std::size_t n = 0; n <= order; ++n) c.push_back(dpois::factorial(static_cast<std::int64_t>(n)).reciprocal());
    return PowerSeries(order, c);
}

}  // namespace

TEST_SUITE("power-series") {

TEST_CASE("construction and order") {
    const PowerSeries z(3);
    CHECK(z.order() == 3);
    CHECK(z.coeffs().size() == 4);
    CHECK(series(1, {1, 2, 3}).coeffs().size() == 2);
    CHECK(series(3, {1}) == PowerSeries::constant(3, Rational(1)));
    CHECK(PowerSeries::variable(2) == series(2, {0, 1}));
    CHECK(series(3, {0, 0, 0, Rational(1, 3)}).egf(3) == Rational(2));
}

TEST_CASE("multiplication") {
    CHECK(dpois::ps_mul(series(2, {1, 1}), series(2, {1, -1})) == series(2, {1, 0, -1}));
    const PowerSeries f = series(4, {Rational(1, 2), 3, -1, 0, 7});
    CHECK(dpois::ps_mul(f, PowerSeries::constant(4, Rational(1))) == f);
    CHECK(dpois::ps_mul(PowerSeries::variable(2), PowerSeries::variable(2)) == series(2, {0, 0, 1}));
    CHECK_THROWS_AS(dpois::ps_mul(PowerSeries(2), PowerSeries(3)), dpois::OrderMismatch);
    CHECK_THROWS_AS(PowerSeries(2) + PowerSeries(3), dpois::OrderMismatch);
}

TEST_CASE("multiplication is associative and commutative") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_series(gen, 8, false), g = random_series(gen, 8, false), h = random_series(gen, 8, false);
        CHECK(dpois::ps_mul(f, g) == dpois::ps_mul(g, f));
        CHECK(dpois::ps_mul(dpois::ps_mul(f, g), h) == dpois::ps_mul(f, dpois::ps_mul(g, h)));
    }
}

TEST_CASE("powers by squaring agree with repeated products") {
    std::mt19937_64 gen(19);
    const auto f = random_series(gen, 10, false);
    PowerSeries acc = PowerSeries::constant(10, Rational(1));
    for (std::size_t k = 0; k <= 16; ++k) {
        CHECK(dpois::ps_pow(f, k) == acc);
        acc = dpois::ps_mul(acc, f);
    }
}

TEST_CASE("composition") {
    CHECK(dpois::ps_compose(series(2, {1, 1}), series(2, {0, 0, 1})) == series(2, {1, 0, 1}));
    const PowerSeries f = series(5, {2, -1, Rational(1, 3), 0, 4, 9});
    CHECK(dpois::ps_compose(f, PowerSeries::variable(5)) == f);
    CHECK(dpois::ps_compose(exp_series(3), series(3, {0, 2})) == series(3, {1, 2, 2, Rational(4, 3)}));
    CHECK_THROWS_AS(dpois::ps_compose(f, PowerSeries::constant(5, Rational(1))), dpois::NonzeroConstantTerm);
    CHECK_THROWS_AS(dpois::ps_compose(f, PowerSeries::variable(4)), dpois::OrderMismatch);
}

TEST_CASE("composition is associative") {
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_series(gen, 8, false);
        const auto g = random_series(gen, 8, true);
        const auto h = random_series(gen, 8, true);
        CHECK(dpois::ps_compose(dpois::ps_compose(f, g), h) == dpois::ps_compose(f, dpois::ps_compose(g, h)));
    }
}

TEST_CASE("degenerate exponential series") {
    CHECK(dpois::ps_degen_exp(Rational(1), DegenParam(Rational(1, 2)), 3) == series(3, {1, 1, Rational(1, 4), 0}));
    CHECK(dpois::ps_degen_exp(Rational(0), DegenParam(Rational(1, 3)), 4) == PowerSeries::constant(4, Rational(1)));
    CHECK(dpois::ps_degen_exp(Rational(1), DegenParam(Rational(0)), 2) == series(2, {1, 1, Rational(1, 2)}));
}

TEST_CASE("degenerate logarithm series") {
    CHECK(dpois::ps_degen_log(DegenParam(Rational(1, 2)), 2) == series(2, {0, 1, Rational(-1, 4)}));
    CHECK(dpois::ps_degen_log(DegenParam(Rational(1)), 3) == PowerSeries::variable(3));
    CHECK(dpois::ps_degen_log(DegenParam(Rational(0)), 3) == series(3, {0, 1, Rational(-1, 2), Rational(1, 3)}));
}

TEST_CASE("degenerate log is the compositional inverse of degenerate exp") {
    constexpr std::size_t N = 12;
    for (const Rational& l : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-1, 3),
                              Rational(1), Rational(2)}) {
        CAPTURE(l);
        const DegenParam lp(l);
        const PowerSeries e = dpois::ps_degen_exp(Rational(1), lp, N);
        const PowerSeries lg = dpois::ps_degen_log(lp, N);
        // e_lambda(log_lambda(1 + t)) = 1 + t
        CHECK(dpois::ps_compose(e, lg) == series(N, {1, 1}));
        // log_lambda(1 + (e_lambda(t) - 1)) = t
        CHECK(dpois::ps_compose(lg, e - PowerSeries::constant(N, Rational(1))) == PowerSeries::variable(N));
    }
}

TEST_CASE("degenerate exponential has binomial type, not the exponential law") {
    constexpr std::size_t N = 8;
    std::mt19937_64 gen(29);
    for (int trial = 0; trial < 10; ++trial) {
        const Rational x = oracle::random_rational(gen, 7, 4), y = oracle::random_rational(gen, 7, 4);
        const DegenParam l(oracle::random_rational(gen, 3, 4));
        const PowerSeries sum = dpois::ps_degen_exp(x + y, l, N);
        for (std::int64_t n = 0; n <= static_cast<std::int64_t>(N); ++n) {
            Rational conv(0);
            for (std::int64_t k = 0; k <= n; ++k) {
                conv += dpois::binomial(n, k) * dpois::lambda_falling(x, k, l) * dpois::lambda_falling(y, n - k, l);
            }
            CHECK(sum.egf(static_cast<std::size_t>(n)) == conv);
        }
    }
    // Adding exponents is fine (both sides are (1 + lambda t)^{(x+y)/lambda}),
    // but scaling the argument is not: e_lambda(2t) != e_lambda(t)^2 once lambda != 0.
    const DegenParam half(Rational(1, 2));
    const PowerSeries one = dpois::ps_degen_exp(Rational(1), half, 4);
    CHECK(dpois::ps_degen_exp(Rational(2), half, 4) == dpois::ps_mul(one, one));
    CHECK(dpois::ps_compose(one, series(4, {0, 2})) != dpois::ps_mul(one, one));
    const PowerSeries classical = dpois::ps_degen_exp(Rational(1), DegenParam(Rational(0)), 4);
    CHECK(dpois::ps_compose(classical, series(4, {0, 2})) == dpois::ps_mul(classical, classical));
}

TEST_CASE("csv dump") {
    std::ostringstream os;
    dpois::write_csv(os, series(2, {1, Rational(-1, 2)}));
    CHECK(os.str() == "n,coefficient\n0,1\n1,-1/2\n2,0\n");
}

}  // TEST_SUITE
