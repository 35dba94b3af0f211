#include <doctest.h>

#include <random>

#include "dpois/errors.hpp"
#include "dpois/factorial.hpp"
#include "dpois/rational.hpp"
#include "oracles.hpp"

using dpois::DegenParam;
using dpois::Rational;

namespace {
DegenParam lam(std::int64_t p, std::int64_t q = 1) { return DegenParam(Rational(p, q)); }
}  // namespace

TEST_SUITE("core-arith") {

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational::parse("-3/7").to_string() == "-3/7");
    CHECK(Rational::parse("+6/4") == Rational(3, 2));
    CHECK(Rational::parse("12").is_integer());
    CHECK(Rational::parse("0/5").to_string() == "0");
    CHECK_THROWS_AS(Rational::parse("1/0"), dpois::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), dpois::ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), dpois::ParseError);
    CHECK_THROWS_AS(Rational::parse(""), dpois::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), dpois::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), dpois::ParseError);
}

TEST_CASE("rational arithmetic is exact and division by zero is an error") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == b);
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK_THROWS_AS(a / Rational(0), dpois::DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 0), dpois::DivisionByZero);
    CHECK_THROWS_AS(Rational(0).reciprocal(), dpois::DivisionByZero);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), dpois::DivisionByZero);
    CHECK(Rational::from_double(0.375) == Rational(3, 8));
    CHECK(Rational(-7, 2).abs() == Rational(7, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));

    // Exactness far beyond 64 bits.
    Rational big = Rational(3).pow(200) / Rational(2).pow(150);
    CHECK(big * Rational(2).pow(150) / Rational(3).pow(200) == Rational(1));
}

TEST_CASE("random rational round trips through text") {
    std::mt19937_64 gen(11);
    for (int i = 0; i < 200; ++i) {
        const Rational r = oracle::random_rational(gen, 1000000, 1000000);
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("falling factorial") {
    CHECK(dpois::falling_factorial(Rational(3), 2) == Rational(6));
    CHECK(dpois::falling_factorial(Rational(5, 7), 0) == Rational(1));
    CHECK(dpois::falling_factorial(Rational(2), 3) == Rational(0));
}

TEST_CASE("rising factorial") {
    CHECK(dpois::rising_factorial(Rational(2), 2) == Rational(6));
    for (int n = 0; n <= 12; ++n) CHECK(dpois::rising_factorial(Rational(1), n) == dpois::factorial(n));
    CHECK(dpois::rising_factorial(Rational(-4, 3), 0) == Rational(1));
}

TEST_CASE("lambda falling factorial") {
    CHECK(dpois::lambda_falling(Rational(1), 2, lam(1, 2)) == Rational(1, 2));
    CHECK(dpois::lambda_falling(Rational(1), 3, lam(1, 2)) == Rational(0));
    CHECK(dpois::lambda_falling(Rational(1), 2, lam(-1, 2)) == Rational(3, 2));
    CHECK(dpois::lambda_falling(Rational(3, 2), 4, lam(0)) == Rational(3, 2).pow(4));
    CHECK(dpois::lambda_falling(Rational(9), 0, lam(5)) == Rational(1));
}

TEST_CASE("lambda falling at lambda = 1 is the falling factorial") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 10; ++trial) {
        const Rational x = oracle::random_rational(gen, 50, 9);
        for (int n = 0; n <= 20; ++n) {
            CHECK(dpois::lambda_falling(x, n, lam(1)) == dpois::falling_factorial(x, n));
        }
    }
}

TEST_CASE("lambda falling step relation") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational x = oracle::random_rational(gen, 30, 7);
        const DegenParam l(oracle::random_rational(gen, 10, 5));
        for (int n = 0; n < 15; ++n) {
            CHECK(dpois::lambda_falling(x, n + 1, l) == (x - Rational(n) * l.value()) * dpois::lambda_falling(x, n, l));
        }
    }
}

TEST_CASE("degenerate exponential closed form") {
    CHECK(dpois::degen_exp_exact(Rational(1), lam(1, 2), Rational(1)) == Rational(9, 4));
    CHECK(dpois::degen_exp_exact(Rational(1), lam(-1, 2), Rational(1)) == Rational(4));
    CHECK(dpois::degen_exp_exact(Rational(0), lam(1, 3), Rational(7)) == Rational(1));
    CHECK(dpois::degen_exp_exact(Rational(0), lam(-2), Rational(5)) == Rational(1));
    CHECK_THROWS_AS(dpois::degen_exp_exact(Rational(1), lam(2), Rational(1)), dpois::NonIntegerExponent);
    CHECK_THROWS_AS(dpois::degen_exp_exact(Rational(1), lam(-1, 2), Rational(2)), dpois::PoleError);
    CHECK(dpois::degen_exp_exact(Rational(1), lam(1, 2), Rational(-2)) == Rational(0));
    CHECK_THROWS_AS(dpois::degen_exp_exact(Rational(1), lam(0), Rational(1)), dpois::DomainError);
}

TEST_CASE("degenerate logarithm closed form") {
    CHECK(dpois::degen_log_exact(Rational(1), lam(1)) == Rational(1));
    CHECK(dpois::degen_log_exact(Rational(1), lam(2)) == Rational(3, 2));
    // ((1/2)^{-1} - 1) / (-1) evaluated directly.
    CHECK(dpois::degen_log_exact(Rational(-1, 2), lam(-1)) == Rational(-1));
    CHECK_THROWS_AS(dpois::degen_log_exact(Rational(1), lam(1, 2)), dpois::NonIntegerLambda);
    CHECK_THROWS_AS(dpois::degen_log_exact(Rational(1), lam(0)), dpois::NonIntegerLambda);
    CHECK_THROWS_AS(dpois::degen_log_exact(Rational(-1), lam(-1)), dpois::PoleError);
}

TEST_CASE("exp and log round trip at integer lambda") {
    // e_lambda^lambda(log_lambda(1 + t)) = (1 + t)^lambda, which keeps the
    // exponent x/lambda = 1 integral for every integer lambda; at lambda = +-1
    // this is literally e_lambda(log_lambda(1 + t)) = 1 + t.
    std::mt19937_64 gen(2024);
    for (const std::int64_t l : {1, 2, -1, -2}) {
        const DegenParam lp{Rational(l)};
        int tested = 0;
        while (tested < 20) {
            const Rational t = oracle::random_rational(gen, 40, 13);
            if (t <= Rational(-1)) continue;  // keep 1 + t > 0
            const Rational s = dpois::degen_log_exact(t, lp);
            if ((Rational(1) + lp.value() * s).is_zero()) continue;
            CHECK(dpois::degen_exp_exact(lp.value(), lp, s) == (Rational(1) + t).pow(l));
            if (l == 1 || l == -1) CHECK(dpois::degen_exp_exact(Rational(1), lp, s) == Rational(1) + t);
            ++tested;
        }
    }
}

TEST_CASE("factorial and binomial") {
    CHECK(dpois::factorial(0) == Rational(1));
    CHECK(dpois::factorial(10) == Rational(3628800));
    CHECK(dpois::binomial(6, 2) == Rational(15));
    CHECK(dpois::binomial(4, 5) == Rational(0));
    CHECK(dpois::binomial(4, -1) == Rational(0));
}

}  // TEST_SUITE
