#include "dpois/bell.hpp"

#include <algorithm>
#include <functional>

#include "dpois/errors.hpp"
#include "dpois/triangles.hpp"

namespace dpois {

namespace {

using Weight = std::function<Rational(std::int64_t)>;

// e_lambda^{-1}(x) sum_k x^k (1)_{k,lambda} / k! * weight(k).
Value dobinski(std::int64_t n, const EvalPoint& p, const TruncationBudget& budget, const Weight& weight) {
    if (n < 0) throw DomainError("negative polynomial index");
    if (p.regime == EvalRegime::ClassicalLimit) {
        throw RegimeError("Dobinski evaluation needs 1/lambda to be a nonzero integer (lambda = 0 given)");
    }
    if (p.x.is_zero()) return Value(weight(0));

    const Rational& lam = p.lambda.value();
    const Rational inv_norm = p.normalizer().reciprocal();

    if (p.regime == EvalRegime::FiniteDobinski) {
        const std::int64_t m = p.reciprocal_magnitude();
        Rational base(1);  // x^k (1)_{k,lambda} / k!
        Rational sum(0);
        for (std::int64_t k = 0; k <= m; ++k) {
            if (k > 0) base *= p.x * (Rational(1) - Rational(k - 1) * lam) / Rational(k);
            sum += base * weight(k);
        }
        return Value(sum * inv_norm);
    }

    // Truncated regime: |term_{k+1}/term_k| = |x| (1 + k|lambda|)/(k + 1) times
    // the weight ratio. Both factors are non-increasing for k >= max(1, n) since
    // |lambda| <= 1 and every weight used here is a product of n factors
    // (k + c_j) with c_j >= 0.
    RatioSeries series;
    series.limit_ratio = (lam * p.x).abs();
    series.monotone_from = static_cast<std::size_t>(std::max<std::int64_t>(1, n));
    series.term = [base = inv_norm, x = p.x, lam, &weight](std::size_t k) mutable {
        const auto ki = static_cast<std::int64_t>(k);
        if (ki > 0) base *= x * (Rational(1) - Rational(ki - 1) * lam) / Rational(ki);
        return base * weight(ki);
    };
    return sum_certified(series, budget);
}

}  // namespace

std::string_view to_string(EvalRegime regime) {
    switch (regime) {
        case EvalRegime::FiniteDobinski: return "finite-dobinski";
        case EvalRegime::Truncated: return "truncated";
        case EvalRegime::ClassicalLimit: return "classical-limit";
    }
    return "unknown";
}

EvalPoint EvalPoint::make(Rational x, DegenParam lambda) {
    EvalPoint p{std::move(x), std::move(lambda), EvalRegime::ClassicalLimit};
    if (p.lambda.is_zero()) return p;
    const auto inv = p.lambda.reciprocal_integer();
    if (!inv) {
        throw RegimeError("lambda = " + p.lambda.value().to_string() +
                          " is not the reciprocal of an integer; no exact Dobinski regime");
    }
    if (*inv > 0) {
        if ((Rational(1) + p.lambda.value() * p.x).is_zero()) {
            throw RegimeError("1 + lambda x = 0: e_lambda(x) vanishes and has no inverse");
        }
        p.regime = EvalRegime::FiniteDobinski;
        return p;
    }
    if ((p.lambda.value() * p.x).abs() >= Rational(1)) {
        throw RegimeError("truncated regime needs |lambda x| < 1, got |" + p.lambda.value().to_string() + " * " +
                          p.x.to_string() + "|");
    }
    p.regime = EvalRegime::Truncated;
    return p;
}

std::int64_t EvalPoint::reciprocal_magnitude() const {
    const auto inv = lambda.reciprocal_integer();
    if (!inv) throw RegimeError("lambda is not the reciprocal of an integer");
    return *inv < 0 ? -*inv : *inv;
}

Rational EvalPoint::normalizer() const {
    if (regime == EvalRegime::ClassicalLimit) throw RegimeError("e_lambda(x) is not rational at lambda = 0");
    return degen_exp_exact(Rational(1), lambda, x);
}

Value bell_deg(std::int64_t n, const EvalPoint& p, const TruncationBudget& budget) {
    return dobinski(n, p, budget, [&](std::int64_t k) { return lambda_falling(Rational(k), n, p.lambda); });
}

Rational bell_deg_closed_form(std::int64_t n, const Rational& x, const DegenParam& lambda) {
    if (n < 0) throw DomainError("negative polynomial index");
    const Rational shift = Rational(1) + lambda.value() * x;
    if (shift.is_zero()) throw DivisionByZero("1 + lambda x = 0");
    const auto row = triangle_table(TriangleKind::Stirling2Deg, lambda).row(n);
    const Rational step = x / shift;
    Rational sum(0);
    Rational power(1);  // x^k (1)_{k,lambda} / (1 + lambda x)^k
    for (std::int64_t k = 0; k <= n; ++k) {
        if (k > 0) power *= step * (Rational(1) - Rational(k - 1) * lambda.value());
        sum += row[static_cast<std::size_t>(k)] * power;
    }
    return sum;
}

Rational fully_degen_bell(std::int64_t n, const Rational& x, const DegenParam& lambda) {
    if (n < 0) throw DomainError("negative polynomial index");
    const auto row = triangle_table(TriangleKind::Stirling2Deg, lambda).row(n);
    Rational sum(0);
    Rational lf(1);
    for (std::int64_t k = 0; k <= n; ++k) {
        if (k > 0) lf *= x - Rational(k - 1) * lambda.value();
        sum += row[static_cast<std::size_t>(k)] * lf;
    }
    return sum;
}

Value dimorphic_bell(std::int64_t n, const EvalPoint& p, const TruncationBudget& budget) {
    return dobinski(n, p, budget, [n](std::int64_t k) { return Rational(k).pow(n); });
}

Rational lah_bell(std::int64_t n, const Rational& x) {
    if (n < 0) throw DomainError("negative polynomial index");
    const auto row = triangle_table(TriangleKind::Lah, DegenParam()).row(n);
    Rational sum(0);
    Rational power(1);
    for (std::int64_t k = 0; k <= n; ++k) {
        sum += row[static_cast<std::size_t>(k)] * power;
        power *= x;
    }
    return sum;
}

Value lah_bell_deg(std::int64_t n, const EvalPoint& p, const TruncationBudget& budget) {
    return dobinski(n, p, budget, [n](std::int64_t k) { return rising_factorial(Rational(k), n); });
}

Value lah_bell_zt(std::int64_t n, const EvalPoint& p, const TruncationBudget& budget) {
    if (n < 0) throw DomainError("negative polynomial index");
    if (p.regime == EvalRegime::ClassicalLimit) throw RegimeError("zero-truncated Lah-Bell needs lambda != 0");
    if (n == 0) return Value(Rational(1));
    if (p.x.is_zero()) throw DivisionByZero("1 - e_lambda^{-1}(0) = 0");
    const Rational scale = Rational(1) - p.normalizer().reciprocal();
    return lah_bell_deg(n, p, budget) / scale;
}

}  // namespace dpois
