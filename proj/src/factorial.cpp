#include "dpois/factorial.hpp"

#include "dpois/errors.hpp"

namespace dpois {

std::optional<std::int64_t> DegenParam::reciprocal_integer() const {
    if (value_.is_zero()) return std::nullopt;
    return value_.reciprocal().to_int64();
}

Rational falling_factorial(const Rational& x, std::int64_t n) {
    if (n < 0) throw DomainError("falling factorial with negative length");
    Rational out(1);
    for (std::int64_t j = 0; j < n; ++j) out *= x - Rational(j);
    return out;
}

Rational rising_factorial(const Rational& x, std::int64_t n) {
    if (n < 0) throw DomainError("rising factorial with negative length");
    Rational out(1);
    for (std::int64_t j = 0; j < n; ++j) out *= x + Rational(j);
    return out;
}

Rational lambda_falling(const Rational& x, std::int64_t n, const DegenParam& lambda) {
    if (n < 0) throw DomainError("lambda-falling factorial with negative length");
    if (lambda.is_zero()) return x.pow(n);
    Rational out(1);
    for (std::int64_t j = 0; j < n; ++j) out *= x - Rational(j) * lambda.value();
    return out;
}

Rational degen_exp_exact(const Rational& x, const DegenParam& lambda, const Rational& t) {
    if (lambda.is_zero()) throw DomainError("degenerate exponential at lambda = 0 has no exact closed form");
    const Rational ratio = x / lambda.value();
    const auto exponent = ratio.to_int64();
    if (!exponent) {
        throw NonIntegerExponent("x/lambda = " + ratio.to_string() + " is not an integer");
    }
    const Rational base = Rational(1) + lambda.value() * t;
    if (base.is_zero() && *exponent < 0) {
        throw PoleError("1 + lambda t = 0 with negative exponent " + std::to_string(*exponent));
    }
    return base.pow(*exponent);
}

Rational degen_log_exact(const Rational& t, const DegenParam& lambda) {
    const auto power = lambda.value().to_int64();
    if (!power || *power == 0) {
        throw NonIntegerLambda("lambda = " + lambda.value().to_string() + " is not a nonzero integer");
    }
    const Rational base = Rational(1) + t;
    if (base.is_zero() && *power < 0) throw PoleError("1 + t = 0 with negative lambda");
    return (base.pow(*power) - Rational(1)) / lambda.value();
}

}  // namespace dpois
