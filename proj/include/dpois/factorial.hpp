#pragma once

#include <cstdint>
#include <optional>

#include "dpois/rational.hpp"

namespace dpois {

/// The degeneracy parameter lambda. Zero is a valid value: every finite-sum
/// quantity is defined there and reduces to its classical counterpart.
class DegenParam {
public:
    DegenParam() = default;
    explicit DegenParam(Rational value) : value_(std::move(value)) {}

    const Rational& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }

    /// 1/lambda when it is an integer (so lambda = 1/m for some nonzero m).
    std::optional<std::int64_t> reciprocal_integer() const;

    friend bool operator==(const DegenParam&, const DegenParam&) = default;
    friend auto operator<=>(const DegenParam&, const DegenParam&) = default;

private:
    Rational value_;
};

/// (x)_n = x(x-1)...(x-n+1); (x)_0 = 1.
Rational falling_factorial(const Rational& x, std::int64_t n);

/// <x>_n = x(x+1)...(x+n-1); <x>_0 = 1.
Rational rising_factorial(const Rational& x, std::int64_t n);

/// (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda); (x)_{0,lambda} = 1 and
/// (x)_{n,0} = x^n.
Rational lambda_falling(const Rational& x, std::int64_t n, const DegenParam& lambda);

/// e_lambda^x(t) = (1 + lambda t)^{x/lambda}, for lambda != 0 and x/lambda an
/// integer. Throws NonIntegerExponent when the exponent is not integral (the
/// value is then irrational in general) and PoleError when 1 + lambda t = 0
/// with a negative exponent.
Rational degen_exp_exact(const Rational& x, const DegenParam& lambda, const Rational& t);

/// log_lambda(1 + t) = ((1 + t)^lambda - 1) / lambda, for lambda a nonzero
/// integer. Throws NonIntegerLambda otherwise.
Rational degen_log_exact(const Rational& t, const DegenParam& lambda);

}  // namespace dpois
