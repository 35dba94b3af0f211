#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dpois {

/// Arbitrary-precision rational kept in canonical form (positive
/// denominator, numerator and denominator coprime) after every operation.
/// Backed by GMP's mpq_class.
///
/// Division by zero raises DivisionByZero; it never yields a value.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT: integers promote implicitly
    Rational(std::int64_t numerator, std::int64_t denominator);
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(mpq_class value);

    /// Exact value of a finite double (every finite double is a dyadic rational).
    static Rational from_double(double value);

    /// Parses "p/q" or "p" with an optional leading sign on p. q must be a
    /// positive integer. The result is canonicalized, so "2/4" parses as 1/2.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// The value as a signed 64-bit integer, when it is an integer that fits.
    std::optional<std::int64_t> to_int64() const;

    double to_double() const { return value_.get_d(); }

    /// Canonical text: "p/q", or "p" when q = 1.
    std::string to_string() const;

    Rational abs() const;
    Rational reciprocal() const;

    /// Integer power; negative exponents invert. 0^0 = 1.
    Rational pow(std::int64_t exponent) const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// n! as a rational.
Rational factorial(std::int64_t n);

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
Rational binomial(std::int64_t n, std::int64_t k);

}  // namespace dpois
