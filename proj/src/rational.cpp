#include "dpois/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <utility>

#include "dpois/errors.hpp"

namespace dpois {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(std::int64_t value) {
    // mpz_class has no int64 constructor on every platform; go through a string
    // only when the value does not fit a long.
    if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
        value_ = mpq_class(static_cast<long>(value));
    } else {
        value_ = mpq_class(mpz_class(std::to_string(value)));
    }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator))) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("cannot convert a non-finite double to a rational");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), value);
    return Rational(std::move(q));
}

Rational Rational::parse(std::string_view text) {
    const auto fail = [&]() -> ParseError {
        return ParseError("invalid rational '" + std::string(text) + "' (expected p/q or p)");
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("invalid rational '" + std::string(text) + "': zero denominator");
    if (negative) n = -n;
    return Rational(n, d);
}

std::optional<std::int64_t> Rational::to_int64() const {
    if (!is_integer()) return std::nullopt;
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(n.get_si());
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(std::int64_t exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw DivisionByZero("zero raised to a negative power");
        return reciprocal().pow(-exponent);
    }
    mpz_class num, den;
    const auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    // Powers of coprime integers stay coprime.
    Rational out;
    out.value_ = mpq_class(num, den);
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

Rational factorial(std::int64_t n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(out, mpz_class(1));
}

Rational binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw DomainError("binomial with negative upper index");
    if (k < 0 || k > n) return Rational(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(out, mpz_class(1));
}

}  // namespace dpois
