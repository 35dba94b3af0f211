#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "dpois/factorial.hpp"
#include "dpois/rational.hpp"

namespace dpois {

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})
/// with exact coefficients. The truncation order N is fixed at construction
/// and binary operations require matching orders; use truncate() to change
/// order explicitly.
class PowerSeries {
public:
    /// The zero series of the given order.
    explicit PowerSeries(std::size_t order);
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    PowerSeries(std::size_t order, std::vector<Rational> coeffs);

    static PowerSeries constant(std::size_t order, const Rational& c);
    /// The series t (or 0 when order = 0).
    static PowerSeries variable(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }

    /// n! times the coefficient of t^n: the exponential-generating-function
    /// coefficient.
    Rational egf(std::size_t n) const;

    PowerSeries truncate(std::size_t new_order) const;

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    PowerSeries& operator*=(const Rational& scalar);

    friend PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs) { return lhs += rhs; }
    friend PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs) { return lhs -= rhs; }
    friend PowerSeries operator*(PowerSeries lhs, const Rational& s) { return lhs *= s; }
    friend PowerSeries operator*(const Rational& s, PowerSeries rhs) { return rhs *= s; }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PowerSeries& f);

/// Cauchy product truncated at the shared order. Throws OrderMismatch.
PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g);

/// f^k by repeated squaring.
PowerSeries ps_pow(const PowerSeries& f, std::size_t k);

/// f(g(t)). The inner series must have zero constant term (NonzeroConstantTerm)
/// and both orders must agree (OrderMismatch).
PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g);

/// Sum of (x)_{n,lambda} t^n / n! for n <= order.
PowerSeries ps_degen_exp(const Rational& x, const DegenParam& lambda, std::size_t order);

/// Series of log_lambda(1 + t); the classical log(1 + t) when lambda = 0.
PowerSeries ps_degen_log(const DegenParam& lambda, std::size_t order);

/// Series of 1/(1 - t).
PowerSeries ps_geometric(std::size_t order);

/// CSV dump with header "n,coefficient".
void write_csv(std::ostream& os, const PowerSeries& f);

}  // namespace dpois
