#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "dpois/rational.hpp"

namespace dpois {

/// Either an exact rational or a closed interval [lo, hi] known to contain
/// the true value. Arithmetic with exact scalars keeps enclosures sound.
class Value {
public:
    Value(Rational exact);  // NOLINT: exact rationals promote implicitly
    static Value interval(Rational lo, Rational hi);

    bool is_exact() const noexcept { return exact_; }
    /// The exact value; throws DomainError on an interval.
    const Rational& exact() const;
    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool overlaps(const Value& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

    /// "p/q" when exact, "lo..hi" otherwise.
    std::string to_string() const;

    Value& operator+=(const Value& rhs);
    Value& operator-=(const Value& rhs);
    Value& operator*=(const Rational& scalar);
    Value& operator/=(const Rational& scalar);

    friend Value operator+(Value lhs, const Value& rhs) { return lhs += rhs; }
    friend Value operator-(Value lhs, const Value& rhs) { return lhs -= rhs; }
    friend Value operator*(Value lhs, const Rational& s) { return lhs *= s; }
    friend Value operator*(const Rational& s, Value rhs) { return rhs *= s; }
    friend Value operator/(Value lhs, const Rational& s) { return lhs /= s; }

private:
    Value(Rational lo, Rational hi, bool exact);

    Rational lo_;
    Rational hi_;
    bool exact_ = true;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

/// Comparison rule for identity checks: exact vs exact is equality, exact vs
/// interval is containment, interval vs interval is overlap.
bool consistent(const Value& a, const Value& b);

/// Limits on a certified infinite summation.
struct TruncationBudget {
    std::size_t max_terms = 100000;
    /// Width of the certified enclosure (twice the tail bound) must be at most this.
    Rational tail_bound_target = Rational(1, 1) / Rational(10).pow(30);

    /// Throws DomainError when max_terms = 0 or the target is not positive.
    void validate() const;
};

/// A nonnegative-index series sum_k a_k with a known ratio structure.
///
/// `term(k)` is called with k = 0, 1, 2, ... in order, so it may keep
/// running state. `limit_ratio` is lim |a_{k+1}/a_k| and must be < 1. The
/// caller asserts that |a_{k+1}/a_k| is non-increasing for k >= monotone_from.
struct RatioSeries {
    std::function<Rational(std::size_t)> term;
    Rational limit_ratio;
    std::size_t monotone_from = 1;
};

/// Sums a RatioSeries with a certified tail. After adding a_0..a_K, with
/// K >= monotone_from, a_K != 0 and r_K = |a_{K+1}/a_K| <= r* = (1 + limit)/2,
/// the tail is bounded by B = |a_{K+1}| / (1 - r*). The observed ratios are
/// also checked to be non-increasing at the stopping point. Returns
/// [S - B, S + B] once 2B <= tail_bound_target. Throws BudgetExhausted if
/// that does not happen within max_terms.
Value sum_certified(const RatioSeries& series, const TruncationBudget& budget);

}  // namespace dpois
