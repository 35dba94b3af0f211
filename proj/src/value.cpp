#include "dpois/value.hpp"

#include <optional>
#include <ostream>
#include <utility>

#include "dpois/errors.hpp"

namespace dpois {

Value::Value(Rational exact) : lo_(exact), hi_(std::move(exact)), exact_(true) {}

Value::Value(Rational lo, Rational hi, bool exact) : lo_(std::move(lo)), hi_(std::move(hi)), exact_(exact) {}

Value Value::interval(Rational lo, Rational hi) {
    if (hi < lo) throw DomainError("interval with hi < lo");
    return Value(std::move(lo), std::move(hi), false);
}

const Rational& Value::exact() const {
    if (!exact_) throw DomainError("value is an interval, not an exact rational");
    return lo_;
}

std::string Value::to_string() const {
    if (exact_) return lo_.to_string();
    return lo_.to_string() + ".." + hi_.to_string();
}

Value& Value::operator+=(const Value& rhs) {
    lo_ += rhs.lo_;
    hi_ += rhs.hi_;
    exact_ = exact_ && rhs.exact_;
    return *this;
}

Value& Value::operator-=(const Value& rhs) {
    Rational lo = lo_ - rhs.hi_;
    Rational hi = hi_ - rhs.lo_;
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    exact_ = exact_ && rhs.exact_;
    return *this;
}

Value& Value::operator*=(const Rational& scalar) {
    lo_ *= scalar;
    hi_ *= scalar;
    if (scalar.sign() < 0) std::swap(lo_, hi_);
    return *this;
}

Value& Value::operator/=(const Rational& scalar) { return *this *= scalar.reciprocal(); }

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.to_string(); }

bool consistent(const Value& a, const Value& b) {
    if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
    if (a.is_exact()) return b.contains(a.exact());
    if (b.is_exact()) return a.contains(b.exact());
    return a.overlaps(b);
}

void TruncationBudget::validate() const {
    if (max_terms == 0) throw DomainError("truncation budget needs max_terms >= 1");
    if (tail_bound_target.sign() <= 0) throw DomainError("truncation budget needs a positive tail bound target");
}

Value sum_certified(const RatioSeries& series, const TruncationBudget& budget) {
    budget.validate();
    if (series.limit_ratio.sign() < 0 || series.limit_ratio >= Rational(1)) {
        throw DomainError("certified summation needs a limit ratio in [0, 1), got " +
                          series.limit_ratio.to_string());
    }
    const Rational r_star = (Rational(1) + series.limit_ratio) / Rational(2);
    const Rational geometric = (Rational(1) - r_star).reciprocal();

    Rational sum(0);
    Rational current = series.term(0);
    std::optional<Rational> previous_ratio;
    for (std::size_t k = 0; k < budget.max_terms; ++k) {
        sum += current;
        Rational next = series.term(k + 1);
        if (k >= series.monotone_from && !current.is_zero()) {
            Rational ratio = (next / current).abs();
            const bool non_increasing = !previous_ratio || ratio <= *previous_ratio;
            if (ratio <= r_star && non_increasing) {
                Rational bound = next.abs() * geometric;
                if (Rational(2) * bound <= budget.tail_bound_target) {
                    return Value::interval(sum - bound, sum + bound);
                }
            }
            previous_ratio = std::move(ratio);
        }
        current = std::move(next);
    }
    throw BudgetExhausted("tail bound target " + budget.tail_bound_target.to_string() + " not met within " +
                          std::to_string(budget.max_terms) + " terms");
}

}  // namespace dpois
