#include "dpois/power_series.hpp"

#include <ostream>
#include <string>

#include "dpois/errors.hpp"

namespace dpois {

namespace {

void require_same_order(const PowerSeries& f, const PowerSeries& g, const char* op) {
    if (f.order() != g.order()) {
        throw OrderMismatch(std::string(op) + ": orders " + std::to_string(f.order()) + " and " +
                            std::to_string(g.order()) + " differ");
    }
}

}  // namespace

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

PowerSeries::PowerSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Rational(0));
}

PowerSeries PowerSeries::constant(std::size_t order, const Rational& c) {
    PowerSeries out(order);
    out.coeffs_[0] = c;
    return out;
}

PowerSeries PowerSeries::variable(std::size_t order) {
    PowerSeries out(order);
    if (order >= 1) out.coeffs_[1] = Rational(1);
    return out;
}

Rational PowerSeries::egf(std::size_t n) const {
    return coeffs_.at(n) * factorial(static_cast<std::int64_t>(n));
}

PowerSeries PowerSeries::truncate(std::size_t new_order) const { return PowerSeries(new_order, coeffs_); }

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    require_same_order(*this, rhs, "add");
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    require_same_order(*this, rhs, "subtract");
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& f) {
    bool first = true;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (f[n].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << f[n] << ")";
        if (n >= 1) os << "t^" << n;
    }
    if (first) os << "0";
    return os << " + O(t^" << f.order() + 1 << ")";
}

PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g) {
    require_same_order(f, g, "multiply");
    const std::size_t order = f.order();
    std::vector<Rational> out(order + 1, Rational(0));
    for (std::size_t i = 0; i <= order; ++i) {
        if (f[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (!g[j].is_zero()) out[i + j] += f[i] * g[j];
        }
    }
    return PowerSeries(order, std::move(out));
}

PowerSeries ps_pow(const PowerSeries& f, std::size_t k) {
    PowerSeries result = PowerSeries::constant(f.order(), Rational(1));
    PowerSeries base = f;
    while (k > 0) {
        if (k & 1U) result = ps_mul(result, base);
        k >>= 1U;
        if (k > 0) base = ps_mul(base, base);
    }
    return result;
}

PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g) {
    require_same_order(f, g, "compose");
    if (!g[0].is_zero()) throw NonzeroConstantTerm("inner series has constant term " + g[0].to_string());
    // Horner: f_N g + f_{N-1}, times g, ... Each pass gains one power of t, so
    // nothing beyond the shared order is lost.
    const std::size_t order = f.order();
    PowerSeries out = PowerSeries::constant(order, f[order]);
    for (std::size_t n = order; n-- > 0;) {
        out = ps_mul(out, g);
        out += PowerSeries::constant(order, f[n]);
    }
    return out;
}

PowerSeries ps_degen_exp(const Rational& x, const DegenParam& lambda, std::size_t order) {
    std::vector<Rational> c;
    c.reserve(order + 1);
    Rational lf(1);  // (x)_{n,lambda}
    Rational nfact(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            lf *= x - Rational(static_cast<std::int64_t>(n - 1)) * lambda.value();
            nfact *= Rational(static_cast<std::int64_t>(n));
        }
        c.push_back(lf / nfact);
    }
    return PowerSeries(order, std::move(c));
}

PowerSeries ps_degen_log(const DegenParam& lambda, std::size_t order) {
    std::vector<Rational> c(order + 1, Rational(0));
    if (lambda.is_zero()) {
        for (std::size_t n = 1; n <= order; ++n) {
            const auto ni = static_cast<std::int64_t>(n);
            c[n] = Rational(n % 2 == 1 ? 1 : -1, ni);
        }
        return PowerSeries(order, std::move(c));
    }
    // lambda^{n-1} (1)_{n,1/lambda} / n!
    const DegenParam inverse(lambda.value().reciprocal());
    for (std::size_t n = 1; n <= order; ++n) {
        const auto ni = static_cast<std::int64_t>(n);
        c[n] = lambda.value().pow(ni - 1) * lambda_falling(Rational(1), ni, inverse) / factorial(ni);
    }
    return PowerSeries(order, std::move(c));
}

PowerSeries ps_geometric(std::size_t order) {
    return PowerSeries(order, std::vector<Rational>(order + 1, Rational(1)));
}

void write_csv(std::ostream& os, const PowerSeries& f) {
    os << "n,coefficient\n";
    for (std::size_t n = 0; n <= f.order(); ++n) os << n << "," << f[n] << "\n";
}

}  // namespace dpois
