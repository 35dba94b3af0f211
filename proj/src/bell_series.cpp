#include "dpois/bell_series.hpp"

#include "dpois/errors.hpp"
#include "dpois/power_series.hpp"

namespace dpois::series {

namespace {

std::vector<Rational> egf_coefficients(const PowerSeries& f) {
    std::vector<Rational> out;
    out.reserve(f.order() + 1);
    for (std::size_t n = 0; n <= f.order(); ++n) out.push_back(f.egf(n));
    return out;
}

// e_lambda(x (g - 1) / (1 + lambda x)), g given through g_minus_one = g - 1.
PowerSeries normalized_outer(const PowerSeries& g_minus_one, const Rational& x, const DegenParam& lambda) {
    const Rational shift = Rational(1) + lambda.value() * x;
    if (shift.is_zero()) throw DivisionByZero("1 + lambda x = 0");
    const std::size_t order = g_minus_one.order();
    return ps_compose(ps_degen_exp(Rational(1), lambda, order), g_minus_one * (x / shift));
}

PowerSeries geometric_minus_one(std::size_t order) {
    return ps_geometric(order) - PowerSeries::constant(order, Rational(1));
}

PowerSeries classical_exp_minus_one(std::size_t order) {
    return ps_degen_exp(Rational(1), DegenParam(), order) - PowerSeries::constant(order, Rational(1));
}

}  // namespace

std::vector<Rational> bell_deg(std::size_t n_max, const Rational& x, const DegenParam& lambda) {
    const PowerSeries inner = ps_degen_exp(Rational(1), lambda, n_max) - PowerSeries::constant(n_max, Rational(1));
    return egf_coefficients(normalized_outer(inner, x, lambda));
}

std::vector<Rational> dimorphic_bell(std::size_t n_max, const Rational& x, const DegenParam& lambda) {
    return egf_coefficients(normalized_outer(classical_exp_minus_one(n_max), x, lambda));
}

std::vector<Rational> lah_bell_deg(std::size_t n_max, const Rational& x, const DegenParam& lambda) {
    return egf_coefficients(normalized_outer(geometric_minus_one(n_max), x, lambda));
}

std::vector<Rational> lah_bell_zt(std::size_t n_max, const Rational& x, const DegenParam& lambda) {
    const Rational norm = degen_exp_exact(Rational(1), lambda, x);
    const Rational denom = norm - Rational(1);
    if (denom.is_zero()) throw DivisionByZero("e_lambda(x) = 1");
    PowerSeries f = normalized_outer(geometric_minus_one(n_max), x, lambda) * norm;
    f -= PowerSeries::constant(n_max, Rational(1));
    return egf_coefficients(f * denom.reciprocal());
}

std::vector<Rational> fully_degen_bell(std::size_t n_max, const Rational& x, const DegenParam& lambda) {
    const PowerSeries inner = ps_degen_exp(Rational(1), lambda, n_max) - PowerSeries::constant(n_max, Rational(1));
    return egf_coefficients(ps_compose(ps_degen_exp(x, lambda, n_max), inner));
}

std::vector<Rational> lah_bell(std::size_t n_max, const Rational& x) {
    return egf_coefficients(ps_compose(ps_degen_exp(x, DegenParam(), n_max), geometric_minus_one(n_max)));
}

std::vector<Rational> bell_classical(std::size_t n_max, const Rational& x) {
    return egf_coefficients(ps_compose(ps_degen_exp(x, DegenParam(), n_max), classical_exp_minus_one(n_max)));
}

}  // namespace dpois::series
