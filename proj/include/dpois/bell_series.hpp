#pragma once

#include <cstddef>
#include <vector>

#include "dpois/factorial.hpp"
#include "dpois/rational.hpp"

// Generating-function oracles for the Bell families: each returns the values
// for n = 0..n_max as exponential-generating-function coefficients, computed
// only with power-series arithmetic.
//
// The degenerate families use e_lambda^{-1}(x) e_lambda(x g(t)) =
// e_lambda(x (g(t) - 1) / (1 + lambda x)) for g(0) = 1, which keeps every
// coefficient rational whenever 1 + lambda x != 0.

namespace dpois::series {

/// e_lambda^{-1}(x) e_lambda(x e_lambda(t)).
std::vector<Rational> bell_deg(std::size_t n_max, const Rational& x, const DegenParam& lambda);

/// e_lambda^{-1}(x) e_lambda(x e^t).
std::vector<Rational> dimorphic_bell(std::size_t n_max, const Rational& x, const DegenParam& lambda);

/// e_lambda^{-1}(x) e_lambda(x / (1 - t)).
std::vector<Rational> lah_bell_deg(std::size_t n_max, const Rational& x, const DegenParam& lambda);

/// (e_lambda(x / (1 - t)) - 1) / (e_lambda(x) - 1); needs 1/lambda to be an integer.
std::vector<Rational> lah_bell_zt(std::size_t n_max, const Rational& x, const DegenParam& lambda);

/// e_lambda^x(e_lambda(t) - 1).
std::vector<Rational> fully_degen_bell(std::size_t n_max, const Rational& x, const DegenParam& lambda);

/// e^{x t / (1 - t)}.
std::vector<Rational> lah_bell(std::size_t n_max, const Rational& x);

/// e^{x (e^t - 1)}: the ordinary Bell polynomials.
std::vector<Rational> bell_classical(std::size_t n_max, const Rational& x);

}  // namespace dpois::series
