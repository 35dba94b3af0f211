#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "dpois/factorial.hpp"
#include "dpois/rational.hpp"
#include "dpois/value.hpp"

namespace dpois {

/// Where a Dobinski-type series  e_lambda^{-1}(x) sum_k x^k (1)_{k,lambda}/k! g(k)
/// can be evaluated.
///  - FiniteDobinski: 1/lambda = M is a positive integer; (1)_{k,lambda}
///    vanishes for k > M, so the sum is finite and exact.
///  - Truncated: 1/lambda = -M is a negative integer and |lambda x| < 1; the
///    sum is infinite and is evaluated with a certified tail.
///  - ClassicalLimit: lambda = 0; only the finite-sum families apply.
enum class EvalRegime { FiniteDobinski, Truncated, ClassicalLimit };

std::string_view to_string(EvalRegime regime);

struct EvalPoint {
    Rational x;
    DegenParam lambda;
    EvalRegime regime = EvalRegime::ClassicalLimit;

    /// Classifies (x, lambda); throws RegimeError for pairs outside all three
    /// regimes.
    static EvalPoint make(Rational x, DegenParam lambda);

    /// M = |1/lambda| for the Dobinski regimes.
    std::int64_t reciprocal_magnitude() const;

    /// e_lambda(x) = (1 + lambda x)^{1/lambda}, exact in both Dobinski regimes.
    /// Throws RegimeError in the classical limit.
    Rational normalizer() const;
};

/// Degenerate Bell polynomial Bel_{n,lambda}(x) from its Dobinski form
/// e_lambda^{-1}(x) sum_k x^k (1)_{k,lambda} (k)_{n,lambda} / k!.
Value bell_deg(std::int64_t n, const EvalPoint& p, const TruncationBudget& budget = {});

/// Bel_{n,lambda}(x) = sum_k S_{2,lambda}(n,k) x^k (1)_{k,lambda} / (1 + lambda x)^k.
///
/// This finite form follows from expanding (X)_{n,lambda} in falling
/// factorials and using E[(X)_k] = a^k (1)_{k,lambda} / (1 + lambda a)^k. It
/// is exact for every lambda with 1 + lambda x != 0 and is used as the
/// independent route against the Dobinski sum.
Rational bell_deg_closed_form(std::int64_t n, const Rational& x, const DegenParam& lambda);

/// Fully degenerate Bell polynomial beta_{n,lambda}(x) = sum_k S_{2,lambda}(n,k) (x)_{k,lambda}.
Rational fully_degen_bell(std::int64_t n, const Rational& x, const DegenParam& lambda);

/// Dimorphic degenerate Bell polynomial e_lambda^{-1}(x) sum_k (1)_{k,lambda} x^k k^n / k!.
Value dimorphic_bell(std::int64_t n, const EvalPoint& p, const TruncationBudget& budget = {});

/// Lah-Bell polynomial sum_k L(n,k) x^k.
Rational lah_bell(std::int64_t n, const Rational& x);

/// Degenerate Lah-Bell polynomial e_lambda^{-1}(x) sum_m <m>_n (1)_{m,lambda} x^m / m!.
Value lah_bell_deg(std::int64_t n, const EvalPoint& p, const TruncationBudget& budget = {});

/// Zero-truncated degenerate Lah-Bell polynomial: 1 at n = 0, otherwise
/// lah_bell_deg(n) / (1 - e_lambda^{-1}(x)). Throws DivisionByZero for x = 0, n >= 1.
Value lah_bell_zt(std::int64_t n, const EvalPoint& p, const TruncationBudget& budget = {});

}  // namespace dpois
