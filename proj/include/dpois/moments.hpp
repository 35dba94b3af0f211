#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dpois/distribution.hpp"
#include "dpois/rational.hpp"
#include "dpois/value.hpp"

namespace dpois {

enum class MomentFamily {
    Power,          // E[X^n]
    Falling,        // E[(X)_n]
    Rising,         // E[<X>_n]
    LambdaFalling,  // E[(X)_{n,lambda}]
    Binomial,       // E[C(X + n - 1, n)]
};

std::string_view to_string(MomentFamily family);

struct MomentKind {
    MomentFamily family = MomentFamily::Power;
    std::int64_t n = 0;
};

/// f(i) for the moment functional: i^n, (i)_n, <i>_n, (i)_{n,lambda} or C(i+n-1, n).
Rational moment_integrand(const MomentKind& mk, std::int64_t i, const DegenParam& lambda);

/// sum_i f(i) p(i) by enumeration: exact on finite support, certified
/// interval on infinite support.
Value moment_direct(const MomentKind& mk, const PoissonParams& p, bool truncated,
                    const TruncationBudget& budget = {});

/// The closed form attached to (family, truncated):
///   full:  Falling a^n (1)_{n,l}/(1+l a)^n; LambdaFalling Bel_{n,l}(a);
///          Binomial B^L_{n,l}(a)/n!; Rising sum_k B_{k,l}(a)|S1(n,k)|;
///          Power B_{n,l}(a).
///   zero-truncated (n >= 1): Falling a^n (1)_{n,l}/((1 - e^{-1})(1+l a)^n);
///          LambdaFalling Bel_{n,l}(a)/(1 - e^{-1}); Binomial B^{(L,0)}_{n,l}(a)/n!.
/// Bel uses the finite Stirling form and the Lah-Bell families use their
/// generating functions, so none of these repeats the enumeration sum.
/// Zero-truncated Rising and Power moments throw NoClosedForm.
Value moment_closed_form(const MomentKind& mk, const PoissonParams& p, bool truncated,
                         const TruncationBudget& budget = {});

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t count = 0;

    /// [mean - sigmas * std_error, mean + sigmas * std_error] as exact dyadic bounds.
    Value band(double sigmas) const;
};

/// Sample-mean estimate of the moment from `count` draws of stream `stream`.
McEstimate moment_mc(const MomentKind& mk, const PoissonParams& p, bool truncated, std::uint64_t seed,
                     std::size_t count, std::uint64_t stream = 0);

/// Sample-mean estimate from existing draws.
McEstimate moment_mc(const MomentKind& mk, const DegenParam& lambda, const std::vector<std::int64_t>& draws);

enum class CheckMethod { ExactEnum, CertifiedTruncation, MonteCarlo };

std::string_view to_string(CheckMethod method);

struct IdentityCheckResult {
    std::string identity_id;
    Rational lambda;
    Rational alpha;
    std::int64_t n = 0;
    Value lhs = Value(Rational(0));
    Value rhs = Value(Rational(0));
    CheckMethod method = CheckMethod::ExactEnum;
    bool pass = false;
    std::string detail;
};

/// Identity ids understood by verify_identity.
const std::vector<std::string>& identity_ids();

/// Checks one identity at (lambda, alpha) for n up to n_max, comparing two
/// independent computational routes. Polynomial identities (T1, C2, E6, E11)
/// use x = alpha. Throws UnknownIdentity, or RegimeError when the parameters
/// do not suit the identity.
std::vector<IdentityCheckResult> verify_identity(std::string_view id, const Rational& lambda, const Rational& alpha,
                                                 std::int64_t n_max, const TruncationBudget& budget = {});

struct GridPoint {
    Rational lambda;
    Rational alpha;
};

/// lambda in {1, 1/2, 1/3, 1/4, 1/5} x alpha in {1/2, 1, 3/2, 2}.
std::vector<GridPoint> default_exact_grid();

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<IdentityCheckResult> checks;

    std::size_t failed() const;
    /// "pass", "fail", or "vacuous pass" for an empty report.
    std::string verdict() const;
};

/// Runs every identity at every grid point (concurrently across points).
/// Per-check errors become failed checks. Checks are sorted by
/// (id, lambda, alpha, n).
SuiteReport run_suite(std::string name, const std::vector<GridPoint>& grid, std::int64_t n_max,
                      const TruncationBudget& budget, std::uint64_t seed);

/// Monte Carlo echoes of every moment family, both laws, n = 0..n_max, at one
/// point. Check c draws `count` samples from stream c and passes when its
/// `sigmas`-band meets the exact (or certified) reference.
SuiteReport run_mc_suite(const GridPoint& point, std::uint64_t seed, std::size_t count, std::int64_t n_max = 3,
                         double sigmas = 4.0, const TruncationBudget& budget = {});

}  // namespace dpois
