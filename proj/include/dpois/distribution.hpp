#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "dpois/factorial.hpp"
#include "dpois/rational.hpp"
#include "dpois/value.hpp"

namespace dpois {

enum class SupportRegime {
    FiniteSupport,    // lambda = 1/M, support {0, ..., M}
    InfiniteSupport,  // lambda = -1/M, |lambda| alpha < 1
};

std::string_view to_string(SupportRegime regime);

/// Validated parameters of the degenerate Poisson law
///   p(i) = e_lambda^{-1}(alpha) alpha^i (1)_{i,lambda} / i!.
/// Only constructible through classify_params.
class PoissonParams {
public:
    const DegenParam& lambda() const noexcept { return lambda_; }
    const Rational& alpha() const noexcept { return alpha_; }
    SupportRegime regime() const noexcept { return regime_; }

    /// M = |1/lambda|.
    std::int64_t reciprocal_magnitude() const noexcept { return m_; }
    /// Largest support point, when finite.
    std::optional<std::int64_t> support_max() const;

    /// e_lambda(alpha) = (1 + lambda alpha)^{1/lambda}.
    const Rational& normalizer() const noexcept { return normalizer_; }

    friend PoissonParams classify_params(const DegenParam& lambda, const Rational& alpha);

private:
    PoissonParams() = default;

    DegenParam lambda_;
    Rational alpha_;
    SupportRegime regime_ = SupportRegime::FiniteSupport;
    std::int64_t m_ = 1;
    Rational normalizer_;
};

/// Throws NonPositiveAlpha for alpha <= 0 and UnsupportedRegime when lambda is
/// not 1/M or -1/M, or when lambda < 0 and |lambda| alpha >= 1.
PoissonParams classify_params(const DegenParam& lambda, const Rational& alpha);

/// P{X = i} for X ~ Poi_lambda(alpha).
Rational pmf_deg(std::int64_t i, const PoissonParams& p);

/// P{X = k} for the zero-truncated law, k >= 1. Throws DomainError for k < 1.
Rational pmf_zt(std::int64_t k, const PoissonParams& p);

/// Exact P{X <= i}. For the zero-truncated law i must be >= 1.
Rational cdf(std::int64_t i, const PoissonParams& p, bool truncated = false);

/// P{X > i} as a certified enclosure (exact 0 or exact value on finite support).
Value tail_mass(std::int64_t i, const PoissonParams& p, bool truncated, const TruncationBudget& budget = {});

/// Certified expectation sum_i f(i) p(i). `f` must be such that
/// |f(i+1)/f(i)| is non-increasing for i >= f_monotone_from (and f(i) >= 0
/// for large i); on finite support the sum is exact.
Value expectation(const PoissonParams& p, bool truncated, const std::function<Rational(std::int64_t)>& f,
                  std::size_t f_monotone_from, const TruncationBudget& budget = {});

struct SampleBatch {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::size_t count = 0;
    std::vector<std::int64_t> draws;

    friend bool operator==(const SampleBatch&, const SampleBatch&) = default;
};

/// Hard cap on the number of support points the sampler will tabulate.
inline constexpr std::size_t kSamplerSupportCap = 1'000'000;

/// Inverse-CDF sampling. Each uniform is the dyadic rational (2m + 1)/2^54
/// for 53 random bits m from std::mt19937_64 seeded with seed ^ stream; the
/// draw is the least i with cdf(i) >= u, decided exactly. Reproducible from
/// (params, truncated, seed, stream, count).
SampleBatch sample(const PoissonParams& p, std::uint64_t seed, std::size_t count, bool truncated = false,
                   std::uint64_t stream = 0);

/// CSV "i,pmf,cdf" rows for i = first..upto, first being 0 (or 1 when truncated).
void write_pmf_csv(std::ostream& os, const PoissonParams& p, std::int64_t upto, bool truncated,
                   bool with_float = false);

}  // namespace dpois
