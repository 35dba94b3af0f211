#include "dpois/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "dpois/errors.hpp"

namespace dpois {

namespace {

// alpha^i (1)_{i,lambda} / i!
Rational unnormalized_weight(std::int64_t i, const PoissonParams& p) {
    return p.alpha().pow(i) * lambda_falling(Rational(1), i, p.lambda()) / factorial(i);
}

Rational truncated_normalizer(const PoissonParams& p) { return p.normalizer() - Rational(1); }

// Exact CDF values grown on demand, with double shadows for fast comparisons.
class CdfTable {
public:
    CdfTable(const PoissonParams& p, bool truncated)
        : params_(p), next_index_(truncated ? 1 : 0), scale_(truncated ? truncated_normalizer(p).reciprocal()
                                                                          : p.normalizer().reciprocal()) {
        weight_ = Rational(1);
        for (std::int64_t i = 0; i < next_index_; ++i) advance_weight(i);
    }

    std::int64_t first_index() const noexcept { return first_index_; }

    // Least index i with cdf(i) >= (2m + 1)/2^54.
    std::int64_t lookup(std::uint64_t m) {
        const double u = std::ldexp(static_cast<double>(2 * m + 1), -54);
        std::size_t lo = 0;
        for (;;) {
            if (exact_.empty() || !at_least(exact_.size() - 1, m, u)) {
                lo = exact_.size();
                if (complete_) {
                    // Unreachable: the last finite-support entry is exactly 1.
                    throw SamplerOverflow("finite CDF table exhausted");
                }
                grow();
                continue;
            }
            break;
        }
        std::size_t hi = exact_.size() - 1;  // at_least(hi) holds
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (at_least(mid, m, u)) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        return first_index_ + static_cast<std::int64_t>(lo);
    }

private:
    void advance_weight(std::int64_t i) {
        // weight(i + 1) = weight(i) * alpha (1 - i lambda) / (i + 1)
        weight_ *= params_.alpha() * (Rational(1) - Rational(i) * params_.lambda().value()) / Rational(i + 1);
    }

    void grow() {
        if (exact_.size() >= kSamplerSupportCap) {
            throw SamplerOverflow("inverse-CDF search exceeded " + std::to_string(kSamplerSupportCap) +
                                  " support points");
        }
        running_ += weight_ * scale_;
        exact_.push_back(running_);
        approx_.push_back(running_.to_double());
        advance_weight(next_index_);
        ++next_index_;
        if (const auto max = params_.support_max(); max && next_index_ > *max) complete_ = true;
    }

    bool at_least(std::size_t idx, std::uint64_t m, double u) const {
        constexpr double kMargin = 1e-15;
        if (approx_[idx] > u + kMargin) return true;
        if (approx_[idx] < u - kMargin) return false;
        // cdf >= (2m+1)/2^54  <=>  num * 2^54 >= (2m+1) * den
        const mpq_class& c = exact_[idx].raw();
        mpz_class lhs = c.get_num();
        lhs <<= 54;
        mpz_class rhs(static_cast<unsigned long>(m));
        rhs = (rhs * 2 + 1) * c.get_den();
        return lhs >= rhs;
    }

    const PoissonParams& params_;
    std::int64_t next_index_;
    std::int64_t first_index_ = next_index_;
    Rational scale_;
    Rational weight_;
    Rational running_;
    bool complete_ = false;
    std::vector<Rational> exact_;
    std::vector<double> approx_;
};

}  // namespace

std::string_view to_string(SupportRegime regime) {
    switch (regime) {
        case SupportRegime::FiniteSupport: return "finite-support";
        case SupportRegime::InfiniteSupport: return "infinite-support";
    }
    return "unknown";
}

std::optional<std::int64_t> PoissonParams::support_max() const {
    if (regime_ == SupportRegime::FiniteSupport) return m_;
    return std::nullopt;
}

PoissonParams classify_params(const DegenParam& lambda, const Rational& alpha) {
    if (alpha.sign() <= 0) throw NonPositiveAlpha("alpha must be positive, got " + alpha.to_string());
    if (lambda.is_zero()) {
        throw UnsupportedRegime("lambda = 0 (classical Poisson) has an irrational normalizer");
    }
    const auto inv = lambda.reciprocal_integer();
    if (!inv) {
        throw UnsupportedRegime("lambda = " + lambda.value().to_string() +
                                " is not +-1/M; the pmf is either not a probability or not exact");
    }
    PoissonParams p;
    p.lambda_ = lambda;
    p.alpha_ = alpha;
    if (*inv > 0) {
        p.regime_ = SupportRegime::FiniteSupport;
        p.m_ = *inv;
    } else {
        if (lambda.value().abs() * alpha >= Rational(1)) {
            throw UnsupportedRegime("|lambda| alpha = " + (lambda.value().abs() * alpha).to_string() +
                                    " >= 1; the degenerate Poisson series diverges");
        }
        p.regime_ = SupportRegime::InfiniteSupport;
        p.m_ = -*inv;
    }
    p.normalizer_ = degen_exp_exact(Rational(1), lambda, alpha);
    return p;
}

Rational pmf_deg(std::int64_t i, const PoissonParams& p) {
    if (i < 0) throw DomainError("pmf index must be nonnegative");
    return unnormalized_weight(i, p) / p.normalizer();
}

Rational pmf_zt(std::int64_t k, const PoissonParams& p) {
    if (k < 1) throw DomainError("zero-truncated pmf is defined for k >= 1 only, got " + std::to_string(k));
    return unnormalized_weight(k, p) / truncated_normalizer(p);
}

Rational cdf(std::int64_t i, const PoissonParams& p, bool truncated) {
    const std::int64_t first = truncated ? 1 : 0;
    if (i < first) throw DomainError("cdf index below the support");
    if (const auto max = p.support_max(); max && i >= *max) return Rational(1);
    Rational weight = truncated ? p.alpha() : Rational(1);
    Rational sum(0);
    for (std::int64_t j = first; j <= i; ++j) {
        if (j > first) weight *= p.alpha() * (Rational(1) - Rational(j - 1) * p.lambda().value()) / Rational(j);
        sum += weight;
    }
    return sum / (truncated ? truncated_normalizer(p) : p.normalizer());
}

Value expectation(const PoissonParams& p, bool truncated, const std::function<Rational(std::int64_t)>& f,
                  std::size_t f_monotone_from, const TruncationBudget& budget) {
    const Rational scale = (truncated ? truncated_normalizer(p) : p.normalizer()).reciprocal();
    const Rational& lam = p.lambda().value();
    if (const auto max = p.support_max()) {
        Rational weight = scale;
        Rational sum(0);
        for (std::int64_t i = 0; i <= *max; ++i) {
            if (i > 0) weight *= p.alpha() * (Rational(1) - Rational(i - 1) * lam) / Rational(i);
            if (i == 0 && truncated) continue;
            sum += weight * f(i);
        }
        return Value(sum);
    }
    // pmf ratio alpha (1 + i|lambda|)/(i + 1) is non-increasing because |lambda| <= 1.
    RatioSeries series;
    series.limit_ratio = lam.abs() * p.alpha();
    series.monotone_from = std::max<std::size_t>(1, f_monotone_from);
    series.term = [weight = scale, alpha = p.alpha(), lam, truncated, &f](std::size_t k) mutable {
        const auto i = static_cast<std::int64_t>(k);
        if (i > 0) weight *= alpha * (Rational(1) - Rational(i - 1) * lam) / Rational(i);
        if (i == 0 && truncated) return Rational(0);
        return weight * f(i);
    };
    return sum_certified(series, budget);
}

Value tail_mass(std::int64_t i, const PoissonParams& p, bool truncated, const TruncationBudget& budget) {
    if (p.support_max()) return Value(Rational(1) - cdf(i, p, truncated));
    return expectation(
        p, truncated, [i](std::int64_t j) { return Rational(j > i ? 1 : 0); },
        static_cast<std::size_t>(std::max<std::int64_t>(0, i + 1)), budget);
}

SampleBatch sample(const PoissonParams& p, std::uint64_t seed, std::size_t count, bool truncated,
                   std::uint64_t stream) {
    SampleBatch batch;
    batch.seed = seed;
    batch.stream = stream;
    batch.count = count;
    batch.draws.reserve(count);
    std::mt19937_64 gen(seed ^ stream);
    CdfTable table(p, truncated);
    for (std::size_t c = 0; c < count; ++c) {
        const std::uint64_t m = gen() >> 11;  // 53 random bits
        batch.draws.push_back(table.lookup(m));
    }
    return batch;
}

void write_pmf_csv(std::ostream& os, const PoissonParams& p, std::int64_t upto, bool truncated, bool with_float) {
    os << "i,pmf,cdf" << (with_float ? ",pmf_decimal,cdf_decimal" : "") << "\n";
    Rational running(0);
    for (std::int64_t i = truncated ? 1 : 0; i <= upto; ++i) {
        const Rational mass = truncated ? pmf_zt(i, p) : pmf_deg(i, p);
        running += mass;
        os << i << "," << mass << "," << running;
        if (with_float) os << "," << mass.to_double() << "," << running.to_double();
        os << "\n";
    }
}

}  // namespace dpois
