#include "dpois/triangles.hpp"

#include <map>
#include <memory>
#include <ostream>
#include <utility>

#include "dpois/errors.hpp"
#include "dpois/power_series.hpp"

namespace dpois {

namespace {

void check_index(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        throw IndexError("triangle index (" + std::to_string(n) + ", " + std::to_string(k) +
                         ") outside 0 <= k <= n");
    }
}

bool uses_lambda(TriangleKind kind) {
    return kind == TriangleKind::Stirling1Deg || kind == TriangleKind::Stirling2Deg;
}

}  // namespace

std::string_view to_string(TriangleKind kind) {
    switch (kind) {
        case TriangleKind::Stirling1Deg: return "stirling1-deg";
        case TriangleKind::Stirling2Deg: return "stirling2-deg";
        case TriangleKind::Stirling1Classical: return "stirling1";
        case TriangleKind::Lah: return "lah";
    }
    return "unknown";
}

TriangleTable::TriangleTable(TriangleKind kind, DegenParam lambda)
    : kind_(kind), lambda_(uses_lambda(kind) ? std::move(lambda) : DegenParam()) {
    rows_.push_back({Rational(1)});
}

Rational TriangleTable::at(std::int64_t n, std::int64_t k) {
    check_index(n, k);
    std::lock_guard lock(mutex_);
    grow_to(static_cast<std::size_t>(n));
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<Rational> TriangleTable::row(std::int64_t n) {
    if (n < 0) throw IndexError("negative triangle row");
    std::lock_guard lock(mutex_);
    grow_to(static_cast<std::size_t>(n));
    return rows_[static_cast<std::size_t>(n)];
}

std::size_t TriangleTable::rows_built() {
    std::lock_guard lock(mutex_);
    return rows_.size();
}

void TriangleTable::grow_to(std::size_t n_target) {
    const Rational& lam = lambda_.value();
    while (rows_.size() <= n_target) {
        const std::size_t n = rows_.size() - 1;  // extend from row n to row n+1
        const auto& prev = rows_.back();
        std::vector<Rational> next(n + 2, Rational(0));
        const Rational rn(static_cast<std::int64_t>(n));
        for (std::size_t k = 1; k <= n + 1; ++k) {
            const Rational rk(static_cast<std::int64_t>(k));
            Rational value = prev[k - 1];
            if (k <= n) {
                Rational weight;
                switch (kind_) {
                    case TriangleKind::Stirling1Deg: weight = rk * lam - rn; break;
                    case TriangleKind::Stirling2Deg: weight = rk - rn * lam; break;
                    case TriangleKind::Stirling1Classical: weight = -rn; break;
                    case TriangleKind::Lah: weight = rn + rk; break;
                }
                value += weight * prev[k];
            }
            next[k] = std::move(value);
        }
        rows_.push_back(std::move(next));
    }
}

TriangleTable& triangle_table(TriangleKind kind, const DegenParam& lambda) {
    static std::mutex registry_mutex;
    static std::map<std::pair<TriangleKind, DegenParam>, std::unique_ptr<TriangleTable>> registry;

    const DegenParam key_lambda = uses_lambda(kind) ? lambda : DegenParam();
    std::lock_guard lock(registry_mutex);
    auto& slot = registry[{kind, key_lambda}];
    if (!slot) slot = std::make_unique<TriangleTable>(kind, key_lambda);
    return *slot;
}

Rational stirling1_deg(std::int64_t n, std::int64_t k, const DegenParam& lambda) {
    return triangle_table(TriangleKind::Stirling1Deg, lambda).at(n, k);
}

Rational stirling2_deg(std::int64_t n, std::int64_t k, const DegenParam& lambda) {
    return triangle_table(TriangleKind::Stirling2Deg, lambda).at(n, k);
}

Rational stirling1_classical(std::int64_t n, std::int64_t k, bool signed_value) {
    Rational v = triangle_table(TriangleKind::Stirling1Classical, DegenParam()).at(n, k);
    return signed_value ? v : v.abs();
}

Rational lah(std::int64_t n, std::int64_t k) { return triangle_table(TriangleKind::Lah, DegenParam()).at(n, k); }

std::vector<std::vector<Rational>> triangle_from_series(TriangleKind kind, const DegenParam& lambda,
                                                        std::size_t n_max) {
    const std::size_t order = n_max;
    PowerSeries base(order);
    switch (kind) {
        case TriangleKind::Stirling1Deg: base = ps_degen_log(lambda, order); break;
        case TriangleKind::Stirling2Deg:
            base = ps_degen_exp(Rational(1), lambda, order) - PowerSeries::constant(order, Rational(1));
            break;
        case TriangleKind::Stirling1Classical: base = ps_degen_log(DegenParam(), order); break;
        case TriangleKind::Lah:
            base = ps_geometric(order) - PowerSeries::constant(order, Rational(1));  // t/(1-t)
            break;
    }

    std::vector<std::vector<Rational>> rows(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) rows[n].assign(n + 1, Rational(0));
    for (std::size_t k = 0; k <= n_max; ++k) {
        const PowerSeries power = ps_pow(base, k) * factorial(static_cast<std::int64_t>(k)).reciprocal();
        for (std::size_t n = k; n <= n_max; ++n) rows[n][k] = power.egf(n);
    }
    return rows;
}

OrthogonalityResult orthogonality_check(std::int64_t n_max, const DegenParam& lambda) {
    OrthogonalityResult result;
    if (n_max < 0) return result;
    TriangleTable& s1 = triangle_table(TriangleKind::Stirling1Deg, lambda);
    TriangleTable& s2 = triangle_table(TriangleKind::Stirling2Deg, lambda);
    std::vector<std::vector<Rational>> a, b;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        a.push_back(s1.row(n));
        b.push_back(s2.row(n));
    }
    const auto product = [](const auto& lhs, const auto& rhs, std::int64_t n, std::int64_t k) {
        Rational sum(0);
        for (std::int64_t l = k; l <= n; ++l) {
            sum += lhs[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)] *
                   rhs[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
        }
        return sum;
    };
    for (std::int64_t n = 0; n <= n_max; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            const Rational delta(n == k ? 1 : 0);
            if (product(a, b, n, k) != delta) {
                return {false, std::make_pair(n, k), "S1*S2"};
            }
            if (product(b, a, n, k) != delta) {
                return {false, std::make_pair(n, k), "S2*S1"};
            }
        }
    }
    return result;
}

void write_triangle_csv(std::ostream& os, TriangleKind kind, const DegenParam& lambda, std::int64_t n_max,
                        bool signed_value, bool with_float) {
    os << "n,k,value" << (with_float ? ",decimal" : "") << "\n";
    TriangleTable& table = triangle_table(kind, lambda);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto row = table.row(n);
        for (std::int64_t k = 0; k <= n; ++k) {
            Rational v = row[static_cast<std::size_t>(k)];
            if (!signed_value) v = v.abs();
            os << n << "," << k << "," << v;
            if (with_float) os << "," << v.to_double();
            os << "\n";
        }
    }
}

}  // namespace dpois
