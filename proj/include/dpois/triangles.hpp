#pragma once

#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpois/factorial.hpp"
#include "dpois/rational.hpp"

namespace dpois {

enum class TriangleKind { Stirling1Deg, Stirling2Deg, Stirling1Classical, Lah };

std::string_view to_string(TriangleKind kind);

/// Lower-triangular table of exact entries T(n, k), 0 <= k <= n, for one
/// (kind, lambda) pair. Rows are appended on demand and never rewritten.
/// Access is serialized by a per-table mutex.
///
/// Rows are built from the basis-change recurrences
///   S1(n+1,k) = S1(n,k-1) + (k lambda - n) S1(n,k)
///   S2(n+1,k) = S2(n,k-1) + (k - n lambda) S2(n,k)
///   L(n+1,k)  = L(n,k-1)  + (n + k) L(n,k)
/// with the classical first kind being S1 at lambda = 0.
class TriangleTable {
public:
    TriangleTable(TriangleKind kind, DegenParam lambda);

    TriangleTable(const TriangleTable&) = delete;
    TriangleTable& operator=(const TriangleTable&) = delete;

    TriangleKind kind() const noexcept { return kind_; }
    const DegenParam& lambda() const noexcept { return lambda_; }

    /// Entry (n, k). Throws IndexError for k > n or negative indices.
    Rational at(std::int64_t n, std::int64_t k);

    /// Copy of row n (length n + 1).
    std::vector<Rational> row(std::int64_t n);

    /// Number of rows computed so far.
    std::size_t rows_built();

private:
    void grow_to(std::size_t n);

    TriangleKind kind_;
    DegenParam lambda_;
    std::mutex mutex_;
    std::vector<std::vector<Rational>> rows_;
};

/// The shared table for (kind, lambda). Classical and Lah tables ignore
/// lambda. Returned references stay valid for the life of the program.
TriangleTable& triangle_table(TriangleKind kind, const DegenParam& lambda);

/// S_{1,lambda}(n, k).
Rational stirling1_deg(std::int64_t n, std::int64_t k, const DegenParam& lambda);
/// S_{2,lambda}(n, k).
Rational stirling2_deg(std::int64_t n, std::int64_t k, const DegenParam& lambda);
/// Classical S_1(n, k), or |S_1(n, k)| when `signed_value` is false.
Rational stirling1_classical(std::int64_t n, std::int64_t k, bool signed_value = true);
/// Lah number L(n, k).
Rational lah(std::int64_t n, std::int64_t k);

/// Rows 0..n_max obtained by coefficient extraction from the generating
/// functions (log_lambda(1+t))^k/k!, (e_lambda(t)-1)^k/k!, (log(1+t))^k/k! and
/// (t/(1-t))^k/k!. Shares nothing with the recurrence path beyond the
/// power-series arithmetic.
std::vector<std::vector<Rational>> triangle_from_series(TriangleKind kind, const DegenParam& lambda,
                                                        std::size_t n_max);

struct OrthogonalityResult {
    bool holds = true;
    /// First (n, k) where a product sum differs from the Kronecker delta.
    std::optional<std::pair<std::int64_t, std::int64_t>> violation;
    /// "S1*S2" or "S2*S1", naming the failing product.
    std::string product;

    explicit operator bool() const noexcept { return holds; }
};

/// Checks sum_l S1(n,l) S2(l,k) = delta_{nk} and sum_l S2(n,l) S1(l,k) =
/// delta_{nk} for 0 <= k <= n <= n_max with exact equality.
OrthogonalityResult orthogonality_check(std::int64_t n_max, const DegenParam& lambda);

/// Emits "n,k,value" rows for n = 0..n_max (plus a decimal column when
/// `with_float`).
void write_triangle_csv(std::ostream& os, TriangleKind kind, const DegenParam& lambda, std::int64_t n_max,
                        bool signed_value = true, bool with_float = false);

}  // namespace dpois
