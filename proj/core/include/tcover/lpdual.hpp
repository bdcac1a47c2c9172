#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcover/connected.hpp"

namespace tcover {

/// An n x m 0/1 matrix stored column-wise; column j is a subset of the n rows.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, std::vector<VertexSet> columns);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return static_cast<int>(columns_.size()); }
    [[nodiscard]] const std::vector<VertexSet>& columns() const { return columns_; }
    /// 0-based.
    [[nodiscard]] bool at(int i, int j) const { return columns_[j].contains(i); }

    /// Rows as strings of '0'/'1', one character per column.
    [[nodiscard]] std::vector<std::string> row_strings() const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

  private:
    int rows_ = 0;
    std::vector<VertexSet> columns_;
};

/// Columns are the supports of I_t(G)'s generators, in canonical generator order.
BinaryMatrix incidence_matrix(const TConnInstance& inst);

/// The window matrix with (i, j) = 1 iff j <= i <= j + t - 1, 1 <= j <= n - t + 1.
BinaryMatrix path_incidence_formula(int n, int t);
/// The circulant with (i, j) = 1 iff (i - j) mod n lies in [0, t - 1], 1 <= j <= n.
/// For t = n all n columns coincide.
BinaryMatrix cycle_incidence_formula(int n, int t);

/// Whether two matrices have the same set of distinct columns.
bool same_column_set(const BinaryMatrix& a, const BinaryMatrix& b);

/// Every componentwise-minimal x in {0,1}^n with A^T x >= 1, grown edge by edge
/// (each column of A is folded in and non-minimal partial covers are discarded).
/// Output columns are in canonical monomial order.
BinaryMatrix minimal_solutions(const BinaryMatrix& a);

using WeightVector = std::vector<int>;

/// min alpha.y subject to B^T y >= 1, y in N^n. An optimal y is 0/1, so the
/// search is a branch and bound over hitting sets of B's columns.
long long tau(const BinaryMatrix& b, const WeightVector& alpha);

/// max sum z subject to B z <= alpha, z in N^r, by depth-first search with
/// z_k <= min over column k of alpha and a blocker-based bound.
long long nu(const BinaryMatrix& b, const WeightVector& alpha);

/// Exhaustive versions used to re-check the branch-and-bound solvers.
long long tau_enumerate(const BinaryMatrix& b, const WeightVector& alpha);

struct GapSearchResult {
    std::optional<WeightVector> witness;
    long long tau = 0;
    long long nu = 0;
    /// Weight vectors whose programs were actually solved.
    std::uint64_t evaluated = 0;
    /// Weight vectors skipped as rotations of an already-scanned one.
    std::uint64_t skipped_by_symmetry = 0;
};

/// Default cap on the number of weight vectors (entry_bound + 1)^n.
inline constexpr std::uint64_t kDefaultAlphaCap = 50'000'000;

/// Scans alpha in {0..entry_bound}^n by decreasing sum, then reverse lexicographically,
/// and returns the first alpha with tau != nu. Cycles skip alphas that are not the
/// lexicographically greatest of their rotations.
GapSearchResult duality_gap_search(const TConnInstance& inst, int entry_bound,
                                   std::uint64_t cap = kDefaultAlphaCap);

}  // namespace tcover
