#include "tcover/lpdual.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tcover/error.hpp"

namespace tcover {

BinaryMatrix::BinaryMatrix(int rows, std::vector<VertexSet> columns) : rows_(rows), columns_(std::move(columns)) {
    if (rows < 0 || rows > kMaxVars) throw DomainError("matrix row count out of range");
    for (auto c : columns_)
        if (!c.subset_of(VertexSet::range(rows))) throw DomainError("matrix column uses a row outside the matrix");
}

std::vector<std::string> BinaryMatrix::row_strings() const {
    std::vector<std::string> out(static_cast<std::size_t>(rows_), std::string(columns_.size(), '0'));
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (int i : columns_[j].indices()) out[i][j] = '1';
    return out;
}

namespace {

std::vector<VertexSet> canonical_columns(int rows, const std::vector<VertexSet>& sets) {
    // Route through the monomial order so column order matches generator order.
    return MonomialIdeal::square_free(rows, sets).supports();
}

}  // namespace

BinaryMatrix incidence_matrix(const TConnInstance& inst) {
    return BinaryMatrix(inst.n(), t_connected_ideal(inst).supports());
}

BinaryMatrix path_incidence_formula(int n, int t) {
    if (t < 1 || n < t) throw DomainError("path incidence needs 1 <= t <= n");
    std::vector<VertexSet> cols;
    for (int j = 1; j <= n - t + 1; ++j) {
        VertexSet c;
        for (int i = 1; i <= n; ++i)
            if (j <= i && i <= j + t - 1) c.insert(i - 1);
        cols.push_back(c);
    }
    return BinaryMatrix(n, std::move(cols));
}

BinaryMatrix cycle_incidence_formula(int n, int t) {
    if (t < 1 || n < t) throw DomainError("cycle incidence needs 1 <= t <= n");
    std::vector<VertexSet> cols;
    for (int j = 1; j <= n; ++j) {
        VertexSet c;
        for (int i = 1; i <= n; ++i) {
            int d = ((i - j) % n + n) % n;
            if (d <= t - 1) c.insert(i - 1);
        }
        cols.push_back(c);
    }
    return BinaryMatrix(n, std::move(cols));
}

bool same_column_set(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows()) return false;
    auto key = [](const BinaryMatrix& m) {
        std::vector<std::uint64_t> v;
        for (auto c : m.columns()) v.push_back(c.bits());
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    return key(a) == key(b);
}

namespace {

// Minimal transversals by folding one set at a time. Independent of the
// recursive enumerator used for Alexander duals.
std::vector<std::uint64_t> fold_transversals(const std::vector<VertexSet>& sets) {
    std::vector<std::uint64_t> current{0};
    for (auto s : sets) {
        const std::uint64_t e = s.bits();
        std::vector<std::uint64_t> next;
        for (auto t : current) {
            if (t & e) {
                next.push_back(t);
                continue;
            }
            for (std::uint64_t b = e; b != 0; b &= b - 1) next.push_back(t | (b & (~b + 1)));
        }
        std::sort(next.begin(), next.end(), [](std::uint64_t a, std::uint64_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current.clear();
        for (auto t : next) {
            bool dominated = std::any_of(current.begin(), current.end(), [&](std::uint64_t k) { return (k & ~t) == 0; });
            if (!dominated) current.push_back(t);
        }
    }
    return current;
}

void check_weights(const BinaryMatrix& b, const WeightVector& alpha) {
    if (static_cast<int>(alpha.size()) != b.rows()) throw DomainError("weight vector length must equal the row count");
    for (int a : alpha)
        if (a < 0) throw DomainError("weights must be nonnegative");
    if (b.cols() == 0) throw DomainError("the cover matrix has no columns");
    for (auto c : b.columns())
        if (c.empty()) throw DomainError("the cover matrix has an empty column");
}

// The covering and packing programs over a fixed B, with the structures both
// searches reuse across weight vectors.
class CoverPrograms {
  public:
    explicit CoverPrograms(const BinaryMatrix& b) : rows_(b.rows()) {
        for (auto c : b.columns()) cols_.push_back(c.bits());
        blocker_ = fold_transversals(b.columns());
        if (rows_ <= 12) {
            feasible_.assign(std::size_t{1} << rows_, false);
            for (std::uint64_t y = 0; y < feasible_.size(); ++y)
                feasible_[y] = std::all_of(cols_.begin(), cols_.end(), [&](std::uint64_t c) { return (c & y) != 0; });
        }
    }

    long long tau(const WeightVector& alpha) const {
        TauSearch search{cols_, alpha};
        const long long value = search.solve();
        if (!feasible_.empty()) {
            const long long check = enumerate_tau(alpha);
            if (check != value)
                throw VerificationError("tau branch and bound gave " + std::to_string(value) +
                                        " but 0/1 enumeration gave " + std::to_string(check));
        }
        return value;
    }

    long long nu(const WeightVector& alpha) const {
        NuSearch search{cols_, blocker_, alpha};
        return search.solve();
    }

  private:
    long long enumerate_tau(const WeightVector& alpha) const {
        long long best = -1;
        for (std::uint64_t y = 0; y < feasible_.size(); ++y) {
            if (!feasible_[y]) continue;
            long long cost = 0;
            for (std::uint64_t b = y; b != 0; b &= b - 1) cost += alpha[std::countr_zero(b)];
            if (best < 0 || cost < best) best = cost;
        }
        return best;
    }

    struct TauSearch {
        const std::vector<std::uint64_t>& cols;
        const WeightVector& alpha;
        long long best = 0;

        long long solve() {
            std::uint64_t free_vertices = 0;
            best = 0;
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                if (alpha[i] == 0) free_vertices |= std::uint64_t{1} << i;
                best += alpha[i];  // all-ones y is feasible
            }
            branch(free_vertices, 0, 0);
            return best;
        }

        long long min_weight(std::uint64_t set) const {
            long long m = -1;
            for (std::uint64_t b = set; b != 0; b &= b - 1) {
                long long a = alpha[std::countr_zero(b)];
                if (m < 0 || a < m) m = a;
            }
            return m;
        }

        void branch(std::uint64_t chosen, std::uint64_t excluded, long long cost) {
            if (cost >= best) return;
            std::vector<std::uint64_t> open;
            for (auto c : cols) {
                if (c & chosen) continue;
                std::uint64_t avail = c & ~excluded;
                if (avail == 0) return;
                open.push_back(avail);
            }
            if (open.empty()) {
                best = cost;
                return;
            }
            std::sort(open.begin(), open.end(),
                      [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
            // Disjoint open columns each need their own purchase.
            long long bound = cost;
            std::uint64_t used = 0;
            for (auto s : open) {
                if (s & used) continue;
                used |= s;
                bound += min_weight(s);
            }
            if (bound >= best) return;
            std::vector<int> order;
            for (std::uint64_t b = open.front(); b != 0; b &= b - 1) order.push_back(std::countr_zero(b));
            std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return alpha[x] < alpha[y]; });
            std::uint64_t earlier = 0;
            for (int v : order) {
                const std::uint64_t bit = std::uint64_t{1} << v;
                branch(chosen | bit, excluded | earlier, cost + alpha[v]);
                earlier |= bit;
            }
        }
    };

    struct NuSearch {
        const std::vector<std::uint64_t>& cols;
        const std::vector<std::uint64_t>& blocker;
        WeightVector residual;
        long long best = 0;
        long long ceiling = 0;

        NuSearch(const std::vector<std::uint64_t>& c, const std::vector<std::uint64_t>& bl, const WeightVector& alpha)
            : cols(c), blocker(bl), residual(alpha) {}

        // Every column meets every blocker set, so the packing still to come is
        // bounded by the residual weight of each blocker set.
        long long remaining_bound() const {
            long long m = -1;
            for (auto t : blocker) {
                long long s = 0;
                for (std::uint64_t b = t; b != 0; b &= b - 1) s += residual[std::countr_zero(b)];
                if (m < 0 || s < m) m = s;
            }
            return m;
        }

        long long solve() {
            ceiling = remaining_bound();
            best = 0;
            dfs(0, 0);
            return best;
        }

        void dfs(std::size_t k, long long value) {
            if (value > best) best = value;
            if (best >= ceiling || k == cols.size()) return;
            if (value + remaining_bound() <= best) return;
            const std::uint64_t col = cols[k];
            long long cap = -1;
            for (std::uint64_t b = col; b != 0; b &= b - 1) {
                long long r = residual[std::countr_zero(b)];
                if (cap < 0 || r < cap) cap = r;
            }
            for (long long z = cap; z >= 0; --z) {
                for (std::uint64_t b = col; b != 0; b &= b - 1) residual[std::countr_zero(b)] -= static_cast<int>(z);
                dfs(k + 1, value + z);
                for (std::uint64_t b = col; b != 0; b &= b - 1) residual[std::countr_zero(b)] += static_cast<int>(z);
                if (best >= ceiling) return;
            }
        }
    };

    int rows_;
    std::vector<std::uint64_t> cols_;
    std::vector<std::uint64_t> blocker_;
    std::vector<bool> feasible_;
};

}  // namespace

BinaryMatrix minimal_solutions(const BinaryMatrix& a) {
    if (a.cols() == 0) throw DomainError("the incidence matrix has no columns");
    std::vector<VertexSet> sets;
    for (auto t : fold_transversals(a.columns())) sets.emplace_back(t);
    return BinaryMatrix(a.rows(), canonical_columns(a.rows(), sets));
}

long long tau(const BinaryMatrix& b, const WeightVector& alpha) {
    check_weights(b, alpha);
    return CoverPrograms(b).tau(alpha);
}

long long nu(const BinaryMatrix& b, const WeightVector& alpha) {
    check_weights(b, alpha);
    return CoverPrograms(b).nu(alpha);
}

long long tau_enumerate(const BinaryMatrix& b, const WeightVector& alpha) {
    check_weights(b, alpha);
    if (b.rows() > 20) throw DomainError("enumeration supports at most 20 rows");
    long long best = -1;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << b.rows()); ++y) {
        bool ok = std::all_of(b.columns().begin(), b.columns().end(), [&](VertexSet c) { return (c.bits() & y) != 0; });
        if (!ok) continue;
        long long cost = 0;
        for (int i = 0; i < b.rows(); ++i)
            if ((y >> i) & 1U) cost += alpha[i];
        if (best < 0 || cost < best) best = cost;
    }
    return best;
}

namespace {

// Visits every vector in {0..bound}^n with the given sum, lexicographically.
template <typename Visit>
bool compositions(int n, int bound, int sum, WeightVector& alpha, int pos, Visit&& visit) {
    if (pos == n) return sum == 0 ? visit(alpha) : false;
    const int rest = n - pos - 1;
    for (int v = std::min(bound, sum); v >= 0; --v) {
        if (sum - v > rest * bound) break;
        alpha[pos] = v;
        if (compositions(n, bound, sum - v, alpha, pos + 1, visit)) return true;
    }
    return false;
}

bool greatest_rotation(const WeightVector& alpha) {
    const std::size_t n = alpha.size();
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            int a = alpha[(i + r) % n], b = alpha[i];
            if (a > b) return false;
            if (a < b) break;
        }
    }
    return true;
}

}  // namespace

GapSearchResult duality_gap_search(const TConnInstance& inst, int entry_bound, std::uint64_t cap) {
    if (entry_bound < 0) throw DomainError("entry bound must be nonnegative");
    const int n = inst.n();
    long double space = 1;
    for (int i = 0; i < n; ++i) space *= entry_bound + 1;
    if (space > static_cast<long double>(cap))
        throw ResourceLimitError("gap search space (" + std::to_string(entry_bound + 1) + ")^" + std::to_string(n) +
                                 " exceeds the cap of " + std::to_string(cap));

    const BinaryMatrix b = minimal_solutions(incidence_matrix(inst));
    const CoverPrograms programs(b);
    const bool rotations = classify_shape(inst.graph()).kind == ShapeKind::Cycle && inst.graph() == cycle(n);

    GapSearchResult result;
    WeightVector alpha(static_cast<std::size_t>(n), 0);
    for (int sum = entry_bound * n; sum >= 0; --sum) {
        bool found = compositions(n, entry_bound, sum, alpha, 0, [&](const WeightVector& a) {
            if (rotations && !greatest_rotation(a)) {
                ++result.skipped_by_symmetry;
                return false;
            }
            ++result.evaluated;
            const long long t = programs.tau(a);
            const long long v = programs.nu(a);
            if (t != v) {
                result.witness = a;
                result.tau = t;
                result.nu = v;
                return true;
            }
            return false;
        });
        if (found) break;
    }
    return result;
}

}  // namespace tcover
