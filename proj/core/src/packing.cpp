#include "tcover/packing.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>
#include <unordered_map>

#include "tcover/connected.hpp"
#include "tcover/error.hpp"

namespace tcover {

Minor::Minor(VertexSet zeros, VertexSet ones) : zeros_(zeros), ones_(ones) {
    if (zeros.intersects(ones)) throw DomainError("a minor cannot set a variable to both 0 and 1");
}

MonomialIdeal restrict_in_place(const MonomialIdeal& ideal, const Minor& minor) {
    std::vector<Monomial> kept;
    for (const auto& g : ideal.gens()) {
        if (g.support().intersects(minor.zeros())) continue;
        Monomial h = g;
        for (int v : (g.support() & minor.ones()).indices()) h.set_exponent(v, 0);
        kept.push_back(h);
    }
    return MonomialIdeal::from(ideal.nvars(), std::move(kept));
}

Restriction restrict(const MonomialIdeal& ideal, const Minor& minor) {
    const MonomialIdeal in_place = restrict_in_place(ideal, minor);
    Restriction out;
    const VertexSet gone = minor.zeros() | minor.ones();
    for (int v = 0; v < ideal.nvars(); ++v)
        if (!gone.contains(v)) out.surviving.push_back(v);
    std::vector<Monomial> relabeled;
    for (const auto& g : in_place.gens()) {
        Monomial h;
        for (std::size_t i = 0; i < out.surviving.size(); ++i) h.set_exponent(static_cast<int>(i), g.exponent(out.surviving[i]));
        relabeled.push_back(h);
    }
    out.ideal = MonomialIdeal::from(static_cast<int>(out.surviving.size()), std::move(relabeled));
    return out;
}

namespace {

// Largest family of pairwise disjoint sets among `sets` (sorted by size), stopping
// early once `target` is reached.
class DisjointSearch {
  public:
    DisjointSearch(std::vector<std::uint64_t> sets, int target) : sets_(std::move(sets)), target_(target) {
        std::sort(sets_.begin(), sets_.end(), [](std::uint64_t a, std::uint64_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
        min_size_ = sets_.empty() ? 1 : std::popcount(sets_.front());
        for (auto s : sets_) all_ |= s;
    }

    int run() {
        dfs(0, 0);
        return static_cast<int>(best_.size());
    }

    [[nodiscard]] const std::vector<std::uint64_t>& best() const { return best_; }

  private:
    void dfs(std::size_t from, std::uint64_t used) {
        if (current_.size() > best_.size()) best_ = current_;
        if (static_cast<int>(best_.size()) >= target_) return;
        const int free = std::popcount(all_ & ~used);
        if (static_cast<int>(current_.size()) + free / min_size_ <= static_cast<int>(best_.size())) return;
        for (std::size_t j = from; j < sets_.size(); ++j) {
            if (sets_[j] & used) continue;
            current_.push_back(sets_[j]);
            dfs(j + 1, used | sets_[j]);
            current_.pop_back();
            if (static_cast<int>(best_.size()) >= target_) return;
        }
    }

    std::vector<std::uint64_t> sets_;
    int target_;
    int min_size_ = 1;
    std::uint64_t all_ = 0;
    std::vector<std::uint64_t> current_;
    std::vector<std::uint64_t> best_;
};

int clutter_height(const std::vector<std::uint64_t>& sets) {
    std::vector<VertexSet> vs;
    vs.reserve(sets.size());
    for (auto s : sets) vs.emplace_back(s);
    return min_transversal_size(vs);
}

bool clutter_is_konig(const std::vector<std::uint64_t>& sets) {
    const int h = clutter_height(sets);
    return DisjointSearch(sets, h).run() >= h;
}

// Restricted supports of a minor, reduced to the inclusion-minimal ones.
// Returns false when some generator collapses to 1 (unit ideal).
bool restricted_clutter(const std::vector<std::uint64_t>& supports, std::uint64_t zeros, std::uint64_t ones,
                        std::vector<std::uint64_t>& out) {
    out.clear();
    for (auto s : supports) {
        if (s & zeros) continue;
        std::uint64_t r = s & ~ones;
        if (r == 0) return false;
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::size_t kept = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        bool dominated = false;
        for (std::size_t k = 0; k < kept; ++k) {
            if ((out[k] & ~out[i]) == 0) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out[kept++] = out[i];
    }
    out.resize(kept);
    return true;
}

struct ClutterHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
        std::uint64_t h = v.size();
        for (auto x : v) h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

std::uint64_t pow3(int n) {
    std::uint64_t p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

// Scans counters [begin, end) and returns the first one whose minor is not König.
class MinorScanner {
  public:
    MinorScanner(const std::vector<std::uint64_t>& supports, int nvars) : supports_(supports), nvars_(nvars) {}

    std::optional<std::uint64_t> scan(std::uint64_t begin, std::uint64_t end) {
        std::vector<int> digits(static_cast<std::size_t>(nvars_), 0);
        std::uint64_t zeros = 0, ones = 0;
        std::uint64_t c = begin;
        for (int i = 0; i < nvars_; ++i, c /= 3) {
            digits[i] = static_cast<int>(c % 3);
            if (digits[i] == 1) zeros |= std::uint64_t{1} << i;
            if (digits[i] == 2) ones |= std::uint64_t{1} << i;
        }
        std::vector<std::uint64_t> clutter;
        for (std::uint64_t counter = begin; counter < end; ++counter) {
            if (!konig_minor(zeros, ones, clutter)) return counter;
            // Ternary increment: keep -> zero -> one -> keep (with carry).
            for (int i = 0; i < nvars_; ++i) {
                const std::uint64_t bit = std::uint64_t{1} << i;
                if (digits[i] == 0) {
                    digits[i] = 1;
                    zeros |= bit;
                    break;
                }
                if (digits[i] == 1) {
                    digits[i] = 2;
                    zeros &= ~bit;
                    ones |= bit;
                    break;
                }
                digits[i] = 0;
                ones &= ~bit;
            }
        }
        return std::nullopt;
    }

  private:
    bool konig_minor(std::uint64_t zeros, std::uint64_t ones, std::vector<std::uint64_t>& clutter) {
        if (!restricted_clutter(supports_, zeros, ones, clutter)) return true;  // unit ideal
        if (clutter.empty()) return true;                                       // zero ideal
        auto it = cache_.find(clutter);
        if (it != cache_.end()) return it->second;
        const bool k = clutter_is_konig(clutter);
        cache_.emplace(clutter, k);
        return k;
    }

    const std::vector<std::uint64_t>& supports_;
    int nvars_;
    std::unordered_map<std::vector<std::uint64_t>, bool, ClutterHash> cache_;
};

}  // namespace

KonigResult is_konig(const MonomialIdeal& ideal) {
    KonigResult result;
    if (ideal.is_zero() || ideal.is_unit()) {
        result.konig = true;
        return result;
    }
    std::vector<std::uint64_t> sets;
    for (auto s : ideal.supports()) sets.push_back(s.bits());
    result.height = clutter_height(sets);
    // Disjoint supports need distinct cover vertices, so the family never exceeds the height.
    DisjointSearch search(sets, result.height);
    result.max_disjoint = search.run();
    result.konig = result.max_disjoint >= result.height;
    for (auto s : search.best()) {
        // Report the canonical-first generator with this support.
        for (const auto& g : ideal.gens()) {
            if (g.support().bits() == s) {
                result.certificate.push_back(g);
                break;
            }
        }
    }
    std::sort(result.certificate.begin(), result.certificate.end(), canonical_less);
    return result;
}

Minor minor_from_counter(std::uint64_t counter, int nvars) {
    VertexSet zeros, ones;
    for (int i = 0; i < nvars; ++i, counter /= 3) {
        if (counter % 3 == 1) zeros.insert(i);
        if (counter % 3 == 2) ones.insert(i);
    }
    return Minor(zeros, ones);
}

PackingReport is_packed(const MonomialIdeal& ideal, int threads) {
    const int n = ideal.nvars();
    if (n > 40) throw DomainError("minor enumeration supports at most 40 variables");
    std::vector<std::uint64_t> supports;
    for (auto s : ideal.supports()) supports.push_back(s.bits());
    const std::uint64_t total = pow3(n);

    std::optional<std::uint64_t> first_failure;
    threads = std::max(1, threads);
    if (threads == 1) {
        first_failure = MinorScanner(supports, n).scan(0, total);
    } else {
        // Workers take blocks round-robin; a worker stops once its next block starts
        // beyond the smallest failure seen, so the minimum is the global first failure.
        constexpr std::uint64_t kBlock = 2048;
        std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                MinorScanner scanner(supports, n);
                for (std::uint64_t start = static_cast<std::uint64_t>(w) * kBlock; start < total;
                     start += static_cast<std::uint64_t>(threads) * kBlock) {
                    if (start > best.load(std::memory_order_relaxed)) return;
                    auto hit = scanner.scan(start, std::min(total, start + kBlock));
                    if (hit) {
                        std::uint64_t cur = best.load();
                        while (*hit < cur && !best.compare_exchange_weak(cur, *hit)) {
                        }
                        return;
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (best.load() != std::numeric_limits<std::uint64_t>::max()) first_failure = best.load();
    }

    PackingReport report;
    if (!first_failure) {
        report.packed = true;
        report.minors_checked = total;
        return report;
    }
    report.packed = false;
    report.minors_checked = *first_failure + 1;
    PackingWitness w;
    w.minor = minor_from_counter(*first_failure, n);
    w.restricted = restrict_in_place(ideal, w.minor);
    const auto k = is_konig(w.restricted);
    w.height = k.height;
    w.max_disjoint = k.max_disjoint;
    report.witness = std::move(w);
    return report;
}

std::optional<NonCutWitness> non_cut_witness(const Graph& g, int t) {
    if (t < 2) throw DomainError("t must be at least 2");
    if (!g.connected()) throw DomainError("non_cut_witness requires a connected graph");
    if (g.order() <= t) return std::nullopt;
    for (VertexSet s : connected_induced_subsets(g, t + 1)) {
        const int r = non_cut_vertices(g.induced(s)).size();
        if (r >= 3) return NonCutWitness{s, r};
    }
    return std::nullopt;
}

std::string to_string(NonpackingReason r) {
    switch (r) {
        case NonpackingReason::NotKonig: return "NotKonig";
        case NonpackingReason::OddCycleCover: return "OddCycleCover";
        case NonpackingReason::Reduction: return "Reduction";
    }
    return "?";
}

std::optional<std::vector<int>> dihedral_match(const MonomialIdeal& ideal, const MonomialIdeal& target) {
    const int k = ideal.nvars();
    if (target.nvars() != k || ideal.size() != target.size()) return std::nullopt;
    if (k == 0) return ideal == target ? std::optional<std::vector<int>>(std::vector<int>{}) : std::nullopt;
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int dir : {1, -1}) {
        for (int shift = 0; shift < k; ++shift) {
            for (int i = 0; i < k; ++i) perm[i] = ((shift + dir * i) % k + k) % k;
            std::vector<Monomial> mapped;
            mapped.reserve(ideal.size());
            for (const auto& g : ideal.gens()) {
                Monomial h;
                for (int v : g.support().indices()) h.set_exponent(perm[v], g.exponent(v));
                mapped.push_back(h);
            }
            if (MonomialIdeal::from(k, std::move(mapped)) == target) return perm;
        }
    }
    return std::nullopt;
}

namespace {

VertexSet labels_to_set(const std::vector<int>& labels) { return VertexSet::of(labels); }

MonomialIdeal cycle_cover(int n, int t) { return cover_ideal(TConnInstance(cycle(n), t)); }

}  // namespace

CycleNonpackingMinor cycle_nonpacking_minor(int n, int t) {
    if (t < 3) throw DomainError("cycle_nonpacking_minor needs t >= 3");
    if (n <= t) throw DomainError("cycle_nonpacking_minor needs n > t");
    if ((n == 6 && t == 3) || (n == 9 && t == 3) || (n == 8 && t == 4))
        throw DomainError("J_" + std::to_string(t) + "(C_" + std::to_string(n) + ") has the packing property");
    if (n > kMaxVars) throw DomainError("n exceeds the variable universe");

    CycleNonpackingMinor out;
    out.n = n;
    out.t = t;
    const MonomialIdeal cover = cycle_cover(n, t);

    if (n % t != 0) {
        out.reason = NonpackingReason::NotKonig;
        out.target_n = n;
        out.target_t = t;
        if (is_konig(cover).konig)
            throw VerificationError("J_" + std::to_string(t) + "(C_" + std::to_string(n) + ") is unexpectedly König");
        return out;
    }

    std::vector<int> zeros;
    const int l = n / t;
    if (t == 3) {
        out.reason = NonpackingReason::OddCycleCover;
        out.target_t = 2;
        if (n % 12 == 0) {
            const int k = n / 12;
            if (k % 2 == 0) {
                zeros = {1, 4, 7, 10};
                for (int i = 0; i <= 3 * k - 4; ++i) zeros.push_back(4 * i + 13);
                out.target_n = 9 * k - 1;
            } else {
                for (int i = 0; i <= 3 * k - 1; ++i) zeros.push_back(4 * i + 1);
                out.target_n = 9 * k;
            }
        } else if (n % 12 == 3) {
            const int k = (n - 3) / 12;
            zeros = {1, 5, 9};
            for (int i = 0; i <= 4 * k - 4; ++i) zeros.push_back(3 * i + 13);
            out.target_n = 8 * k + 3;
        } else if (n % 12 == 6) {
            const int k = (n - 6) / 12;
            for (int i = 0; i <= 4 * k - 2; ++i) zeros.push_back(3 * i + 1);
            zeros.push_back(12 * k - 1);
            zeros.push_back(12 * k + 3);
            out.target_n = 8 * k + 5;
        } else {
            const int k = (n - 9) / 12;
            for (int i = 0; i <= 4 * k - 1; ++i) zeros.push_back(3 * i + 1);
            zeros.push_back(12 * k + 2);
            zeros.push_back(12 * k + 6);
            out.target_n = 8 * k + 7;
        }
    } else if (t == 4 && n == 12) {
        out.reason = NonpackingReason::OddCycleCover;
        zeros = {1, 4, 6, 8, 11};
        out.target_n = 7;
        out.target_t = 2;
    } else if (t == 5 && n == 10) {
        out.reason = NonpackingReason::OddCycleCover;
        zeros = {2, 4, 6, 8, 10};
        out.target_n = 5;
        out.target_t = 2;
    } else {
        out.reason = NonpackingReason::Reduction;
        for (int m = 1; m <= l; ++m) zeros.push_back(t * m);
        out.target_n = (t - 1) * l;
        out.target_t = t - 1;
    }

    out.minor = Minor(labels_to_set(zeros), VertexSet{});
    const Restriction restricted = restrict(cover, *out.minor);
    const auto describe = [&] {
        return "J_" + std::to_string(t) + "(C_" + std::to_string(n) + ") with zeros " + out.minor->zeros().to_string() +
               " vs J_" + std::to_string(out.target_t) + "(C_" + std::to_string(out.target_n) + ")";
    };
    if (static_cast<int>(restricted.surviving.size()) != out.target_n)
        throw VerificationError(describe() + ": " + std::to_string(restricted.surviving.size()) +
                                " variables survive");
    const MonomialIdeal target = cycle_cover(out.target_n, out.target_t);
    auto match = dihedral_match(restricted.ideal, target);
    if (!match) throw VerificationError(describe() + ": no dihedral relabeling matches");
    out.relabeling = std::move(*match);
    return out;
}

std::vector<CycleNonpackingMinor> cycle_nonpacking_chain(int n, int t) {
    std::vector<CycleNonpackingMinor> chain;
    while (true) {
        chain.push_back(cycle_nonpacking_minor(n, t));
        const auto& step = chain.back();
        if (step.reason != NonpackingReason::Reduction) break;
        n = step.target_n;
        t = step.target_t;
    }
    return chain;
}

}  // namespace tcover
