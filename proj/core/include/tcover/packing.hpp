#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcover/algebra.hpp"
#include "tcover/graph.hpp"

namespace tcover {

/// Variables set to 0 (`zeros`) and to 1 (`ones`); the two sets are disjoint.
class Minor {
  public:
    Minor() = default;
    /// Throws DomainError when the sets overlap.
    Minor(VertexSet zeros, VertexSet ones);

    [[nodiscard]] VertexSet zeros() const { return zeros_; }
    [[nodiscard]] VertexSet ones() const { return ones_; }
    [[nodiscard]] bool empty() const { return zeros_.empty() && ones_.empty(); }

    friend bool operator==(const Minor&, const Minor&) = default;

  private:
    VertexSet zeros_;
    VertexSet ones_;
};

/// An ideal after restriction, over the surviving variables relabeled 1..k in
/// increasing order; `surviving[i]` is the original 0-based index of new variable i.
struct Restriction {
    MonomialIdeal ideal;
    std::vector<int> surviving;
};

/// Drops generators meeting `zeros`, deletes the `ones` variables from the rest and
/// minimalizes. Works for any monomial ideal, not only square-free ones.
Restriction restrict(const MonomialIdeal& ideal, const Minor& minor);

/// As restrict(), but keeps the original variable universe (removed variables simply
/// no longer occur).
MonomialIdeal restrict_in_place(const MonomialIdeal& ideal, const Minor& minor);

struct KonigResult {
    bool konig = false;
    int height = 0;
    /// Size of the largest family of generators with pairwise disjoint supports.
    int max_disjoint = 0;
    /// Pairwise disjoint generators: `height` of them when konig, else a largest family.
    std::vector<Monomial> certificate;
};

/// Whether height(I) generators with pairwise disjoint supports exist. The zero and
/// unit ideals count as König with height 0.
KonigResult is_konig(const MonomialIdeal& ideal);

struct PackingWitness {
    Minor minor;
    /// Restricted generators, written in the original variable names.
    MonomialIdeal restricted;
    int height = 0;
    int max_disjoint = 0;
};

struct PackingReport {
    bool packed = true;
    std::optional<PackingWitness> witness;
    /// Minors examined before the verdict (all 3^n when packed).
    std::uint64_t minors_checked = 0;
};

/// Digit i of the ternary counter (variable i) is 0 = keep, 1 = set to zero,
/// 2 = set to one. Counter 0 is the empty minor.
Minor minor_from_counter(std::uint64_t counter, int nvars);

/// Scans every minor in counter order and reports the first one that is not König.
/// The result does not depend on `threads`.
PackingReport is_packed(const MonomialIdeal& ideal, int threads = 1);

struct NonCutWitness {
    VertexSet subgraph;
    int non_cut = 0;
};

/// First connected induced (t+1)-vertex subgraph with at least three non-cut vertices.
std::optional<NonCutWitness> non_cut_witness(const Graph& g, int t);

enum class NonpackingReason { NotKonig, OddCycleCover, Reduction };

std::string to_string(NonpackingReason r);

/// A minor of J_t(C_n) that exhibits the failure of the packing property.
struct CycleNonpackingMinor {
    int n = 0;
    int t = 0;
    NonpackingReason reason = NonpackingReason::NotKonig;
    /// Absent for NotKonig (the empty minor already fails).
    std::optional<Minor> minor;
    /// The restricted ideal equals J_{target_t}(C_{target_n}) after relabeling.
    int target_n = 0;
    int target_t = 0;
    /// relabeling[i] = 0-based target vertex of the i-th surviving vertex (ascending order).
    std::vector<int> relabeling;
};

/// Builds and verifies the zero set that turns J_t(C_n) into the cover ideal of an
/// odd cycle (t = 3 and the two sporadic cases) or of J_{t-1}(C_{(t-1)l}) (t >= 4).
/// Requires t >= 3, n > t and (n, t) not in {(6,3), (9,3), (8,4)}. Throws
/// VerificationError when the restriction does not match its target.
CycleNonpackingMinor cycle_nonpacking_minor(int n, int t);

/// Follows cycle_nonpacking_minor through its reductions until it reaches an odd
/// cycle cover ideal or a non-König instance.
std::vector<CycleNonpackingMinor> cycle_nonpacking_chain(int n, int t);

/// Finds a dihedral relabeling of the k surviving variables under which `ideal`
/// (over k variables) equals `target`; relabeling[i] is the image of variable i.
std::optional<std::vector<int>> dihedral_match(const MonomialIdeal& ideal, const MonomialIdeal& target);

}  // namespace tcover
