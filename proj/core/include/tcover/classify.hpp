#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcover/duality.hpp"
#include "tcover/graph.hpp"
#include "tcover/packing.hpp"

namespace tcover {

enum class CaseTag { NEqualsT, Path, CycleSpecial, Bipartite, No };

std::string to_string(CaseTag c);

/// Predicted packing/Simis verdict for J_t(G) and the case that decides it.
struct Classification {
    bool verdict = false;
    CaseTag tag = CaseTag::No;
    /// Why the prediction is negative; empty otherwise.
    std::string reason;
};

/// For t >= 3: positive exactly when n = t, G is a path, or G is one of the cycles
/// C_3, C_6, C_9 (t = 3), C_4, C_8 (t = 4), C_t (t >= 5). For t = 2 the verdict is
/// bipartiteness, tagged Bipartite. Throws DomainError on a disconnected graph or
/// t outside [2, n].
Classification theorem_classification(const Graph& g, int t);

struct HarnessConfig {
    /// Every connected labeled graph on 1..n_max vertices.
    int n_max = 0;
    int t_min = 3;
    int t_max = 0;
    /// 0 means s_max = t for each instance.
    int s_max = 0;
    /// Paths and cycles on (n_max, family_n_max] vertices with t in [t_min, family_t_max].
    int family_n_max = 0;
    int family_t_max = 0;
    /// Reuse results across isomorphic labeled graphs.
    bool dedup = true;
    int threads = 1;
    std::size_t generator_cap = kDefaultGeneratorCap;
};

struct HarnessRow {
    std::string graph;  // graph6
    int n = 0;
    int t = 0;
    bool predicted = false;
    std::string case_tag;
    bool packed_computed = false;
    /// "EqualUpTo", "WitnessAt" or "Aborted".
    std::string simis_bounded;
    int s_max = 0;
    std::optional<int> witness_s;
    std::optional<std::string> witness_monomial;
    /// Packing witness minor as 1-based labels, when not packed.
    std::optional<std::vector<int>> minor_zeros;
    std::optional<std::vector<int>> minor_ones;
    std::optional<std::string> error;
    bool disagreement = false;

    friend bool operator==(const HarnessRow&, const HarnessRow&) = default;
};

struct HarnessReport {
    std::vector<HarnessRow> rows;
    std::size_t disagreements = 0;
    std::size_t aborted = 0;
    std::size_t predicted_true = 0;
    std::size_t predicted_false = 0;
    std::size_t simis_witnesses = 0;

    friend bool operator==(const HarnessReport&, const HarnessReport&) = default;
};

/// Evaluates one instance: packing by minor scan, Simis up to s_max, both compared
/// with theorem_classification. A row disagrees when the computed packing differs
/// from the prediction or a predicted-positive instance shows a Simis witness.
HarnessRow evaluate_instance(const Graph& g, int t, int s_max, std::size_t cap = kDefaultGeneratorCap);

/// Rows are ordered by (graph6 code, t) whatever the thread count.
HarnessReport verify_theorem(const HarnessConfig& config);

/// Recomputes the summary counters from the rows.
void summarize(HarnessReport& report);

}  // namespace tcover
