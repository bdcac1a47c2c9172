#include "tcover/classify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>
#include <utility>

#include "tcover/connected.hpp"
#include "tcover/error.hpp"

namespace tcover {

std::string to_string(CaseTag c) {
    switch (c) {
        case CaseTag::NEqualsT: return "n_equals_t";
        case CaseTag::Path: return "path";
        case CaseTag::CycleSpecial: return "cycle_special";
        case CaseTag::Bipartite: return "bipartite";
        case CaseTag::No: return "no";
    }
    return "no";
}

namespace {

bool packed_cycle(int n, int t) {
    if (t == 3) return n == 3 || n == 6 || n == 9;
    if (t == 4) return n == 4 || n == 8;
    return n == t;
}

}  // namespace

Classification theorem_classification(const Graph& g, int t) {
    const int n = g.order();
    if (n == 0 || !g.connected()) throw DomainError("graph must be connected and nonempty");
    if (t < 2 || t > n) throw DomainError("t must satisfy 2 <= t <= n, got t = " + std::to_string(t));

    if (t == 2) {
        if (is_bipartite(g)) return {true, CaseTag::Bipartite, ""};
        return {false, CaseTag::No, "graph contains an odd cycle"};
    }
    if (n == t) return {true, CaseTag::NEqualsT, ""};

    Shape shape = classify_shape(g);
    if (shape.kind == ShapeKind::Path) return {true, CaseTag::Path, ""};
    if (shape.kind == ShapeKind::Cycle) {
        if (packed_cycle(n, t)) return {true, CaseTag::CycleSpecial, ""};
        return {false, CaseTag::No,
                "C_" + std::to_string(n) + " is not among the packed cycles for t = " + std::to_string(t)};
    }
    if (auto w = non_cut_witness(g, t))
        return {false, CaseTag::No,
                "induced subgraph on " + w->subgraph.to_string() + " is connected with " +
                    std::to_string(w->non_cut) + " non-cut vertices"};
    return {false, CaseTag::No, "neither a path nor a cycle"};
}

HarnessRow evaluate_instance(const Graph& g, int t, int s_max, std::size_t cap) {
    HarnessRow row;
    row.graph = to_graph6(g);
    row.n = g.order();
    row.t = t;
    row.s_max = s_max;

    Classification cls = theorem_classification(g, t);
    row.predicted = cls.verdict;
    row.case_tag = to_string(cls.tag);

    MonomialIdeal j = cover_ideal(TConnInstance(g, t));
    PackingReport pack = is_packed(j);
    row.packed_computed = pack.packed;
    if (pack.witness) {
        row.minor_zeros = pack.witness->minor.zeros().labels();
        row.minor_ones = pack.witness->minor.ones().labels();
    }

    bool witness = false;
    try {
        SimisReport simis = simis_check(j, s_max, cap);
        if (simis.witness) {
            witness = true;
            row.simis_bounded = "WitnessAt";
            row.witness_s = simis.witness->s;
            row.witness_monomial = simis.witness->monomial.to_string();
        } else {
            row.simis_bounded = "EqualUpTo";
        }
    } catch (const ResourceLimitError& e) {
        row.simis_bounded = "Aborted";
        row.error = e.what();
    }

    // A Simis witness forces non-packing, so it also contradicts a packed verdict.
    row.disagreement = row.packed_computed != row.predicted || (witness && (row.predicted || row.packed_computed));
    return row;
}

void summarize(HarnessReport& report) {
    report.disagreements = report.aborted = report.predicted_true = report.predicted_false = 0;
    report.simis_witnesses = 0;
    for (const auto& r : report.rows) {
        if (r.disagreement) ++report.disagreements;
        if (r.error) ++report.aborted;
        if (r.predicted)
            ++report.predicted_true;
        else
            ++report.predicted_false;
        if (r.witness_s) ++report.simis_witnesses;
    }
}

namespace {

struct Task {
    Graph graph;
    int t = 0;
    // Index into the evaluated list, and the permutation carrying this graph onto it.
    std::size_t slot = 0;
    std::vector<int> perm;
};

std::vector<int> map_labels(const std::vector<int>& labels, const std::vector<int>& inverse) {
    std::vector<int> out;
    for (int l : labels) out.push_back(inverse[l - 1] + 1);
    std::sort(out.begin(), out.end());
    return out;
}

// Rewrites a row computed on g.relabeled(perm) in terms of g's own labels.
HarnessRow translate(HarnessRow row, const Graph& g, const std::vector<int>& perm) {
    row.graph = to_graph6(g);
    if (perm.empty()) return row;
    std::vector<int> inverse(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = static_cast<int>(i);
    if (row.minor_zeros) row.minor_zeros = map_labels(*row.minor_zeros, inverse);
    if (row.minor_ones) row.minor_ones = map_labels(*row.minor_ones, inverse);
    if (row.witness_monomial) {
        Monomial m = Monomial::parse(*row.witness_monomial);
        Monomial out;
        for (int v = 0; v < static_cast<int>(perm.size()); ++v)
            if (int e = m.exponent(v)) out.set_exponent(inverse[v], e);
        row.witness_monomial = out.to_string();
    }
    return row;
}

}  // namespace

HarnessReport verify_theorem(const HarnessConfig& config) {
    if (config.t_min < 2) throw DomainError("t_min must be at least 2");
    if (config.n_max > 8 && config.dedup) throw DomainError("isomorphism dedup supports n_max <= 8");

    auto t_hi = [&](int cap_t, int n) { return cap_t > 0 ? std::min(cap_t, n) : n; };

    std::vector<Task> tasks;
    std::vector<std::pair<Graph, int>> work;  // instances actually evaluated
    std::map<std::pair<std::string, int>, std::size_t> seen;

    for (int n = 1; n <= config.n_max; ++n) {
        for (const Graph& g : connected_labeled_graphs(n)) {
            for (int t = config.t_min; t <= t_hi(config.t_max, n); ++t) {
                Task task{g, t, 0, {}};
                if (config.dedup) {
                    task.perm = canonical_relabeling(g);
                    Graph canon = g.relabeled(task.perm);
                    auto [it, fresh] = seen.try_emplace({to_graph6(canon), t}, work.size());
                    if (fresh) work.emplace_back(canon, t);
                    task.slot = it->second;
                } else {
                    task.slot = work.size();
                    work.emplace_back(g, t);
                }
                tasks.push_back(std::move(task));
            }
        }
    }
    for (int n = std::max(config.n_max + 1, 2); n <= config.family_n_max; ++n) {
        for (int t = config.t_min; t <= t_hi(config.family_t_max, n); ++t) {
            for (bool is_cycle : {false, true}) {
                if (is_cycle && n < 3) continue;
                Graph g = is_cycle ? cycle(n) : path(n);
                tasks.push_back(Task{g, t, work.size(), {}});
                work.emplace_back(g, t);
            }
        }
    }

    std::vector<HarnessRow> results(work.size());
    auto run = [&](std::size_t i) {
        const auto& [g, t] = work[i];
        int s_max = config.s_max > 0 ? config.s_max : t;
        results[i] = evaluate_instance(g, t, s_max, config.generator_cap);
    };
    const int threads = std::max(1, config.threads);
    if (threads == 1 || work.size() < 2) {
        for (std::size_t i = 0; i < work.size(); ++i) run(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; ++k) {
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < work.size();) {
                    try {
                        run(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    HarnessReport report;
    report.rows.reserve(tasks.size());
    for (const auto& task : tasks) report.rows.push_back(translate(results[task.slot], task.graph, task.perm));
    std::stable_sort(report.rows.begin(), report.rows.end(), [](const HarnessRow& a, const HarnessRow& b) {
        return std::tie(a.graph, a.t) < std::tie(b.graph, b.t);
    });
    summarize(report);
    return report;
}

}  // namespace tcover
