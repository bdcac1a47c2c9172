#pragma once

#include <optional>
#include <vector>

#include "tcover/algebra.hpp"
#include "tcover/graph.hpp"

namespace tcover {

/// A connected graph together with a connectivity size t, 2 <= t <= n.
class TConnInstance {
  public:
    /// Throws DomainError when t is out of range, the graph is disconnected, or n > kMaxVars.
    TConnInstance(Graph graph, int t);

    [[nodiscard]] const Graph& graph() const { return graph_; }
    [[nodiscard]] int t() const { return t_; }
    [[nodiscard]] int n() const { return graph_.order(); }

  private:
    Graph graph_;
    int t_;
};

/// I_t(G): generated by the products over t-vertex sets inducing connected subgraphs.
MonomialIdeal t_connected_ideal(const TConnInstance& inst);

/// J_t(G), the Alexander dual of I_t(G); its generators are the minimal t-covers.
MonomialIdeal cover_ideal(const TConnInstance& inst);

/// Minimal t-covers of the path 1-2-...-n built directly from the gap
/// inequalities, without any subset scan.
MonomialIdeal path_cover_gens(int n, int t);

/// Minimal t-covers of the cycle on n vertices from the cyclic gap inequalities.
MonomialIdeal cycle_cover_gens(int n, int t);

/// For n = t*l, the t monomials x_i x_{i+t} ... x_{i+(l-1)t}, i = 1..t, whose
/// supports partition the vertices. Absent when t does not divide n.
std::optional<std::vector<Monomial>> cycle_konig_sequence(int n, int t);

}  // namespace tcover
