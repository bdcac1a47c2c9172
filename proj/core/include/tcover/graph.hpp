#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tcover {

/// Maximum number of vertices a Graph may have.
inline constexpr int kMaxVertices = 64;

/// A set of vertices stored as a bitmask. Bit i stands for vertex label i + 1.
class VertexSet {
  public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    /// Builds a set from 1-based vertex labels.
    static VertexSet of(std::initializer_list<int> labels);
    static VertexSet of(const std::vector<int>& labels);
    /// {1, ..., n}.
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
    /// `index` is 0-based.
    [[nodiscard]] constexpr bool contains(int index) const { return (bits_ >> index) & 1U; }
    [[nodiscard]] constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr void insert(int index) { bits_ |= std::uint64_t{1} << index; }
    constexpr void erase(int index) { bits_ &= ~(std::uint64_t{1} << index); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

    /// 0-based member indices, ascending.
    [[nodiscard]] std::vector<int> indices() const;
    /// 1-based labels, ascending.
    [[nodiscard]] std::vector<int> labels() const;
    /// e.g. "{1,3,4}".
    [[nodiscard]] std::string to_string() const;

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    /// Lexicographic order on the sorted member lists.
    friend bool lex_less(VertexSet a, VertexSet b);

  private:
    std::uint64_t bits_ = 0;
};

bool lex_less(VertexSet a, VertexSet b);

/// Simple undirected graph on vertices labeled 1..n. Immutable after construction.
class Graph {
  public:
    Graph() = default;
    /// `edges` holds 1-based label pairs. Throws DomainError on loops, bad labels or n > kMaxVertices.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] std::size_t edge_count() const;
    /// 0-based indices.
    [[nodiscard]] bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    [[nodiscard]] VertexSet neighbours(int v) const { return VertexSet(adj_[v]); }
    [[nodiscard]] int degree(int v) const { return std::popcount(adj_[v]); }
    [[nodiscard]] VertexSet vertices() const { return VertexSet::range(n_); }
    /// Edges as 1-based pairs (u < v), ordered by (u, v).
    [[nodiscard]] std::vector<std::pair<int, int>> edges() const;

    /// The subgraph induced on `s`, relabeled to 1..|s| preserving order.
    [[nodiscard]] Graph induced(VertexSet s) const;
    /// Whether the subgraph induced on `s` is connected. The empty set is not connected.
    [[nodiscard]] bool connected_on(VertexSet s) const;
    [[nodiscard]] bool connected() const { return connected_on(vertices()); }
    /// Vertices reachable from `start` inside `within`.
    [[nodiscard]] VertexSet component_of(int start, VertexSet within) const;

    /// The graph with vertex i relabeled to perm[i] (0-based permutation).
    [[nodiscard]] Graph relabeled(const std::vector<int>& perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

Graph path(int n);
Graph cycle(int n);
/// K_{1,leaves}: vertex 1 is the centre.
Graph star(int leaves);
Graph complete(int n);

/// Decodes a graph6 string. An optional ">>graph6<<" header and trailing newline are accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Every t-element vertex set inducing a connected subgraph, in lexicographic order.
std::vector<VertexSet> connected_induced_subsets(const Graph& g, int t);

/// Vertices whose deletion leaves the graph connected. Throws DomainError if g is disconnected.
VertexSet non_cut_vertices(const Graph& g);

bool is_bipartite(const Graph& g);

enum class ShapeKind { Path, Cycle, Other };

struct Shape {
    ShapeKind kind = ShapeKind::Other;
    int n = 0;

    friend bool operator==(const Shape&, const Shape&) = default;
};

/// Detects paths and cycles up to relabeling. Throws DomainError if g is disconnected.
Shape classify_shape(const Graph& g);
std::string to_string(const Shape& s);

/// Every connected graph on exactly n labeled vertices, ordered by edge bitmask
/// (bit k of the mask is the k-th pair in graph6 upper-triangle order).
std::vector<Graph> connected_labeled_graphs(int n);

/// A permutation p (0-based, p[old] = new) under which g.relabeled(p) is the
/// canonical representative of its isomorphism class; n must be at most 8.
std::vector<int> canonical_relabeling(const Graph& g);

/// graph6 string of the canonical representative.
std::string canonical_form(const Graph& g);

}  // namespace tcover
