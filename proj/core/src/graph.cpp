#include "tcover/graph.hpp"

#include <algorithm>
#include <numeric>

#include "tcover/error.hpp"

namespace tcover {

VertexSet VertexSet::of(std::initializer_list<int> labels) {
    return of(std::vector<int>(labels));
}

VertexSet VertexSet::of(const std::vector<int>& labels) {
    VertexSet s;
    for (int l : labels) {
        if (l < 1 || l > kMaxVertices) throw DomainError("vertex label out of range: " + std::to_string(l));
        s.insert(l - 1);
    }
    return s;
}

std::vector<int> VertexSet::indices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

std::vector<int> VertexSet::labels() const {
    auto out = indices();
    for (int& i : out) ++i;
    return out;
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int l : labels()) {
        if (!first) s += ',';
        s += std::to_string(l);
        first = false;
    }
    return s + "}";
}

bool lex_less(VertexSet a, VertexSet b) {
    // Compare sorted member lists: the first differing member decides, and a
    // proper prefix sorts first.
    std::uint64_t x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
        int i = std::countr_zero(x), j = std::countr_zero(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) throw DomainError("graph order out of range: " + std::to_string(n));
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || u > n || v > n) throw DomainError("edge endpoint out of range");
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        adj_[u - 1] |= std::uint64_t{1} << (v - 1);
        adj_[v - 1] |= std::uint64_t{1} << (u - 1);
    }
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto a : adj_) twice += std::popcount(a);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u + 1, v + 1);
    return out;
}

Graph Graph::induced(VertexSet s) const {
    auto idx = s.indices();
    std::vector<std::pair<int, int>> es;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (adjacent(idx[a], idx[b])) es.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    return Graph(static_cast<int>(idx.size()), es);
}

VertexSet Graph::component_of(int start, VertexSet within) const {
    std::uint64_t mask = within.bits();
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
        next &= mask & ~seen;
        seen |= next;
        frontier = next;
    }
    return VertexSet(seen);
}

bool Graph::connected_on(VertexSet s) const {
    if (s.empty()) return false;
    return component_of(std::countr_zero(s.bits()), s) == s;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges()) es.emplace_back(perm[u - 1] + 1, perm[v - 1] + 1);
    return Graph(n_, es);
}

Graph path(int n) {
    if (n < 1) throw DomainError("path needs at least one vertex");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph cycle(int n) {
    if (n < 3) throw DomainError("cycle needs at least three vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(1, n);
    return Graph(n, es);
}

Graph star(int leaves) {
    if (leaves < 1) throw DomainError("star needs at least one leaf");
    std::vector<std::pair<int, int>> es;
    for (int i = 2; i <= leaves + 1; ++i) es.emplace_back(1, i);
    return Graph(leaves + 1, es);
}

Graph complete(int n) {
    if (n < 1) throw DomainError("complete graph needs at least one vertex");
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
    std::size_t end = text.size();
    while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;
    if (pos >= end) throw ParseError("empty graph6 string", pos);

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= end) throw ParseError("truncated graph6 string", i);
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", i);
        return c - 63;
    };

    long long n = 0;
    if (text[pos] != '~') {
        n = byte_at(pos);
        pos += 1;
    } else if (pos + 1 < end && text[pos + 1] != '~') {
        for (int k = 1; k <= 3; ++k) n = (n << 6) | byte_at(pos + k);
        pos += 4;
    } else {
        for (int k = 2; k <= 7; ++k) n = (n << 6) | byte_at(pos + k);
        pos += 8;
    }
    if (n > kMaxVertices) throw ParseError("graph has more than " + std::to_string(kMaxVertices) + " vertices", pos);

    const long long pairs = n * (n - 1) / 2;
    const long long need = (pairs + 5) / 6;
    if (static_cast<long long>(end - pos) != need)
        throw ParseError("expected " + std::to_string(need) + " adjacency bytes, found " + std::to_string(end - pos),
                         std::min(end, pos + static_cast<std::size_t>(need)));

    std::vector<std::pair<int, int>> es;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            std::size_t at = pos + static_cast<std::size_t>(k / 6);
            int bit = 5 - static_cast<int>(k % 6);
            if ((byte_at(at) >> bit) & 1) es.emplace_back(i + 1, j + 1);
        }
    }
    // Padding bits must be zero.
    for (; k < need * 6; ++k) {
        std::size_t at = pos + static_cast<std::size_t>(k / 6);
        if ((byte_at(at) >> (5 - k % 6)) & 1) throw ParseError("nonzero padding bit", at);
    }
    return Graph(static_cast<int>(n), es);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += '~';
        for (int k = 2; k >= 0; --k) out += static_cast<char>(((n >> (6 * k)) & 63) + 63);
    }
    int acc = 0, used = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out += static_cast<char>(acc + 63);
                acc = used = 0;
            }
        }
    }
    if (used > 0) out += static_cast<char>((acc << (6 - used)) + 63);
    return out;
}

std::vector<VertexSet> connected_induced_subsets(const Graph& g, int t) {
    const int n = g.order();
    if (t < 1 || t > n) throw DomainError("t must lie in [1, n]");
    std::vector<VertexSet> out;
    // Lexicographic extension of a chosen prefix. A prefix is abandoned once its
    // members fall into different components of G[chosen + still-available].
    auto extend = [&](auto&& self, VertexSet chosen, int next, int remaining) -> void {
        if (remaining == 0) {
            if (g.connected_on(chosen)) out.push_back(chosen);
            return;
        }
        for (int v = next; v <= n - remaining; ++v) {
            VertexSet with = chosen;
            with.insert(v);
            VertexSet avail = with | (VertexSet::range(n) - VertexSet::range(v + 1));
            if (!with.subset_of(g.component_of(v, avail))) continue;
            self(self, with, v + 1, remaining - 1);
        }
    };
    extend(extend, VertexSet{}, 0, t);
    return out;
}

VertexSet non_cut_vertices(const Graph& g) {
    if (!g.connected()) throw DomainError("non_cut_vertices requires a connected graph");
    const VertexSet all = g.vertices();
    if (g.order() == 1) return all;
    VertexSet out;
    for (int v = 0; v < g.order(); ++v) {
        VertexSet rest = all;
        rest.erase(v);
        if (g.connected_on(rest)) out.insert(v);
    }
    return out;
}

bool is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        queue.assign(1, s);
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int v : g.neighbours(u).indices()) {
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    queue.push_back(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Shape classify_shape(const Graph& g) {
    if (!g.connected()) throw DomainError("classify_shape requires a connected graph");
    const int n = g.order();
    int max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    const auto m = g.edge_count();
    if (max_deg <= 2 && m == static_cast<std::size_t>(n - 1)) return {ShapeKind::Path, n};
    if (n >= 3 && max_deg == 2 && m == static_cast<std::size_t>(n)) return {ShapeKind::Cycle, n};
    return {ShapeKind::Other, n};
}

std::string to_string(const Shape& s) {
    switch (s.kind) {
        case ShapeKind::Path: return "Path(" + std::to_string(s.n) + ")";
        case ShapeKind::Cycle: return "Cycle(" + std::to_string(s.n) + ")";
        case ShapeKind::Other: break;
    }
    return "Other";
}

std::vector<Graph> connected_labeled_graphs(int n) {
    if (n < 1 || n > 8) throw DomainError("labeled enumeration supports 1 <= n <= 8");
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i + 1, j + 1);
    const std::uint64_t limit = std::uint64_t{1} << slots.size();
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (std::popcount(mask) < n - 1) continue;
        std::vector<std::pair<int, int>> es;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((mask >> k) & 1U) es.push_back(slots[k]);
        Graph g(n, es);
        if (g.connected()) out.push_back(std::move(g));
    }
    return out;
}

std::vector<int> canonical_relabeling(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw DomainError("canonical relabeling supports n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    auto edges = g.edges();
    // Code: bit (pair index) set for each edge, pairs in graph6 order, most
    // significant bit first so numeric order equals graph6 string order.
    const int pairs = n * (n - 1) / 2;
    auto pair_index = [](int i, int j) { return j * (j - 1) / 2 + i; };  // i < j
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> best_perm = perm;
    do {
        std::uint64_t code = 0;
        for (auto [u, v] : edges) {
            int a = perm[u - 1], b = perm[v - 1];
            if (a > b) std::swap(a, b);
            code |= std::uint64_t{1} << (pairs - 1 - pair_index(a, b));
        }
        if (code < best) {
            best = code;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best_perm;
}

std::string canonical_form(const Graph& g) { return to_graph6(g.relabeled(canonical_relabeling(g))); }

}  // namespace tcover
