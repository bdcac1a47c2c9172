#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "tcover/error.hpp"
#include "tcover/graph.hpp"

using namespace tcover;

namespace {

std::vector<std::vector<int>> label_lists(const std::vector<VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    for (auto s : sets) out.push_back(s.labels());
    return out;
}

oracle::SimpleGraph to_oracle(const Graph& g) {
    return oracle::make_graph(g.order(), g.edges());
}

}  // namespace

TEST(GraphConstructors, Path) {
    EXPECT_EQ(path(1).order(), 1);
    EXPECT_EQ(path(1).edge_count(), 0U);
    EXPECT_EQ(path(2).edges(), (std::vector<std::pair<int, int>>{{1, 2}}));
    EXPECT_EQ(path(4).edges(), (std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}}));
    EXPECT_THROW(path(0), DomainError);
}

TEST(GraphConstructors, Cycle) {
    EXPECT_EQ(cycle(3), complete(3));
    EXPECT_EQ(cycle(6).edge_count(), 6U);
    for (int v = 0; v < 6; ++v) EXPECT_EQ(cycle(6).degree(v), 2);
    EXPECT_THROW(cycle(2), DomainError);
}

TEST(GraphConstructors, StarAndComplete) {
    Graph s = star(3);
    EXPECT_EQ(s.order(), 4);
    EXPECT_EQ(s.degree(0), 3);
    EXPECT_EQ(complete(5).edge_count(), 10U);
}

TEST(GraphConstructors, RejectsLoopsAndBadLabels) {
    EXPECT_THROW(Graph(3, {{1, 1}}), DomainError);
    EXPECT_THROW(Graph(3, {{1, 4}}), DomainError);
    EXPECT_THROW(Graph(65, {}), DomainError);
}

TEST(Graph6, DecodesKnownStrings) {
    Graph k4 = parse_graph6("C~");
    EXPECT_EQ(k4, complete(4));
    EXPECT_EQ(k4.edge_count(), 6U);
    Graph e = parse_graph6("A_");
    EXPECT_EQ(e, path(2));
    EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), complete(4));
}

TEST(Graph6, RejectsMalformedInput) {
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6("C"), ParseError);
    EXPECT_THROW(parse_graph6("C~~"), ParseError);
    EXPECT_THROW(parse_graph6("A`"), ParseError);  // padding bit set
    try {
        parse_graph6("C~ ");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 2U);
    }
}

TEST(Graph6, RoundTripsRandomGraphs) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        std::vector<std::pair<int, int>> es;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() % 3 == 0) es.emplace_back(u, v);
        Graph g(n, es);
        EXPECT_EQ(parse_graph6(to_graph6(g)), g);
    }
}

TEST(ConnectedSubsets, SmallExamples) {
    EXPECT_EQ(label_lists(connected_induced_subsets(path(4), 3)),
              (std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 4}}));
    EXPECT_EQ(label_lists(connected_induced_subsets(cycle(4), 3)),
              (std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
    EXPECT_EQ(label_lists(connected_induced_subsets(star(3), 3)),
              (std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}));
}

TEST(ConnectedSubsets, MatchesExhaustiveScan) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        std::vector<std::pair<int, int>> es;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() % 2 == 0) es.emplace_back(u, v);
        Graph g(n, es);
        auto og = to_oracle(g);
        for (int t = 1; t <= n; ++t) {
            std::vector<oracle::Mask> got;
            for (auto s : connected_induced_subsets(g, t)) got.push_back(static_cast<oracle::Mask>(s.bits()));
            auto want = oracle::connected_t_sets(og, t);
            std::sort(got.begin(), got.end());
            EXPECT_EQ(got, want) << to_graph6(g) << " t=" << t;
        }
    }
}

TEST(NonCut, Examples) {
    EXPECT_EQ(non_cut_vertices(path(5)).labels(), (std::vector<int>{1, 5}));
    EXPECT_EQ(non_cut_vertices(cycle(6)), VertexSet::range(6));
    EXPECT_EQ(non_cut_vertices(star(3)).labels(), (std::vector<int>{2, 3, 4}));
    EXPECT_THROW(non_cut_vertices(Graph(3, {{1, 2}})), DomainError);
}

TEST(NonCut, AtLeastTwoAndPathsExactlyTwo) {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : connected_labeled_graphs(n)) {
            int k = non_cut_vertices(g).size();
            EXPECT_GE(k, 2);
            EXPECT_EQ(k == 2, classify_shape(g).kind == ShapeKind::Path) << to_graph6(g);
        }
    }
}

TEST(Bipartite, Examples) {
    EXPECT_TRUE(is_bipartite(cycle(6)));
    EXPECT_FALSE(is_bipartite(cycle(5)));
    EXPECT_TRUE(is_bipartite(path(7)));
    EXPECT_FALSE(is_bipartite(complete(3)));
}

TEST(Shape, DetectsRelabeledPathsAndCycles) {
    std::vector<int> perm = {3, 0, 5, 1, 4, 2};
    EXPECT_EQ(classify_shape(path(6).relabeled(perm)), (Shape{ShapeKind::Path, 6}));
    EXPECT_EQ(classify_shape(cycle(8)), (Shape{ShapeKind::Cycle, 8}));
    EXPECT_EQ(classify_shape(star(3)).kind, ShapeKind::Other);
    EXPECT_EQ(classify_shape(path(1)).kind, ShapeKind::Path);
}

TEST(LabeledEnumeration, CountsMatchKnownSequence) {
    // Connected labeled graphs: 1, 1, 4, 38, 728, 26704.
    const std::vector<std::size_t> expected = {1, 1, 4, 38, 728, 26704};
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(connected_labeled_graphs(n).size(), expected[n - 1]) << n;
}

TEST(LabeledEnumeration, IsomorphismClassesOnFourAndFiveVertices) {
    for (auto [n, classes] : {std::pair{4, 6U}, std::pair{5, 21U}, std::pair{6, 112U}}) {
        std::set<std::string> forms;
        for (const Graph& g : connected_labeled_graphs(n)) forms.insert(canonical_form(g));
        EXPECT_EQ(forms.size(), classes) << n;
    }
}

TEST(Canonical, RelabelingIsInvariant) {
    std::mt19937 rng(3);
    for (const Graph& g : connected_labeled_graphs(5)) {
        std::vector<int> perm = {0, 1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = g.relabeled(perm);
        EXPECT_EQ(canonical_form(g), canonical_form(h));
        EXPECT_EQ(to_graph6(g.relabeled(canonical_relabeling(g))), canonical_form(g));
    }
}
