#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tcover/connected.hpp"
#include "tcover/error.hpp"

using namespace tcover;

namespace {

Monomial m(std::string_view s) { return Monomial::parse(s); }

MonomialIdeal ideal(int n, std::initializer_list<const char*> gens) {
    std::vector<Monomial> v;
    for (const char* g : gens) v.push_back(m(g));
    return MonomialIdeal::from(n, v);
}

MonomialIdeal oracle_cover(const Graph& g, int t) {
    auto og = oracle::make_graph(g.order(), g.edges());
    std::vector<VertexSet> sets;
    for (auto s : oracle::minimal_t_covers(og, t)) sets.emplace_back(s);
    return MonomialIdeal::square_free(g.order(), sets);
}

}  // namespace

TEST(Instance, Preconditions) {
    EXPECT_THROW(TConnInstance(path(4), 1), DomainError);
    EXPECT_THROW(TConnInstance(path(4), 5), DomainError);
    EXPECT_THROW(TConnInstance(Graph(4, {{1, 2}, {3, 4}}), 2), DomainError);
    EXPECT_THROW(TConnInstance(path(33), 3), DomainError);
}

TEST(TConnectedIdeal, Examples) {
    Graph g = cycle(5);
    MonomialIdeal i2 = t_connected_ideal(TConnInstance(g, 2));
    EXPECT_EQ(i2, ideal(5, {"x1*x2", "x1*x5", "x2*x3", "x3*x4", "x4*x5"}));
    EXPECT_EQ(t_connected_ideal(TConnInstance(star(3), 4)), ideal(4, {"x1*x2*x3*x4"}));
    EXPECT_EQ(t_connected_ideal(TConnInstance(path(4), 3)), ideal(4, {"x1*x2*x3", "x2*x3*x4"}));
}

TEST(CoverIdeal, Examples) {
    EXPECT_EQ(cover_ideal(TConnInstance(star(3), 3)), ideal(4, {"x1", "x2*x3", "x2*x4", "x3*x4"}));
    for (const Graph& g : {path(5), cycle(5), star(4), complete(5)})
        EXPECT_EQ(cover_ideal(TConnInstance(g, 5)), MonomialIdeal::variables(5, VertexSet::range(5)));
    MonomialIdeal p5 = cover_ideal(TConnInstance(path(5), 3));
    EXPECT_TRUE(std::find(p5.gens().begin(), p5.gens().end(), m("x3")) != p5.gens().end());
}

TEST(CoverIdeal, MatchesOracleOnAllSmallGraphs) {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : connected_labeled_graphs(n))
            for (int t = 2; t <= n; ++t) EXPECT_EQ(cover_ideal(TConnInstance(g, t)), oracle_cover(g, t)) << to_graph6(g);
}

TEST(PathClosedForm, PublishedLists) {
    EXPECT_EQ(path_cover_gens(7, 4), ideal(7, {"x1*x5", "x2*x5", "x2*x6", "x3*x5", "x3*x6", "x3*x7", "x4"}));
    MonomialIdeal p83 = path_cover_gens(8, 3);
    EXPECT_EQ(p83.size(), 12U);
    EXPECT_EQ(p83, ideal(8, {"x1*x4*x5*x8", "x1*x4*x6", "x1*x4*x7", "x2*x4*x6", "x2*x4*x7", "x2*x5*x6",
                             "x2*x5*x7", "x2*x5*x8", "x3*x4*x7", "x3*x5*x7", "x3*x5*x8", "x3*x6"}));
    for (int t = 2; t <= 9; ++t) EXPECT_EQ(path_cover_gens(t, t), MonomialIdeal::variables(t, VertexSet::range(t)));
}

TEST(CycleClosedForm, Examples) {
    EXPECT_EQ(cycle_cover_gens(6, 3), ideal(6, {"x1*x4", "x2*x5", "x3*x6", "x1*x3*x5", "x2*x4*x6"}));
    for (int t = 3; t <= 9; ++t) EXPECT_EQ(cycle_cover_gens(t, t), MonomialIdeal::variables(t, VertexSet::range(t)));
    MonomialIdeal c73 = cycle_cover_gens(7, 3);
    for (const char* g : {"x1*x4*x7", "x2*x5*x6"})
        EXPECT_TRUE(std::find(c73.gens().begin(), c73.gens().end(), m(g)) != c73.gens().end()) << g;
    EXPECT_THROW(cycle_cover_gens(2, 2), DomainError);
    EXPECT_THROW(path_cover_gens(3, 4), DomainError);
}

TEST(ClosedForms, MatchOracleUpToTwelve) {
    for (int n = 2; n <= 12; ++n) {
        for (int t = 2; t <= n; ++t) {
            EXPECT_EQ(path_cover_gens(n, t), oracle_cover(path(n), t)) << "path " << n << "," << t;
            if (n >= 3) EXPECT_EQ(cycle_cover_gens(n, t), oracle_cover(cycle(n), t)) << "cycle " << n << "," << t;
        }
    }
}

TEST(ClosedForms, DegreeBounds) {
    for (int n = 2; n <= 14; ++n) {
        for (int t = 2; t <= n; ++t) {
            EXPECT_EQ(path_cover_gens(n, t).min_degree(), n / t);
            if (n >= 3) EXPECT_EQ(cycle_cover_gens(n, t).min_degree(), (n + t - 1) / t);
        }
    }
}

TEST(KonigSequence, Examples) {
    auto s = cycle_konig_sequence(6, 3);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(*s, (std::vector<Monomial>{m("x1*x4"), m("x2*x5"), m("x3*x6")}));
    EXPECT_FALSE(cycle_konig_sequence(7, 3).has_value());
    EXPECT_EQ(*cycle_konig_sequence(4, 4), (std::vector<Monomial>{m("x1"), m("x2"), m("x3"), m("x4")}));
}
