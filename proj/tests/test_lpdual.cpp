#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <optional>
#include <random>

#include "oracle.hpp"
#include "tcover/connected.hpp"
#include "tcover/error.hpp"
#include "tcover/lpdual.hpp"
#include "tcover/packing.hpp"

using namespace tcover;

namespace {

BinaryMatrix covers(const Graph& g, int t) { return minimal_solutions(incidence_matrix(TConnInstance(g, t))); }

std::vector<oracle::Mask> masks(const BinaryMatrix& b) {
    std::vector<oracle::Mask> out;
    for (auto c : b.columns()) out.push_back(static_cast<oracle::Mask>(c.bits()));
    return out;
}

}  // namespace

TEST(Incidence, Formulas) {
    BinaryMatrix p = path_incidence_formula(4, 3);
    EXPECT_EQ(p.row_strings(), (std::vector<std::string>{"10", "11", "11", "01"}));
    BinaryMatrix c = cycle_incidence_formula(3, 3);
    EXPECT_EQ(c.row_strings(), (std::vector<std::string>{"111", "111", "111"}));
    BinaryMatrix c8 = cycle_incidence_formula(8, 4);
    EXPECT_EQ(c8.cols(), 8);
    for (auto col : c8.columns()) EXPECT_EQ(col.size(), 4);
}

TEST(Incidence, FormulasMatchConnectedSets) {
    for (int n = 2; n <= 12; ++n) {
        for (int t = 2; t <= n; ++t) {
            EXPECT_TRUE(same_column_set(incidence_matrix(TConnInstance(path(n), t)), path_incidence_formula(n, t)));
            if (n >= 3)
                EXPECT_TRUE(
                    same_column_set(incidence_matrix(TConnInstance(cycle(n), t)), cycle_incidence_formula(n, t)));
        }
    }
    // Repeated columns of the circulant collapse to a single generator.
    EXPECT_EQ(incidence_matrix(TConnInstance(cycle(3), 3)).cols(), 1);
}

TEST(MinimalSolutions, Examples) {
    BinaryMatrix b = minimal_solutions(incidence_matrix(TConnInstance(path(3), 3)));
    EXPECT_EQ(b.row_strings(), (std::vector<std::string>{"100", "010", "001"}));
    BinaryMatrix c6 = covers(cycle(6), 3);
    EXPECT_EQ(c6.columns(), cycle_cover_gens(6, 3).supports());
    BinaryMatrix p7 = covers(path(7), 4);
    EXPECT_EQ(p7.columns(), path_cover_gens(7, 4).supports());
}

TEST(MinimalSolutions, MatchCoverIdealUpToTen) {
    for (int n = 2; n <= 10; ++n)
        for (int t = 2; t <= n; ++t) {
            EXPECT_EQ(covers(path(n), t).columns(), cover_ideal(TConnInstance(path(n), t)).supports());
            if (n >= 3) EXPECT_EQ(covers(cycle(n), t).columns(), cover_ideal(TConnInstance(cycle(n), t)).supports());
        }
}

TEST(Programs, Examples) {
    BinaryMatrix id(3, {VertexSet::of({1}), VertexSet::of({2}), VertexSet::of({3})});
    EXPECT_EQ(tau(id, {2, 3, 5}), 10);
    EXPECT_EQ(nu(id, {2, 3, 5}), 10);
    EXPECT_EQ(tau(covers(cycle(6), 3), {1, 1, 1, 1, 1, 1}), 3);
    EXPECT_EQ(nu(covers(cycle(6), 3), {1, 1, 1, 1, 1, 1}), 3);
    WeightVector ones7(7, 1);
    EXPECT_EQ(tau(covers(cycle(7), 3), ones7), 3);
    EXPECT_EQ(nu(covers(cycle(7), 3), ones7), 2);
}

TEST(Programs, MatchOracleAndWeakDuality) {
    std::mt19937 rng(79);
    const std::vector<std::pair<Graph, int>> cases = {{path(6), 3}, {cycle(7), 3}, {cycle(6), 2}, {star(4), 3},
                                                      {complete(5), 3}, {cycle(8), 4}};
    for (const auto& [g, t] : cases) {
        BinaryMatrix b = covers(g, t);
        for (int trial = 0; trial < 40; ++trial) {
            WeightVector a(static_cast<std::size_t>(g.order()));
            for (int& x : a) x = static_cast<int>(rng() % 4);
            long long ta = tau(b, a), nv = nu(b, a);
            EXPECT_EQ(ta, oracle::tau(g.order(), masks(b), a));
            EXPECT_EQ(ta, tau_enumerate(b, a));
            EXPECT_EQ(nv, oracle::nu(g.order(), masks(b), a));
            EXPECT_LE(nv, ta);
        }
    }
}

TEST(Programs, UnitWeightsMatchTheDualIdeal) {
    for (const auto& [g, t] : std::vector<std::pair<Graph, int>>{{cycle(7), 3}, {path(8), 3}, {star(3), 3}, {cycle(9), 4}}) {
        BinaryMatrix b = covers(g, t);
        WeightVector ones(static_cast<std::size_t>(g.order()), 1);
        EXPECT_EQ(tau(b, ones), t);
        EXPECT_EQ(nu(b, ones), is_konig(cover_ideal(TConnInstance(g, t))).max_disjoint);
    }
}

TEST(GapSearch, Examples) {
    GapSearchResult c7 = duality_gap_search(TConnInstance(cycle(7), 3), 1);
    ASSERT_TRUE(c7.witness.has_value());
    EXPECT_EQ(*c7.witness, WeightVector(7, 1));
    EXPECT_EQ(c7.tau, 3);
    EXPECT_EQ(c7.nu, 2);
    EXPECT_FALSE(duality_gap_search(TConnInstance(cycle(6), 3), 2).witness.has_value());
    EXPECT_FALSE(duality_gap_search(TConnInstance(path(6), 4), 2).witness.has_value());
    EXPECT_THROW(duality_gap_search(TConnInstance(cycle(20), 3), 3, 1000), ResourceLimitError);
}

TEST(GapSearch, RotationReductionFindsTheSameVerdict) {
    // A relabeled cycle gets no rotation reduction; both scans must agree on existence.
    std::vector<int> perm = {1, 0, 2, 3, 4, 5, 6};
    for (int t : {2, 3}) {
        auto plain = duality_gap_search(TConnInstance(cycle(7).relabeled(perm), t), 1);
        auto reduced = duality_gap_search(TConnInstance(cycle(7), t), 1);
        EXPECT_EQ(plain.witness.has_value(), reduced.witness.has_value());
        EXPECT_EQ(plain.skipped_by_symmetry, 0U);
    }
}

TEST(GapSearch, ReducedScanReturnsTheSequentialFirstWitness) {
    for (auto [n, t, bound] : {std::tuple{7, 3, 1}, std::tuple{7, 2, 1}, std::tuple{8, 3, 1}, std::tuple{6, 4, 2}}) {
        auto cols = masks(covers(cycle(n), t));
        // Plain scan in the same order: decreasing sum, then reverse lexicographic.
        std::vector<std::vector<int>> all;
        std::vector<int> a(static_cast<std::size_t>(n), 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                all.push_back(a);
                return;
            }
            for (int v = 0; v <= bound; ++v) {
                a[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
        auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
        std::stable_sort(all.begin(), all.end(), [&](const auto& x, const auto& y) {
            return sum(x) != sum(y) ? sum(x) > sum(y) : x > y;
        });
        std::optional<std::vector<int>> want;
        for (const auto& v : all)
            if (oracle::tau(n, cols, v) != oracle::nu(n, cols, v)) {
                want = v;
                break;
            }
        GapSearchResult got = duality_gap_search(TConnInstance(cycle(n), t), bound);
        ASSERT_EQ(got.witness.has_value(), want.has_value()) << n << "," << t;
        if (want) EXPECT_EQ(*got.witness, *want) << n << "," << t;
    }
}
