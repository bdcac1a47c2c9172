#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "tcover/connected.hpp"
#include "tcover/error.hpp"
#include "tcover/packing.hpp"

using namespace tcover;

namespace {

Monomial m(std::string_view s) { return Monomial::parse(s); }

MonomialIdeal ideal(int n, std::initializer_list<const char*> gens) {
    std::vector<Monomial> v;
    for (const char* g : gens) v.push_back(m(g));
    return MonomialIdeal::from(n, v);
}

MonomialIdeal J(const Graph& g, int t) { return cover_ideal(TConnInstance(g, t)); }

std::vector<oracle::Mask> masks(const MonomialIdeal& I) {
    std::vector<oracle::Mask> out;
    for (auto s : I.supports()) out.push_back(static_cast<oracle::Mask>(s.bits()));
    return out;
}

MonomialIdeal random_square_free(std::mt19937& rng, int n) {
    std::vector<VertexSet> sets;
    int k = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) {
        std::uint64_t bits = rng() & ((std::uint64_t{1} << n) - 1);
        sets.emplace_back(bits == 0 ? 1 : bits);
    }
    return MonomialIdeal::square_free(n, sets);
}

}  // namespace

TEST(Minor, RejectsOverlap) {
    EXPECT_THROW(Minor(VertexSet::of({1, 2}), VertexSet::of({2})), DomainError);
    EXPECT_TRUE(Minor().empty());
}

TEST(Minor, CounterDigits) {
    EXPECT_TRUE(minor_from_counter(0, 4).empty());
    Minor mm = minor_from_counter(1 + 2 * 3 + 0 * 9 + 1 * 27, 4);  // x1 zero, x2 one, x4 zero
    EXPECT_EQ(mm.zeros().labels(), (std::vector<int>{1, 4}));
    EXPECT_EQ(mm.ones().labels(), (std::vector<int>{2}));
}

TEST(Restrict, CycleReductions) {
    Restriction r = restrict(J(cycle(8), 4), Minor(VertexSet::of({4, 8}), {}));
    EXPECT_EQ(r.surviving, (std::vector<int>{0, 1, 2, 4, 5, 6}));
    EXPECT_TRUE(dihedral_match(r.ideal, J(cycle(6), 3)).has_value());

    Restriction r2 = restrict(J(cycle(12), 3), Minor(VertexSet::of({1, 5, 9}), {}));
    EXPECT_TRUE(dihedral_match(r2.ideal, J(cycle(9), 2)).has_value());
}

TEST(Restrict, SettingAGeneratorToOneGivesTheUnitIdeal) {
    MonomialIdeal j = J(cycle(7), 3);
    for (const auto& g : j.gens()) EXPECT_TRUE(restrict(j, Minor({}, g.support())).ideal.is_unit());
    EXPECT_TRUE(restrict(j, Minor(VertexSet::range(7), {})).ideal.is_zero());
}

TEST(Restrict, LocalizationCommutesWithPowers) {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        MonomialIdeal I = random_square_free(rng, n);
        VertexSet ones(rng() & ((std::uint64_t{1} << n) - 1));
        int s = 1 + static_cast<int>(rng() % 3);
        Minor mm({}, ones);
        EXPECT_EQ(restrict_in_place(power(I, s), mm), power(restrict_in_place(I, mm), s));
    }
}

TEST(Restrict, ZerosMatchOracle) {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        MonomialIdeal I = random_square_free(rng, n);
        std::uint64_t z = rng() & ((std::uint64_t{1} << n) - 1);
        std::uint64_t o = rng() & ((std::uint64_t{1} << n) - 1) & ~z;
        MonomialIdeal got = restrict_in_place(I, Minor(VertexSet(z), VertexSet(o)));
        auto want = oracle::restrict_sets(masks(I), static_cast<oracle::Mask>(z), static_cast<oracle::Mask>(o));
        auto have = masks(got);
        std::sort(have.begin(), have.end());
        EXPECT_EQ(have, want);
    }
}

TEST(Konig, Examples) {
    KonigResult c6 = is_konig(J(cycle(6), 3));
    EXPECT_TRUE(c6.konig);
    EXPECT_EQ(c6.height, 3);
    EXPECT_EQ(c6.certificate, (std::vector<Monomial>{m("x1*x4"), m("x2*x5"), m("x3*x6")}));
    EXPECT_FALSE(is_konig(J(cycle(7), 3)).konig);
    KonigResult claw = is_konig(ideal(4, {"x1", "x2*x3", "x2*x4", "x3*x4"}));
    EXPECT_FALSE(claw.konig);
    EXPECT_EQ(claw.height, 3);
    EXPECT_EQ(claw.max_disjoint, 2);
    EXPECT_TRUE(is_konig(MonomialIdeal(3)).konig);
    EXPECT_TRUE(is_konig(MonomialIdeal::unit(3)).konig);
}

TEST(Konig, CyclesAreKonigExactlyWhenTDividesN) {
    for (int n = 3; n <= 12; ++n)
        for (int t = 3; t <= n; ++t) EXPECT_EQ(is_konig(J(cycle(n), t)).konig, n % t == 0) << n << "," << t;
}

TEST(Konig, MatchesOracle) {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        MonomialIdeal I = random_square_free(rng, n);
        EXPECT_EQ(is_konig(I).konig, oracle::konig(n, masks(I)));
    }
}

TEST(Packing, Examples) {
    EXPECT_TRUE(is_packed(J(cycle(6), 3)).packed);
    EXPECT_EQ(is_packed(J(cycle(6), 3)).minors_checked, 729U);
    EXPECT_FALSE(is_packed(J(cycle(7), 2)).packed);
    PackingReport claw = is_packed(J(star(3), 3));
    EXPECT_FALSE(claw.packed);
    ASSERT_TRUE(claw.witness.has_value());
    EXPECT_TRUE(claw.witness->minor.empty());
    EXPECT_EQ(claw.minors_checked, 1U);
}

TEST(Packing, NotKonigImpliesNotPacked) {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        MonomialIdeal I = random_square_free(rng, 3 + static_cast<int>(rng() % 5));
        if (!is_konig(I).konig) EXPECT_FALSE(is_packed(I).packed);
    }
}

TEST(Packing, MatchesOracleAndWitnessFails) {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        MonomialIdeal I = random_square_free(rng, n);
        PackingReport r = is_packed(I);
        EXPECT_EQ(r.packed, oracle::packed(n, masks(I)));
        if (r.witness) {
            auto sets = oracle::restrict_sets(masks(I), static_cast<oracle::Mask>(r.witness->minor.zeros().bits()),
                                              static_cast<oracle::Mask>(r.witness->minor.ones().bits()));
            EXPECT_FALSE(oracle::konig(n, sets));
        }
    }
}

TEST(Packing, ThreadCountDoesNotChangeTheResult) {
    for (auto [g, t] : {std::pair{cycle(12), 3}, std::pair{cycle(8), 4}, std::pair{complete(5), 3}}) {
        PackingReport a = is_packed(J(g, t), 1), b = is_packed(J(g, t), 3);
        EXPECT_EQ(a.packed, b.packed);
        EXPECT_EQ(a.minors_checked, b.minors_checked);
        if (a.witness) EXPECT_EQ(a.witness->minor, b.witness->minor);
    }
}

TEST(NonCutWitness, Examples) {
    auto w = non_cut_witness(star(3), 3);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->subgraph, VertexSet::range(4));
    EXPECT_EQ(w->non_cut, 3);
    EXPECT_FALSE(non_cut_witness(path(9), 3).has_value());
    auto c = non_cut_witness(cycle(6), 5);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->subgraph, VertexSet::range(6));
    EXPECT_EQ(c->non_cut, 6);
}

TEST(CycleNonpacking, ZeroSetsAndTargets) {
    auto a = cycle_nonpacking_minor(12, 3);
    ASSERT_TRUE(a.minor.has_value());
    EXPECT_EQ(a.minor->zeros().labels(), (std::vector<int>{1, 5, 9}));
    EXPECT_EQ(std::pair(a.target_n, a.target_t), std::pair(9, 2));

    auto b = cycle_nonpacking_minor(15, 3);
    ASSERT_TRUE(b.minor.has_value());
    EXPECT_EQ(b.minor->zeros().labels(), (std::vector<int>{1, 5, 9, 13}));
    EXPECT_EQ(std::pair(b.target_n, b.target_t), std::pair(11, 2));

    auto c = cycle_nonpacking_minor(12, 4);
    ASSERT_TRUE(c.minor.has_value());
    EXPECT_EQ(c.minor->zeros().labels(), (std::vector<int>{1, 4, 6, 8, 11}));
    EXPECT_EQ(std::pair(c.target_n, c.target_t), std::pair(7, 2));

    auto d = cycle_nonpacking_minor(7, 3);
    EXPECT_EQ(d.reason, NonpackingReason::NotKonig);
    EXPECT_FALSE(d.minor.has_value());

    EXPECT_THROW(cycle_nonpacking_minor(9, 3), DomainError);
    EXPECT_THROW(cycle_nonpacking_minor(8, 4), DomainError);
    EXPECT_THROW(cycle_nonpacking_minor(5, 5), DomainError);
}

TEST(CycleNonpacking, EveryConstructionVerifies) {
    for (int n = 4; n <= 24; ++n) {
        for (int t = 3; t < n && t <= 8; ++t) {
            if ((t == 3 && (n == 6 || n == 9)) || (t == 4 && n == 8)) continue;
            if (n % t != 0) continue;  // the non-König case needs no minor
            auto r = cycle_nonpacking_minor(n, t);
            ASSERT_TRUE(r.minor.has_value()) << n << "," << t;
            Restriction res = restrict(J(cycle(n), t), *r.minor);
            MonomialIdeal target = J(cycle(r.target_n), r.target_t);
            // Apply the recorded relabeling and compare directly.
            std::vector<Monomial> mapped;
            for (const auto& g : res.ideal.gens()) {
                VertexSet s;
                for (int i : g.support().indices()) s.insert(r.relabeling[i]);
                mapped.push_back(Monomial::square_free(s));
            }
            EXPECT_EQ(MonomialIdeal::from(r.target_n, mapped), target) << n << "," << t;
        }
    }
}

TEST(CycleNonpacking, ChainsEndAtAFailure) {
    for (auto [n, t] : {std::pair{24, 4}, std::pair{30, 6}, std::pair{12, 6}, std::pair{10, 5}}) {
        auto chain = cycle_nonpacking_chain(n, t);
        ASSERT_FALSE(chain.empty());
        const auto& last = chain.back();
        if (last.reason == NonpackingReason::OddCycleCover) {
            EXPECT_EQ(last.target_t, 2);
            EXPECT_EQ(last.target_n % 2, 1);
        } else {
            EXPECT_EQ(last.reason, NonpackingReason::NotKonig);
        }
    }
}
