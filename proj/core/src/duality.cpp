#include "tcover/duality.hpp"

#include <algorithm>
#include <bit>

#include "tcover/error.hpp"

namespace tcover {

namespace {

class TransversalEnumerator {
  public:
    explicit TransversalEnumerator(const std::vector<VertexSet>& edges) {
        for (auto e : edges) edges_.push_back(e.bits());
    }

    std::vector<VertexSet> run() {
        search(0, 0);
        std::sort(found_.begin(), found_.end(), lex_less);
        return std::move(found_);
    }

  private:
    // v in `chosen` keeps a private edge (one meeting `chosen` only at v).
    bool every_choice_has_private_edge(std::uint64_t chosen) const {
        std::uint64_t needs = chosen;
        for (auto e : edges_) {
            std::uint64_t hit = e & chosen;
            if (hit != 0 && (hit & (hit - 1)) == 0) needs &= ~hit;
            if (needs == 0) return true;
        }
        return needs == 0;
    }

    void search(std::uint64_t chosen, std::uint64_t excluded) {
        std::uint64_t pivot = 0;
        int pivot_size = 65;
        for (auto e : edges_) {
            if (e & chosen) continue;
            std::uint64_t avail = e & ~excluded;
            if (avail == 0) return;
            int sz = std::popcount(avail);
            if (sz < pivot_size) {
                pivot = avail;
                pivot_size = sz;
            }
        }
        if (!every_choice_has_private_edge(chosen)) return;
        if (pivot == 0) {
            found_.emplace_back(chosen);
            return;
        }
        std::uint64_t earlier = 0;
        for (std::uint64_t b = pivot; b != 0; b &= b - 1) {
            std::uint64_t v = b & (~b + 1);
            search(chosen | v, excluded | earlier);
            earlier |= v;
        }
    }

    std::vector<std::uint64_t> edges_;
    std::vector<VertexSet> found_;
};

void require_dualizable(const MonomialIdeal& ideal) {
    if (!ideal.is_square_free()) throw DomainError("Alexander duality needs a square-free ideal");
    if (ideal.is_zero()) throw DomainError("Alexander duality needs a nonzero ideal");
    if (ideal.is_unit()) throw DomainError("Alexander duality needs a proper ideal");
}

// All monomials of degree `deg` in the variables of `vars`.
void monomials_of_degree(const std::vector<int>& vars, std::size_t from, int deg, Monomial current,
                         std::vector<Monomial>& out) {
    if (deg == 0) {
        out.push_back(current);
        return;
    }
    if (from == vars.size()) return;
    for (std::size_t k = from; k < vars.size(); ++k) {
        Monomial next = current;
        next.set_exponent(vars[k], next.exponent(vars[k]) + 1);
        monomials_of_degree(vars, k, deg - 1, next, out);
    }
}

}  // namespace

std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges) {
    for (auto e : edges)
        if (e.empty()) throw DomainError("cannot cover an empty edge");
    if (edges.empty()) return {VertexSet{}};
    return TransversalEnumerator(edges).run();
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
    require_dualizable(ideal);
    return MonomialIdeal::square_free(ideal.nvars(), minimal_transversals(ideal.supports()));
}

PrimeList minimal_primes(const MonomialIdeal& ideal) {
    require_dualizable(ideal);
    return PrimeList{minimal_transversals(ideal.supports())};
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int s, std::size_t cap) {
    return symbolic_power(minimal_primes(ideal), ideal.nvars(), s, cap);
}

MonomialIdeal symbolic_power(const PrimeList& primes, int nvars, int s, std::size_t cap) {
    if (s < 1) throw DomainError("symbolic power exponent must be positive");
    std::vector<VertexSet> order = primes.primes;
    std::stable_sort(order.begin(), order.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });

    // Left fold K <- K cap P^s. For g in K with d = deg_P(g) < s, the minimal
    // multiples of g lying in P^s are g*q for q of degree s - d in P's variables,
    // which is what the pairwise lcm of g with P^s's generators minimalizes to.
    std::vector<Monomial> current{Monomial{}};
    std::vector<std::vector<Monomial>> raisers(static_cast<std::size_t>(s) + 1);
    for (VertexSet prime : order) {
        auto vars = prime.indices();
        for (int k = 1; k <= s; ++k) {
            raisers[k].clear();
            monomials_of_degree(vars, 0, k, Monomial{}, raisers[k]);
        }
        std::vector<Monomial> candidates;
        for (const auto& g : current) {
            int d = g.degree_on(prime);
            if (d >= s) {
                candidates.push_back(g);
                continue;
            }
            for (const auto& q : raisers[s - d]) candidates.push_back(g * q);
            if (candidates.size() > 64 * cap)
                throw ResourceLimitError("symbolic power: candidate set exceeded " + std::to_string(64 * cap));
        }
        current = minimalize(std::move(candidates));
        if (current.size() > cap)
            throw ResourceLimitError("symbolic power: intermediate ideal has " + std::to_string(current.size()) +
                                     " generators, cap is " + std::to_string(cap));
    }
    return MonomialIdeal::from(nvars, std::move(current));
}

bool in_symbolic_power(const Monomial& m, const PrimeList& primes, int s) {
    return std::all_of(primes.primes.begin(), primes.primes.end(),
                       [&](VertexSet p) { return m.degree_on(p) >= s; });
}

SimisReport simis_check(const MonomialIdeal& ideal, int s_max, std::size_t cap) {
    if (s_max < 1) throw DomainError("s_max must be positive");
    const PrimeList primes = minimal_primes(ideal);
    SimisReport report;
    report.s_max = s_max;
    PowerMembership ordinary(ideal);
    for (int s = 2; s <= s_max; ++s) {
        const MonomialIdeal symbolic = symbolic_power(primes, ideal.nvars(), s, cap);
        for (const auto& g : symbolic.gens()) {
            if (!ordinary.contains(g, s)) {
                report.witness = SimisReport::Witness{s, g};
                return report;
            }
        }
    }
    return report;
}

}  // namespace tcover
