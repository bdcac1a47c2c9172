#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tcover/algebra.hpp"

namespace tcover {

/// Default cap on intermediate generator counts in symbolic power folds.
inline constexpr std::size_t kDefaultGeneratorCap = 200'000;

/// Minimal transversals of a family of nonempty sets, in lexicographic order.
std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges);

/// The Alexander dual of a square-free, proper, nonzero ideal: generated by the
/// minimal vertex covers of its generator supports.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

/// Supports of the minimal primes. Pairwise incomparable, each nonempty.
struct PrimeList {
    std::vector<VertexSet> primes;
};

PrimeList minimal_primes(const MonomialIdeal& ideal);

/// I^(s) as the intersection of P^s over the minimal primes P, smallest primes
/// first. Throws ResourceLimitError once an intermediate result exceeds `cap`.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int s, std::size_t cap = kDefaultGeneratorCap);
MonomialIdeal symbolic_power(const PrimeList& primes, int nvars, int s, std::size_t cap = kDefaultGeneratorCap);

/// Membership in I^(s) read off the primes: every prime must carry degree >= s.
bool in_symbolic_power(const Monomial& m, const PrimeList& primes, int s);

struct SimisReport {
    int s_max = 0;
    /// Set when some I^(s) != I^s with s <= s_max.
    struct Witness {
        int s;
        Monomial monomial;
    };
    std::optional<Witness> witness;

    [[nodiscard]] bool equal_up_to_bound() const { return !witness.has_value(); }
};

/// Compares I^(s) with I^s for s = 2..s_max. Since I^s is always contained in
/// I^(s), the powers differ exactly when some generator of I^(s) is not in I^s;
/// the first such generator in canonical order is the witness.
SimisReport simis_check(const MonomialIdeal& ideal, int s_max, std::size_t cap = kDefaultGeneratorCap);

}  // namespace tcover
