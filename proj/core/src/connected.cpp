#include "tcover/connected.hpp"

#include "tcover/duality.hpp"
#include "tcover/error.hpp"

namespace tcover {

TConnInstance::TConnInstance(Graph graph, int t) : graph_(std::move(graph)), t_(t) {
    const int n = graph_.order();
    if (n > kMaxVars) throw DomainError("graph has more vertices than the variable universe allows");
    if (t < 2 || t > n) throw DomainError("t must satisfy 2 <= t <= n");
    if (!graph_.connected()) throw DomainError("graph must be connected");
}

MonomialIdeal t_connected_ideal(const TConnInstance& inst) {
    return MonomialIdeal::square_free(inst.n(), connected_induced_subsets(inst.graph(), inst.t()));
}

MonomialIdeal cover_ideal(const TConnInstance& inst) { return alexander_dual(t_connected_ideal(inst)); }

namespace {

void require_closed_form_args(int n, int t) {
    if (t < 2) throw DomainError("t must be at least 2");
    if (n < t) throw DomainError("n must be at least t");
    if (n > kMaxVars) throw DomainError("n exceeds the variable universe");
}

Monomial from_indices(const std::vector<int>& labels) {
    Monomial m;
    for (int l : labels) m.set_exponent(l - 1, 1);
    return m;
}

// Index sequences i_1 < ... < i_r (1-based) grown one index at a time. Each
// step obeys the consecutive-gap bound i_{j+1} - i_j <= t and the double-gap
// bound i_{j+2} - i_j >= t + 1; `terminal` recognises a finished cover and
// `accept` applies the end conditions.
template <typename Terminal, typename Accept>
void grow_gap_sequences(int n, int t, int first_max, Terminal terminal, Accept accept, std::vector<Monomial>& out) {
    std::vector<int> seq;
    auto dfs = [&](auto&& self) -> void {
        const int r = static_cast<int>(seq.size());
        const int last = seq.back();
        if (terminal(seq)) {
            if (accept(seq)) out.push_back(from_indices(seq));
            return;
        }
        for (int next = last + 1; next <= std::min(last + t, n); ++next) {
            if (r >= 2 && next - seq[r - 2] < t + 1) continue;
            seq.push_back(next);
            self(self);
            seq.pop_back();
        }
    };
    for (int first = 1; first <= first_max; ++first) {
        seq.assign(1, first);
        dfs(dfs);
    }
}

}  // namespace

MonomialIdeal path_cover_gens(int n, int t) {
    require_closed_form_args(n, t);
    std::vector<Monomial> gens;
    grow_gap_sequences(
        n, t, t,
        [&](const std::vector<int>& s) { return s.back() >= n - t + 1; },
        [&](const std::vector<int>& s) {
            const auto r = s.size();
            if (r >= 2 && s[1] < t + 1) return false;
            if (r >= 2 && s[r - 2] > n - t) return false;
            return true;
        },
        gens);
    for (const auto& g : gens)
        if (g.degree() < n / t)
            throw VerificationError("path cover " + g.to_string() + " has fewer than floor(n/t) vertices");
    return MonomialIdeal::from(n, std::move(gens));
}

MonomialIdeal cycle_cover_gens(int n, int t) {
    require_closed_form_args(n, t);
    if (n < 3) throw DomainError("a cycle needs n >= 3");
    std::vector<Monomial> gens;
    grow_gap_sequences(
        n, t, t,
        [&](const std::vector<int>& s) { return n + s.front() - s.back() <= t; },
        [&](const std::vector<int>& s) {
            const auto r = s.size();
            if (r >= 2 && n + s.front() - s[r - 2] < t + 1) return false;
            if (r >= 2 && n + s[1] - s.back() < t + 1) return false;
            return true;
        },
        gens);
    const int lower = (n + t - 1) / t;
    for (const auto& g : gens)
        if (g.degree() < lower)
            throw VerificationError("cycle cover " + g.to_string() + " has fewer than ceil(n/t) vertices");
    return MonomialIdeal::from(n, std::move(gens));
}

std::optional<std::vector<Monomial>> cycle_konig_sequence(int n, int t) {
    require_closed_form_args(n, t);
    if (n % t != 0) return std::nullopt;
    std::vector<Monomial> seq;
    for (int i = 0; i < t; ++i) {
        Monomial f;
        for (int v = i; v < n; v += t) f.set_exponent(v, 1);
        seq.push_back(f);
    }
    return seq;
}

}  // namespace tcover
