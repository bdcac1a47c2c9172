#include "tcover/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <unordered_set>
#include <utility>

#include "tcover/error.hpp"

namespace tcover {

namespace {

constexpr std::uint64_t kLowBytes = 0x00FF00FF00FF00FFULL;

int byte_sum(std::uint64_t w) {
    std::uint64_t pairs = (w & kLowBytes) + ((w >> 8) & kLowBytes);  // four 16-bit lanes, each <= 510
    return static_cast<int>((pairs * 0x0001000100010001ULL) >> 48);
}

}  // namespace

Monomial::Monomial(std::span<const int> exponents) {
    if (exponents.size() > static_cast<std::size_t>(kMaxVars))
        throw DomainError("monomial has more than " + std::to_string(kMaxVars) + " variables");
    for (std::size_t i = 0; i < exponents.size(); ++i) set_exponent(static_cast<int>(i), exponents[i]);
}

Monomial Monomial::of_vars(std::initializer_list<int> vars) {
    Monomial m;
    for (int v : vars) m.set_exponent(v, m.exponent(v) + 1);
    return m;
}

Monomial Monomial::square_free(VertexSet support) {
    Monomial m;
    for (int v : support.indices()) m.set_exponent(v, 1);
    return m;
}

void Monomial::set_exponent(int var, int e) {
    if (var < 0 || var >= kMaxVars) throw DomainError("variable index out of range: " + std::to_string(var));
    if (e < 0 || e > kMaxExponent) throw DomainError("exponent out of range: " + std::to_string(e));
    const int shift = (var & 7) * 8;
    auto& w = words_[var >> 3];
    w = (w & ~(std::uint64_t{0xFF} << shift)) | (static_cast<std::uint64_t>(e) << shift);
}

int Monomial::degree() const {
    int d = 0;
    for (auto w : words_) d += byte_sum(w);
    return d;
}

VertexSet Monomial::support() const {
    std::uint64_t bits = 0;
    for (int w = 0; w < kWords; ++w) {
        std::uint64_t x = words_[w];
        // Collapse each nonzero byte to its lowest bit, then gather.
        x |= x >> 4;
        x |= x >> 2;
        x |= x >> 1;
        x &= 0x0101010101010101ULL;
        std::uint64_t gathered = (x * 0x0102040810204080ULL) >> 56;
        bits |= gathered << (8 * w);
    }
    return VertexSet(bits);
}

bool Monomial::is_square_free() const {
    constexpr std::uint64_t kNotLow = 0xFEFEFEFEFEFEFEFEULL;
    for (auto w : words_)
        if (w & kNotLow) return false;
    return true;
}

int Monomial::top_var() const {
    for (int w = kWords - 1; w >= 0; --w)
        if (words_[w] != 0) return w * 8 + (63 - std::countl_zero(words_[w])) / 8;
    return -1;
}

Monomial Monomial::operator*(const Monomial& other) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    Monomial r;
    for (int w = 0; w < kWords; ++w) {
        r.words_[w] = words_[w] + other.words_[w];  // bytes < 128 each, so no carry between lanes
        if (r.words_[w] & kHigh) throw DomainError("exponent overflow in monomial product");
    }
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r;
    for (int w = 0; w < kWords; ++w) r.words_[w] = words_[w] - other.words_[w];
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    Monomial r;
    for (int w = 0; w < kWords; ++w) {
        std::uint64_t a = words_[w], b = other.words_[w];
        // High bit of each lane is set where a >= b.
        std::uint64_t ge = ((a | kHigh) - b) & kHigh;
        std::uint64_t mask = (ge >> 7) * 0xFF;
        r.words_[w] = (a & mask) | (b & ~mask);
    }
    return r;
}

int Monomial::degree_on(VertexSet vars) const {
    int d = 0;
    for (int v : vars.indices()) d += exponent(v);
    return d;
}

std::string Monomial::to_string() const {
    if (is_one()) return "1";
    std::string s;
    for (int v = 0; v < kMaxVars; ++v) {
        int e = exponent(v);
        if (e == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(v + 1);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

Monomial Monomial::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto number = [&]() -> int {
        std::size_t start = i;
        long long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000) throw ParseError("number too large", start);
            ++i;
        }
        if (i == start) throw ParseError("expected a number", start);
        return static_cast<int>(v);
    };

    skip_ws();
    if (i < text.size() && text[i] == '1') {
        ++i;
        skip_ws();
        if (i != text.size()) throw ParseError("unexpected text after monomial 1", i);
        return Monomial{};
    }
    Monomial m;
    while (true) {
        skip_ws();
        if (i >= text.size() || text[i] != 'x') throw ParseError("expected a variable 'x<k>'", i);
        ++i;
        std::size_t at = i;
        int var = number();
        if (var < 1 || var > kMaxVars) throw ParseError("variable index out of range", at);
        int e = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            at = i;
            e = number();
            if (e < 1) throw ParseError("exponent must be positive", at);
        }
        if (m.exponent(var - 1) + e > kMaxExponent) throw ParseError("exponent too large", at);
        m.set_exponent(var - 1, m.exponent(var - 1) + e);
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '*') throw ParseError("expected '*'", i);
        ++i;
    }
    return m;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int v = 0; v < kMaxVars; ++v) {
        int ea = a.exponent(v), eb = b.exponent(v);
        if (ea != eb) return ea > eb;
    }
    return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (auto w : m.words()) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

std::vector<Monomial> minimalize(std::vector<Monomial> candidates) {
    struct Keyed {
        int degree;
        Monomial m;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(candidates.size());
    for (auto& c : candidates) keyed.push_back({c.degree(), c});
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return canonical_less(a.m, b.m);
    });

    std::vector<Monomial> kept;
    std::vector<std::uint64_t> kept_support;
    std::size_t lower_degree_end = 0;  // kept[0, lower_degree_end) have degree < current
    int current_degree = -1;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        const auto& [deg, m] = keyed[i];
        if (deg != current_degree) {
            current_degree = deg;
            lower_degree_end = kept.size();
        }
        if (!kept.empty() && kept.size() > lower_degree_end && kept.back() == m) continue;
        const std::uint64_t supp = m.support().bits();
        bool dominated = false;
        for (std::size_t k = 0; k < lower_degree_end; ++k) {
            if ((kept_support[k] & ~supp) != 0) continue;
            if (kept[k].divides(m)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        kept.push_back(m);
        kept_support.push_back(supp);
    }
    return kept;
}

MonomialIdeal::MonomialIdeal(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars)
        throw DomainError("variable universe must have at most " + std::to_string(kMaxVars) + " variables");
}

MonomialIdeal MonomialIdeal::from(int nvars, std::vector<Monomial> candidates) {
    MonomialIdeal ideal(nvars);
    for (const auto& c : candidates)
        if (c.top_var() >= nvars) throw DomainError("monomial " + c.to_string() + " lies outside the universe");
    ideal.gens_ = minimalize(std::move(candidates));
    return ideal;
}

MonomialIdeal MonomialIdeal::unit(int nvars) { return from(nvars, {Monomial{}}); }

MonomialIdeal MonomialIdeal::variables(int nvars, VertexSet vars) {
    std::vector<Monomial> gens;
    for (int v : vars.indices()) gens.push_back(Monomial::of_vars({v}));
    return from(nvars, std::move(gens));
}

MonomialIdeal MonomialIdeal::square_free(int nvars, const std::vector<VertexSet>& supports) {
    std::vector<Monomial> gens;
    gens.reserve(supports.size());
    for (auto s : supports) gens.push_back(Monomial::square_free(s));
    return from(nvars, std::move(gens));
}

bool MonomialIdeal::is_square_free() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_square_free(); });
}

std::vector<VertexSet> MonomialIdeal::supports() const {
    std::vector<VertexSet> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.support());
    return out;
}

int MonomialIdeal::min_degree() const {
    int d = -1;
    for (const auto& g : gens_) {
        int gd = g.degree();
        if (d < 0 || gd < d) d = gd;
    }
    return d;
}

std::vector<std::string> MonomialIdeal::to_strings() const {
    std::vector<std::string> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.to_string());
    return out;
}

namespace {

void require_same_universe(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) throw DomainError("ideals live in different variable universes");
}

void require_in_universe(const Monomial& m, const MonomialIdeal& ideal) {
    if (m.top_var() >= ideal.nvars()) throw DomainError("monomial " + m.to_string() + " lies outside the universe");
}

}  // namespace

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_universe(a, b);
    std::vector<Monomial> cands;
    cands.reserve(a.size() * b.size());
    for (const auto& g : a.gens())
        for (const auto& h : b.gens()) cands.push_back(g * h);
    return MonomialIdeal::from(a.nvars(), std::move(cands));
}

MonomialIdeal power(const MonomialIdeal& ideal, int s) {
    if (s < 0) throw DomainError("power exponent must be nonnegative");
    MonomialIdeal result = MonomialIdeal::unit(ideal.nvars());
    for (int k = 0; k < s; ++k) result = product(result, ideal);
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_universe(a, b);
    std::vector<Monomial> cands;
    cands.reserve(a.size() * b.size());
    for (const auto& g : a.gens())
        for (const auto& h : b.gens()) cands.push_back(g.lcm(h));
    return MonomialIdeal::from(a.nvars(), std::move(cands));
}

bool member(const Monomial& m, const MonomialIdeal& ideal) {
    require_in_universe(m, ideal);
    return std::any_of(ideal.gens().begin(), ideal.gens().end(), [&](const Monomial& g) { return g.divides(m); });
}

namespace {

struct PowerKey {
    Monomial quotient;
    int depth;
    friend bool operator==(const PowerKey&, const PowerKey&) = default;
};

struct PowerKeyHash {
    std::size_t operator()(const PowerKey& k) const noexcept {
        return MonomialHash{}(k.quotient) * 31 + static_cast<std::size_t>(k.depth);
    }
};

class PowerSearch {
  public:
    explicit PowerSearch(const MonomialIdeal& ideal) : gens_(ideal.gens()), min_degree_(ideal.min_degree()) {
        // Descending degree first, canonical within a degree.
        std::stable_sort(gens_.begin(), gens_.end(),
                         [](const Monomial& a, const Monomial& b) { return a.degree() > b.degree(); });
    }

    bool run(const Monomial& m, int depth) {
        if (depth == 0) return true;
        if (gens_.empty()) return false;
        if (m.degree() < depth * min_degree_) return false;
        if (depth == 1)
            return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
        PowerKey key{m, depth};
        if (failed_.contains(key)) return false;
        for (const auto& g : gens_) {
            if (g.divides(m) && run(m / g, depth - 1)) return true;
        }
        failed_.insert(std::move(key));
        return false;
    }

  private:
    std::vector<Monomial> gens_;
    int min_degree_;
    std::unordered_set<PowerKey, PowerKeyHash> failed_;
};

}  // namespace

bool member_power(const Monomial& m, const MonomialIdeal& ideal, int s) {
    PowerMembership oracle(ideal);
    return oracle.contains(m, s);
}

struct PowerMembership::Impl {
    PowerSearch search;
};

PowerMembership::PowerMembership(const MonomialIdeal& ideal)
    : impl_(std::make_unique<Impl>(Impl{PowerSearch(ideal)})), nvars_(ideal.nvars()) {}

PowerMembership::~PowerMembership() = default;

bool PowerMembership::contains(const Monomial& m, int s) {
    if (s < 0) throw DomainError("power exponent must be nonnegative");
    if (m.top_var() >= nvars_) throw DomainError("monomial " + m.to_string() + " lies outside the universe");
    return impl_->search.run(m, s);
}

namespace {

class TransversalBound {
  public:
    explicit TransversalBound(std::span<const VertexSet> sets) {
        for (auto s : sets) sets_.push_back(s.bits());
    }

    int solve() {
        best_ = greedy();
        branch(0, 0, 0);
        return best_;
    }

  private:
    int greedy() const {
        std::uint64_t chosen = 0;
        int count = 0;
        while (true) {
            int hits[64] = {};
            bool any = false;
            for (auto s : sets_) {
                if (s & chosen) continue;
                any = true;
                for (std::uint64_t b = s; b != 0; b &= b - 1) ++hits[std::countr_zero(b)];
            }
            if (!any) return count;
            int best_v = static_cast<int>(std::max_element(hits, hits + 64) - hits);
            chosen |= std::uint64_t{1} << best_v;
            ++count;
        }
    }

    // Lower bound: a greedily chosen family of pairwise disjoint uncovered sets
    // each needs its own vertex.
    static int disjoint_lower_bound(const std::vector<std::uint64_t>& open) {
        std::uint64_t used = 0;
        int count = 0;
        for (auto s : open) {
            if (s & used) continue;
            used |= s;
            ++count;
        }
        return count;
    }

    void branch(std::uint64_t chosen, std::uint64_t excluded, int count) {
        if (count >= best_) return;
        std::vector<std::uint64_t> open;
        for (auto s : sets_) {
            if (s & chosen) continue;
            std::uint64_t avail = s & ~excluded;
            if (avail == 0) return;  // cannot be covered in this branch
            open.push_back(avail);
        }
        if (open.empty()) {
            best_ = count;
            return;
        }
        std::sort(open.begin(), open.end(),
                  [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
        if (count + disjoint_lower_bound(open) >= best_) return;
        // Branch on the smallest open set; the i-th branch takes its i-th vertex
        // and excludes the earlier ones, so no transversal is visited twice.
        std::uint64_t pivot = open.front();
        std::uint64_t earlier = 0;
        for (std::uint64_t b = pivot; b != 0; b &= b - 1) {
            std::uint64_t v = b & (~b + 1);
            branch(chosen | v, excluded | earlier, count + 1);
            earlier |= v;
        }
    }

    std::vector<std::uint64_t> sets_;
    int best_ = 0;
};

}  // namespace

int min_transversal_size(std::span<const VertexSet> sets) {
    for (auto s : sets)
        if (s.empty()) throw DomainError("cannot cover an empty set");
    if (sets.empty()) return 0;
    return TransversalBound(sets).solve();
}

int height(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw DomainError("height of the zero ideal is undefined here");
    if (ideal.is_unit()) throw DomainError("height of the unit ideal is undefined here");
    auto supports = ideal.supports();
    return min_transversal_size(supports);
}

bool equal(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

}  // namespace tcover
