#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcover/graph.hpp"

namespace tcover {

/// Largest variable universe an ideal may live in.
inline constexpr int kMaxVars = 32;
/// Largest exponent a monomial may carry.
inline constexpr int kMaxExponent = 127;

/// A monomial x_1^{a_1} ... x_n^{a_n} with n <= kMaxVars.
///
/// Exponents are packed one per byte, eight to a word, so that divisibility
/// and products reduce to a handful of word operations. Every byte stays below
/// 128, which is what makes the borrow-free subtraction test in divides() valid.
class Monomial {
  public:
    static constexpr int kWords = kMaxVars / 8;

    /// The monomial 1.
    constexpr Monomial() = default;
    /// Exponents indexed by 0-based variable.
    explicit Monomial(std::span<const int> exponents);
    /// Product of the listed variables (0-based indices, repeats allowed).
    static Monomial of_vars(std::initializer_list<int> vars);
    /// The square-free monomial with the given support.
    static Monomial square_free(VertexSet support);

    [[nodiscard]] int exponent(int var) const {
        return static_cast<int>((words_[var >> 3] >> ((var & 7) * 8)) & 0xFF);
    }
    void set_exponent(int var, int e);

    [[nodiscard]] int degree() const;
    [[nodiscard]] VertexSet support() const;
    [[nodiscard]] bool is_one() const { return words_ == std::array<std::uint64_t, kWords>{}; }
    [[nodiscard]] bool is_square_free() const;
    /// Largest variable index with a nonzero exponent, or -1 for the monomial 1.
    [[nodiscard]] int top_var() const;

    /// Whether *this divides other.
    [[nodiscard]] bool divides(const Monomial& other) const {
        constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
        for (int w = 0; w < kWords; ++w)
            if ((((other.words_[w] | kHigh) - words_[w]) & kHigh) != kHigh) return false;
        return true;
    }

    /// Throws DomainError if an exponent would exceed kMaxExponent.
    [[nodiscard]] Monomial operator*(const Monomial& other) const;
    /// Exact quotient; requires other.divides(*this).
    [[nodiscard]] Monomial operator/(const Monomial& other) const;
    [[nodiscard]] Monomial lcm(const Monomial& other) const;

    /// Sum of the exponents over the variables in `vars`.
    [[nodiscard]] int degree_on(VertexSet vars) const;

    /// Sorted-factor form, 1-based: "x1^2*x4". The monomial 1 prints as "1".
    [[nodiscard]] std::string to_string() const;
    /// Inverse of to_string(). Accepts "1", "x3", "x1^2*x4" and whitespace around factors.
    static Monomial parse(std::string_view text);

    [[nodiscard]] const std::array<std::uint64_t, kWords>& words() const { return words_; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    std::array<std::uint64_t, kWords> words_{};
};

/// Canonical order: total degree ascending, then lexicographically descending
/// exponent vectors (x1 > x2 > ...), so x1*x5 sorts before x2*x5.
bool canonical_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// A monomial ideal held as its unique minimal generating set in canonical order.
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
  public:
    /// The zero ideal of the given universe.
    explicit MonomialIdeal(int nvars = 0);

    /// Minimalizes `candidates`; throws DomainError if a candidate uses a variable outside the universe.
    static MonomialIdeal from(int nvars, std::vector<Monomial> candidates);
    static MonomialIdeal unit(int nvars);
    /// <x_i : i in vars>.
    static MonomialIdeal variables(int nvars, VertexSet vars);
    /// Square-free ideal generated by the products over each support.
    static MonomialIdeal square_free(int nvars, const std::vector<VertexSet>& supports);

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] const std::vector<Monomial>& gens() const { return gens_; }
    [[nodiscard]] std::size_t size() const { return gens_.size(); }
    [[nodiscard]] bool is_zero() const { return gens_.empty(); }
    [[nodiscard]] bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
    [[nodiscard]] bool is_square_free() const;
    [[nodiscard]] std::vector<VertexSet> supports() const;
    [[nodiscard]] int min_degree() const;

    /// JSON-friendly: each generator through Monomial::to_string().
    [[nodiscard]] std::vector<std::string> to_strings() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  private:
    int nvars_;
    std::vector<Monomial> gens_;
};

/// Divisibility-minimal, deduplicated, canonically sorted subset of `candidates`.
std::vector<Monomial> minimalize(std::vector<Monomial> candidates);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^s; I^0 is the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, int s);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
bool member(const Monomial& m, const MonomialIdeal& ideal);
/// Whether m lies in ideal^s, decided by searching for s generators whose
/// product divides m. Never expands the power.
bool member_power(const Monomial& m, const MonomialIdeal& ideal, int s);

/// Repeated member_power queries against one ideal, sharing the table of
/// (quotient, depth) pairs already known to fail.
class PowerMembership {
  public:
    explicit PowerMembership(const MonomialIdeal& ideal);
    ~PowerMembership();
    PowerMembership(const PowerMembership&) = delete;
    PowerMembership& operator=(const PowerMembership&) = delete;

    [[nodiscard]] bool contains(const Monomial& m, int s);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    int nvars_;
};
/// Minimum number of variables meeting every generator support. Throws DomainError
/// for the zero or unit ideal.
int height(const MonomialIdeal& ideal);
bool equal(const MonomialIdeal& a, const MonomialIdeal& b);

/// Minimum transversal size of a family of nonempty sets (exact branch and bound).
int min_transversal_size(std::span<const VertexSet> sets);

}  // namespace tcover
