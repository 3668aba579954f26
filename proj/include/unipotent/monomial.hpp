// Words in U1..Ud stored as runs (syllables) with exponent 1 or 2.
#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unipotent {

struct Syllable {
    int gen = 1;
    int exp = 1;
    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class Monomial {
public:
    Monomial() = default;
    /// Canonicalizes adjacent equal generators; returns nullopt if an exponent exceeds max_exp.
    static std::optional<Monomial> from_syllables(const std::vector<Syllable>& syl, int max_exp = 2);
    static Monomial letter(int gen, int exp = 1);

    const std::vector<Syllable>& syllables() const noexcept { return syl_; }
    bool empty() const noexcept { return syl_.empty(); }
    std::size_t syllable_length() const noexcept { return syl_.size(); }
    int total_length() const noexcept;
    int gen_length(int gen) const noexcept;
    int max_gen() const noexcept;

    /// Sub-range of syllables [pos, pos+len), assumed already canonical.
    Monomial slice(std::size_t pos, std::size_t len) const;

    std::string to_string(int d = 0) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    explicit Monomial(std::vector<Syllable> syl) : syl_(std::move(syl)) {}
    std::vector<Syllable> syl_;
};

/// Product in the free algebra modulo x^(max_exp+1) = 0. nullopt means the product is zero.
std::optional<Monomial> multiply(const Monomial& a, const Monomial& b, int max_exp = 2);

/// Monomial order: syllable length, total length, per-generator length from the
/// highest generator down, then reverse-lexicographic on syllables (U < U^2 < V < V^2).
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare_monomials(a, b) > 0; }
};
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare_monomials(a, b) < 0; }
};

/// Occurrence of a pattern inside a word: the word equals left * pattern * right.
struct Occurrence {
    std::size_t pos = 0;
    Monomial left;
    Monomial right;
};

/// Syllable-exact occurrences: the pattern's syllables appear verbatim.
std::optional<Occurrence> find_exact(const Monomial& word, const Monomial& pattern, std::size_t from = 0);
/// Free-algebra factor occurrences: end syllables may be partial powers (V^2 contains V).
std::vector<Occurrence> find_factor(const Monomial& word, const Monomial& pattern);

/// Parses "U1*U2^2", "U*V", "1". Exponents above max_exp give nullopt.
std::optional<Monomial> parse_monomial(std::string_view text, int max_exp = 2);

/// Every canonical monomial in gens 1..d with exponents <= max_exp and total length <= max_len.
std::vector<Monomial> all_monomials(int d, int max_len, int max_exp = 2);

std::size_t hash_value(const Monomial& m) noexcept;

}  // namespace unipotent

template <>
struct std::hash<unipotent::Monomial> {
    std::size_t operator()(const unipotent::Monomial& m) const noexcept { return unipotent::hash_value(m); }
};
