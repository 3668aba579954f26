// Group words and their images u(g) = g - 1 in the augmentation ideal.
#pragma once

#include "unipotent/polynomial.hpp"
#include "unipotent/rewrite.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace unipotent {

struct Letter {
    int gen = 1;
    int exp = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in y1..yd; adjacent letters have distinct generators.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(const std::vector<Letter>& letters);
    static GroupWord gen(int g, int exp = 1) { return GroupWord({{g, exp}}); }
    /// Accepts "y1*y2^-1*y1^2", "a", "b^-1", "e", "[a,b]", "[a,b,a]" and products of these.
    static GroupWord parse(std::string_view text);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    bool empty() const noexcept { return letters_.empty(); }
    /// Number of letters y^(+-1) counted with multiplicity.
    int length() const noexcept;
    int max_gen() const noexcept;
    GroupWord inverse() const;
    GroupWord power(int n) const;
    /// Exponent sum per generator (abelianization), length max_gen().
    std::vector<int> exponent_sums(int d) const;

    /// "y1*y2^-1"; with aliases "a*b^-1" for two generators. The identity is "e".
    std::string to_string(bool aliases = false) const;

    friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord& a, const GroupWord& b) { return a.letters_ <=> b.letters_; }

private:
    std::vector<Letter> letters_;
};

/// x^-1 y^-1 x y
GroupWord commutator(const GroupWord& x, const GroupWord& y);
/// Left-normed [x1, x2, ..., xn].
GroupWord commutator(const std::vector<GroupWord>& xs);

enum class Context { Cubic, Quadratic };

/// u(y^m): m*U + C(m,2)*U^2 when cubic, m*U when quadratic.
Polynomial u_of_power(int m, Context ctx, int gen = 1);

/// u(w) through u(gh) = u(g) + u(h) + u(g)u(h). Cubic words live modulo U_i^3 = 0; quadratic
/// words modulo U_i^2 = 0 followed by the anticommuting normal form. An optional system
/// reduces intermediate results.
Polynomial expand_word(const GroupWord& w, Context ctx, const RewriteSystem* system = nullptr);

/// Sorts each monomial of a square-free polynomial using U_j U_i = -U_i U_j; repeated generators vanish.
Polynomial quadratic_normal_form(const Polynomial& p);

/// u([y_i, y_j]) = 2 u(y_i) u(y_j) in the quadratic context, in normal form.
Polynomial quadratic_commutator(int i, int j);

}  // namespace unipotent
