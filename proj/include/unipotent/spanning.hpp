// Spanning sets for cubic conditions: the E/M recursion, cardinality bounds, the two-generator span
// reduction, and the P/W recursion with nilpotency propagation.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "unipotent/coeff.hpp"
#include "unipotent/grouprel.hpp"
#include "unipotent/linalg.hpp"
#include "unipotent/polynomial.hpp"

namespace unipotent {

inline constexpr int kMaxExplicitM = 3;
inline constexpr int kMaxExplicitE = 4;

struct WordSet {
    char label = 'E';
    int d = 0;
    std::vector<GroupWord> elements;  // sorted, deduplicated
    bool contains(const GroupWord& w) const;
    /// Newline-delimited words, aliases a/b when d <= 2.
    std::string to_text() const;
};

struct EMSets {
    WordSet E, M;
};

/// Explicit E_d and M_d for d <= 3.
EMSets build_EM(int d);
/// Explicit E_d for d <= 4.
WordSet build_E(int d);

/// Representative of w up to inversion and cyclic rotation.
GroupWord conjugacy_inverse_class(const GroupWord& w);
/// gcd of the exponent sums is 1.
bool abelian_primitive(const GroupWord& w, int d);

struct BoundReport {
    int d = 0;
    mpz_class bound;          // iterated |M| + |M|^2 + |M|^3 from |M_2| = 39
    double log3 = 0;
    mpz_class log3_limit;     // 4 * 3^(d-2)
    bool within_limit = false;
    long burnside_exponent = 0;  // d + C(d,2) + C(d,3)
    bool burnside_below = false;
};

/// d >= 2.
BoundReport cardinality_bound(int d);

struct CubicCondition {
    GroupWord word;
    Coefficient delta, gamma, epsilon;  // x^3 = delta x^2 + gamma x + epsilon
};

/// (x - 1)^3 = 0 on a, b, ab, a^-1 b.
std::vector<CubicCondition> unipotent_conditions();

using GroupCombination = std::map<GroupWord, Coefficient>;

bool in_M2(const GroupWord& w);

struct SpanReduction {
    GroupCombination result;
    std::size_t steps = 0;
};

/// Rewrites a word in a, b as a combination of M_2 words. Each rewrite strictly lowers
/// (b-letter count, descending b-sign inversions, length) or lands in M_2.
SpanReduction span_reduce_d2(const GroupWord& w, const std::vector<CubicCondition>& conditions,
                             const CoefficientRing& ring = CoefficientRing::z16());

/// sum c_w M(w) with M(a) = a, M(b) = b and inverses by A^-1 = A^2 - 3A + 3I.
QMatrix evaluate_combination(const GroupCombination& c, const QMatrix& a, const QMatrix& b);

/// y_{i1}^{d1}... with d = 1 for exponent 1 and d = -1 for exponent 2.
GroupWord leading_word(const Monomial& m);
/// Nonempty initial segments of w.
std::vector<GroupWord> initial_segments(const GroupWord& w);

/// W_1 = {U1, U1^2}; W_{k+1} by the recursive union. d <= 3.
std::vector<Monomial> build_W(int d);
/// P_2 is the seven-word set of the two-generator ring; P_{k+1} from the closure of P_k. d <= 3.
WordSet build_P(int d);
/// Closure of P_d together with the leading words of W_d under initial segments.
WordSet closure_P(int d);

struct PropagationVerdict {
    std::size_t free_length = 0;   // L(W): total length of the factors avoiding the top generator
    std::size_t threshold = 0;     // 3 * rho
    bool vanishes = false;
    std::size_t pigeonhole = 0;    // ceil(L / 3), at least rho when vanishing
};

/// top: index of the newest generator.
PropagationVerdict nilpotency_propagation(std::size_t rho, const Monomial& w, int top);

/// The expansion of V U1 U2 V through U -> U1 + U2 + U1 U2 (generators U1, U2, V = U3).
Polynomial vu1u2v_expansion();
/// Image of U^2 under the same substitution, reduced in the two-generator ring (U = U1, V = U2).
Polynomial substituted_square();

struct FamilyReport {
    std::size_t checked = 0;
    std::vector<std::string> failures;
};

/// V^2 mu V^2 = 0 and V mu V^2 = -V^2 mu V in the two-generator ring for mu over U of length <= max_len,
/// and V^2 mu V^2 = 0 for all mu over U, V of length <= max_len.
FamilyReport verify_v_mu_v(int max_len);

nlohmann::json spanning_em_report(int d);
nlohmann::json spanning_bound_report(int d);
nlohmann::json spanning_pw_report(int d);

}  // namespace unipotent
