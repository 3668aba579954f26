// The rank-18 two-generator ring: basis, structure constants, matrices and commutator checks.
#pragma once

#include "unipotent/grouprel.hpp"
#include "unipotent/linalg.hpp"
#include "unipotent/relations.hpp"

#include <json.hpp>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace unipotent {

inline constexpr std::size_t kRank = 18;

class NotInSpan : public std::runtime_error {
public:
    explicit NotInSpan(const std::string& monomial)
        : std::runtime_error("monomial " + monomial + " is outside the basis span") {}
};

class MatrixMismatch : public std::runtime_error {
public:
    MatrixMismatch(char which, std::size_t row, std::size_t col)
        : std::runtime_error(std::string("matrix ") + which + " differs at (" + std::to_string(row + 1) + ", " +
                             std::to_string(col + 1) + ")"),
          row_(row), col_(col) {}
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_, col_;
};

/// Coordinates over the matrix-order basis.
struct RingElement {
    std::array<mpq_class, kRank> coords{};

    static RingElement unit();
    static RingElement basis(std::size_t i);
    bool is_zero() const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    RingElement scaled(const mpq_class& c) const;
    friend bool operator==(const RingElement&, const RingElement&) = default;
};

class RingModel {
public:
    /// Built once over Z[1/6].
    static const RingModel& instance();

    /// 1, U, V, U^2, UV, VU, V^2, U^2V, UV^2, VU^2, V^2U, U^2VU, U^2V^2, VU^2V, V^2U^2, V^2UV, U^2V^2U, V^2U^2V
    const std::vector<Monomial>& basis() const noexcept { return basis_; }
    /// The other printed generating set (with VUV in place of VU^2V).
    const std::vector<Monomial>& first_listing() const noexcept { return first_listing_; }
    /// Normal-form monomials of the table system.
    const std::vector<Monomial>& normal_forms() const noexcept { return normal_forms_; }
    const RewriteSystem& system() const { return table_system(); }

    /// Reduces p and expresses it in basis coordinates. Throws NotInSpan.
    RingElement coordinates(const Polynomial& p) const;
    Polynomial to_polynomial(const RingElement& x) const;

    /// entry(i, j) = coordinates of b_i * b_j
    const RingElement& structure_constant(std::size_t i, std::size_t j) const { return table_[i][j]; }
    RingElement multiply(const RingElement& x, const RingElement& y) const;
    RingElement power(const RingElement& x, int n) const;
    RingElement element_of(const GroupWord& w) const;

    /// Row i holds the coordinates of b_i * x.
    QMatrix regular_matrix(const RingElement& x) const;
    /// Reference matrices for a and b.
    static const QMatrix& printed_matrix(char which);
    /// Compares the printed matrices with the recomputed regular representation; throws MatrixMismatch.
    std::pair<QMatrix, QMatrix> generator_matrices() const;

    /// Number of nonzero structure constants, for reporting.
    std::size_t structure_nonzeros() const;

private:
    RingModel();

    std::vector<Monomial> basis_, first_listing_, normal_forms_;
    QMatrix nf_to_basis_;  // row k: basis coordinates of normal form k
    std::vector<std::vector<RingElement>> table_;
    std::vector<std::vector<std::pair<std::size_t, mpq_class>>> sparse_;  // (i*18 + j) -> nonzero coords
};

QMatrix matrix_of_word(const GroupWord& w, const QMatrix& a, const QMatrix& b);
/// Unipotent inverse: A^-1 = A^2 - 3A + 3I when (A - I)^3 = 0.
QMatrix unipotent_inverse(const QMatrix& a);
/// Evaluates a polynomial in U, V at the given matrices.
QMatrix evaluate(const Polynomial& p, const QMatrix& u, const QMatrix& v);

/// The seven conditioning words y1, y2, y1y2, y1^-1y2, y1^2y2, y1y2^2, [y1,y2].
std::vector<GroupWord> conditioning_words();

struct ConditionResult {
    std::string name;
    bool ok = false;
};

/// (W - I)^3 = 0 for each conditioning word and the five defining relations at A - I, B - I.
std::vector<ConditionResult> verify_defining_conditions(const QMatrix& a, const QMatrix& b);

struct NilpotencyReport {
    int degree = 0;
    std::vector<std::size_t> power_ranks;  // rank of B^k, k = 1, 2, ...
    bool witness_in_fifth_power = false;
    std::string witness;
};

NilpotencyReport nilpotency_degree();

struct CommutatorItem {
    std::string label;
    std::string printed;
    Polynomial computed;  // reduced
    bool matches = false;
};

struct CommutatorReport {
    std::vector<CommutatorItem> items;
    std::size_t weight5_count = 0;
    bool weight5_trivial = false;
    std::vector<std::size_t> weight_ranks;  // independent items per weight 2, 3, 4
    bool independent = false;
    bool ok() const;
};

CommutatorReport basic_commutators();

struct CubeReport {
    Polynomial truncated_cube;  // C2^3 with length >= 7 terms dropped, before rewriting
    bool truncated_matches_expected = false;
    Polynomial reduced_cube;
    bool statement_form_vanishes = false;  // 6 U V^2 U^2 V
    bool proof_form_vanishes = false;      // 6 U^2 V^2 U V
    bool ok() const;
};

CubeReport cube_of_commutator();

nlohmann::json ring_report();

}  // namespace unipotent
