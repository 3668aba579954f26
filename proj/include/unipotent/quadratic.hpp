// Quadratic-unipotent representations: the 2^d integer matrices, their relations, rank and class-2 checks.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "unipotent/linalg.hpp"

namespace unipotent {

inline constexpr int kQuadraticMaxD = 12;
inline constexpr int kQuadraticDefaultMaxD = 8;

class RelationFailed : public std::runtime_error {
public:
    RelationFailed(int i, int j)
        : std::runtime_error(j == 0 ? "(a" + std::to_string(i) + " - I)^2 != 0"
                                    : "(a" + std::to_string(i) + "*a" + std::to_string(j) + " - I)^2 != 0"),
          i_(i), j_(j) {}
    int i() const noexcept { return i_; }
    int j() const noexcept { return j_; }

private:
    int i_, j_;
};

struct QuadraticRep {
    int d = 0;
    std::vector<SparseIntMatrix> gens;      // a_1 .. a_d (index 0 is a_1)
    std::vector<SparseIntMatrix> inverses;  // built from the block inverse form
    std::size_t dim() const { return std::size_t{1} << d; }
    SparseIntMatrix u(int i) const;  // a_i - I, 1-based
};

/// 1 <= d <= 12.
QuadraticRep build_rep(int d);

struct QuadraticRelationReport {
    std::size_t relations_checked = 0;
    bool inverse_formula = false;   // a^-1 = 2I - a
    bool block_inverse = false;     // inverse matches the recursive block form
    bool anticommutation = false;   // u_j u_i = -u_i u_j
    bool reordering = false;        // a_j a_i = -a_i a_j + 2a_i + 2a_j - 2
    bool ok() const { return inverse_formula && block_inverse && anticommutation && reordering; }
};

/// Throws RelationFailed for the first failing relation (j == 0 for a single generator).
QuadraticRelationReport verify_relations(const QuadraticRep& rep);

/// Products a_{i1}...a_{is}, i1 < ... < is, indexed by bitmask.
std::vector<SparseIntMatrix> ordered_products(const QuadraticRep& rep);

struct RankReport {
    std::size_t rank = 0;           // of the 2^d ordered products
    std::size_t expected = 0;
    std::size_t lower_rank = 0;     // products avoiding a_d
    bool direct_sum = false;        // lower span (+) lower span * a_d is the whole span
    std::vector<std::size_t> witness;  // bitmasks of the ordered products
};

/// Exact rank via a faithful vector image; flatten = true also ranks the flattened matrices (small d only).
RankReport rank_and_basis(const QuadraticRep& rep, bool flatten = false);

struct QuadraticNilpotency {
    int degree = 0;                  // least k with B^k = 0
    std::vector<std::size_t> power_ranks;
    bool top_product_nonzero = false;
    bool top_power_spanned_by_product = false;
};

QuadraticNilpotency nilpotency_check(const QuadraticRep& rep);

struct Class2Report {
    std::size_t triples_checked = 0;
    bool triple_commutators_trivial = false;
    bool commutator_formula = false;   // [a_i, a_j] = I + 2 u_i u_j
    std::size_t commutator_rank = 0;   // rank of {u_i u_j : i < j}
    bool ok(int d) const;
};

Class2Report class2_check(const QuadraticRep& rep);

/// {d, relations_ok, rank, nilpotency_degree, class2_ok}; refuses d above max_d.
nlohmann::json quadratic_report(int d, int max_d = kQuadraticDefaultMaxD, bool flatten = false);

}  // namespace unipotent
