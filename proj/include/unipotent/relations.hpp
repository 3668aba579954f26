// The printed relation table for the two-generator ring and the systems built from it.
#pragma once

#include "unipotent/rewrite.hpp"

#include <string>
#include <vector>

namespace unipotent {

struct LabeledRelation {
    std::string label;
    Polynomial lhs;
    Polynomial rhs;
    Polynomial relation() const { return lhs - rhs; }
};

/// Relations 4.1 to 4.16; chained equalities are split into consecutive pairs ("4.13a", "4.13b").
const std::vector<LabeledRelation>& printed_table();
/// The five defining relations (the last one is a pair of monomials set to zero).
const std::vector<LabeledRelation>& lemma_relations();
/// Further monomial identities stated without derivation, verified by reduction.
const std::vector<LabeledRelation>& supplementary_relations();

std::vector<Polynomial> relation_polynomials(const std::vector<LabeledRelation>& rels);

/// Bounded completion of the printed table over Z[1/6]; built once.
const RewriteSystem& table_system();
/// Bounded completion of the five defining relations over Z[1/6]; built once.
const RewriteSystem& lemma_system();

}  // namespace unipotent
