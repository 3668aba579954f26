#include "unipotent/relations.hpp"

#include <utility>

namespace unipotent {

namespace {

LabeledRelation rel(std::string label, const char* lhs, const char* rhs) {
    return {std::move(label), Polynomial::parse(lhs), Polynomial::parse(rhs)};
}

}  // namespace

const std::vector<LabeledRelation>& printed_table() {
    static const std::vector<LabeledRelation> table = {
        rel("4.1", "V*U*V", "U*V*U - U*V^2 + U^2*V - V^2*U + V*U^2"),
        rel("4.2", "U*V*U*V", "-2*U*V*U - 2*U^2*V + V^2*U^2 - 2*V*U^2"),
        rel("4.3", "V*U*V*U", "-2*U*V*U + U^2*V^2 - 2*U^2*V - 2*V*U^2"),
        rel("4.4", "V*U*V*U - U*V*U*V", "U^2*V^2 - V^2*U^2"),
        rel("4.5", "U*V^2*U", "2*U*V*U + 2*U^2*V + 2*V*U^2 - U^2*V^2 - V^2*U^2"),
        rel("4.6", "U*V*U*V + U*V^2*U", "-U^2*V^2"),
        rel("4.7", "V*U^2*V", "U*V^2*U"),
        rel("4.8", "U*V*U^2", "-U^2*V*U"),
        rel("4.9", "V*U*V^2", "-V^2*U*V"),
        rel("4.10a", "U^2*V*U^2", "0"),
        rel("4.10b", "V^2*U*V^2", "0"),
        rel("4.11", "U*V*U*V*U", "0"),
        rel("4.12a", "V*U^2*V^2*U", "U^2*V*U^2*V"),
        rel("4.12b", "U^2*V*U^2*V", "0"),
        rel("4.13a", "V^2*U*V*U", "U*V^2*U*V"),
        rel("4.13b", "U*V^2*U*V", "-V^2*U^2*V"),
        rel("4.14a", "V*U*V^2*U", "U*V*U*V^2"),
        rel("4.14b", "U*V*U*V^2", "V^2*U^2*V"),
        rel("4.15a", "V*U^2*V*U", "U^2*V*U*V"),
        rel("4.15b", "U^2*V*U*V", "-U^2*V^2*U"),
        rel("4.16a", "V*U*V*U^2", "U*V*U^2*V"),
        rel("4.16b", "U*V*U^2*V", "U^2*V^2*U"),
    };
    return table;
}

const std::vector<LabeledRelation>& lemma_relations() {
    static const std::vector<LabeledRelation> rels = {
        rel("L1", "V*U*V", "U*V*U - U*V^2 + U^2*V - V^2*U + V*U^2"),
        rel("L2", "U*V^2*U", "2*U*V*U + 2*U^2*V + 2*V*U^2 - U^2*V^2 - V^2*U^2"),
        rel("L3", "V*U^2*V", "U*V^2*U"),
        rel("L4", "U*V*U^2", "-U^2*V*U"),
        rel("L5a", "V*U^2*V^2*U", "0"),
        rel("L5b", "U^2*V*U^2*V", "0"),
    };
    return rels;
}

const std::vector<LabeledRelation>& supplementary_relations() {
    static const std::vector<LabeledRelation> rels = {
        rel("S1", "U*V*U*V*U*V", "0"),
        rel("S2", "U*V*U*V*U^2", "0"),
        rel("S3", "U^2*V*U*V*U", "0"),
        rel("S4", "U*V^2*U*V^2", "0"),
        rel("S5", "U^2*V*U^2*V", "0"),
        rel("S6", "U*V*U^2*V*U", "0"),
        rel("S7a", "V*U*V*U^2*V", "U*V^2*U*V*U"),
        rel("S7b", "U*V^2*U*V*U", "U*V*U^2*V^2"),
        rel("S7c", "U*V*U^2*V^2", "U^2*V^2*U*V"),
        rel("S7d", "U^2*V^2*U*V", "V^2*U*V*U^2"),
        rel("S7e", "V^2*U*V*U^2", "V*U^2*V^2*U"),
        rel("S8a", "V^2*U^2*V*U", "V^2*U*V*U^2"),
        rel("S8b", "V^2*U*V*U^2", "V*U*V^2*U^2"),
        rel("S8c", "V*U*V^2*U^2", "U*V^2*U^2*V"),
        rel("S8d", "U*V^2*U^2*V", "U^2*V*U*V^2"),
        rel("S8e", "U^2*V*U*V^2", "U*V*U*V^2*U"),
        rel("S8f", "U*V*U*V^2*U", "V*U^2*V*U*V"),
        rel("S8g", "V*U^2*V*U*V", "-V*U^2*V^2*U"),
    };
    return rels;
}

std::vector<Polynomial> relation_polynomials(const std::vector<LabeledRelation>& rels) {
    std::vector<Polynomial> out;
    out.reserve(rels.size());
    for (const auto& r : rels) out.push_back(r.relation());
    return out;
}

const RewriteSystem& table_system() {
    static const RewriteSystem sys =
        complete_bounded(relation_polynomials(printed_table()), CoefficientRing::z16(), 7);
    return sys;
}

const RewriteSystem& lemma_system() {
    static const RewriteSystem sys =
        complete_bounded(relation_polynomials(lemma_relations()), CoefficientRing::z16(), 7);
    return sys;
}

}  // namespace unipotent
