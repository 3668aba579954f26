#include "unipotent/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "unipotent/derivation.hpp"
#include "unipotent/quadratic.hpp"
#include "unipotent/relations.hpp"
#include "unipotent/ringmodel.hpp"
#include "unipotent/spanning.hpp"
#include "unipotent/variety.hpp"

namespace unipotent {

namespace {

const std::pair<int, const char*> kExpectedSteps[] = {
    {1, "U*V*U*V*U*V = -V*U*V*U*V - U*V*U*V*U - U*V*U*V^2 - U*V^2*U*V - U*V*U^2*V - U^2*V*U*V - 2*U*V*U*V - V*U*V*U - V*U*V^2 - V^2*U*V - V*U^2*V - U*V^2*U - U*V*U^2 - U^2*V*U - V*U*V - U*V*U - U^2*V^2 - U*V^2 - V^2*U - U^2*V - V*U^2"},
    {2, "U*V*U*V*U = -U*V*U*V - V*U*V*U - U*V^2*U - U*V*U^2 - U^2*V*U - V*U*V - U*V*U - U*V^2 - V^2*U - U^2*V - V*U^2"},
    {3, "U*V*U*V = -V*U*V - U*V*U + V^2*U^2 - U*V^2 - V^2*U - U^2*V - V*U^2"},
    {4, "U^2*V^2*U^2 = U*V^2*U^2 + U^2*V^2*U + U^2*V*U^2 - U*V^2*U - U*V*U^2 - U^2*V*U + V*U*V + U*V*U - U^2*V^2 - V^2*U^2 + U*V^2 + V^2*U + U^2*V + V*U^2"},
    {5, "V*U^2*V = U*V^2*U + V*U*V - U*V*U + U*V^2 + V^2*U - U^2*V - V*U^2"},
    {6, "V^2*U*V^2 = U^2*V*U^2 + V*U*V^2 + V^2*U*V - U*V*U^2 - U^2*V*U - V*U*V + U*V*U - U*V^2 - V^2*U + U^2*V + V*U^2"},
    {7, "V*U*V^2 = -V^2*U*V"},
    {8, "V^2*U*V^2 = 0"},
    {9, "U*V*U^2 = -U^2*V*U"},
    {10, "U^2*V*U^2 = 0"},
    {11, "V*U*V = U*V*U - U*V^2 - V^2*U + U^2*V + V*U^2"},
    {12, "V*U^2*V = U*V^2*U"},
    {13, "U*V^2*U = 2*U*V*U - U^2*V^2 - V^2*U^2 + 2*U^2*V + 2*V*U^2"},
    {14, "U*V^2*U^2 = -U^2*V^2*U"},
    {15, "U^2*V^2*U^2 = 0"},
};

const char* const kExpansion =
    "U1*U2*U3*U1*U2 + U1*U2*U3*U1 + U1*U2*U3*U2 + U1*U3*U1*U2 + U2*U3*U1*U2 + U1*U2*U3 + U1*U3*U2 + U3*U1*U2 + "
    "U2*U1*U3 + U2*U3*U1 + U3*U2*U1 + U2^2*U1^2*U3 + U3*U2^2*U1^2 - U2^2*U1*U3 - U3*U2^2*U1 - U2*U1^2*U3 - "
    "U3*U2*U1^2 - U1*U2*U3^2 - U3^2*U1*U2";

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "FAILED " << what << "; ";
        }
    }
};

using Check = void (*)(Outcome&);

void derivation(Outcome& o) {
    auto res = replay_derivation(CoefficientRing::z16());
    o.require(!res.log.failure, "replay over Z[1/6]");
    o.require(res.log.steps.size() == 15, "15 steps");
    std::size_t matched = 0;
    for (const auto& [id, text] : kExpectedSteps) {
        const DerivationStep* s = res.log.step(id);
        if (s && s->rule.to_string(2) == text) ++matched;
    }
    o.require(matched == 15, "golden relations");
    auto z = replay_derivation(CoefficientRing::integers());
    o.require(z.log.failure && z.log.failure->step == 7 && z.log.failure->prime == 3, "failure over Z at step 7");
    o.detail << matched << "/15 steps match; over Z: InversionRequired(" << (z.log.failure ? z.log.failure->prime : 0)
             << ") at step " << (z.log.failure ? z.log.failure->step : 0);
}

void relation_table(Outcome& o) {
    std::size_t ok = 0;
    for (const auto& r : printed_table()) ok += reduce(r.relation(), table_system()).is_zero();
    o.require(ok == printed_table().size(), "printed relations reduce to 0");
    std::size_t words = 0, agree = 0;
    for (const auto& m : all_monomials(2, 7, 2)) {
        ++words;
        Polynomial p(m);
        agree += reduce(p, lemma_system()) == reduce(p, table_system());
    }
    o.require(agree == words, "lemma and table systems agree");
    o.detail << ok << " printed relations vanish; " << agree << "/" << words << " monomials of length <= 7 agree";
}

void rank(Outcome& o) {
    const RingModel& ring = RingModel::instance();
    const auto& nf = ring.normal_forms();
    o.require(nf.size() == 18, "18 normal forms");
    EchelonBasis span(kRank);
    for (const auto& m : ring.basis()) {
        RingElement x = ring.coordinates(Polynomial(m));
        span.add({x.coords.begin(), x.coords.end()});
    }
    o.require(span.rank() == 18, "basis spans the quotient");
    std::set<std::string> first, normal;
    for (const auto& m : ring.first_listing()) first.insert(m.to_string(2));
    for (const auto& m : nf) normal.insert(m.to_string(2));
    std::vector<std::string> only_first, only_nf;
    for (const auto& s : first)
        if (!normal.count(s)) only_first.push_back(s);
    for (const auto& s : normal)
        if (!first.count(s)) only_nf.push_back(s);
    o.require(only_first == std::vector<std::string>{"V*U*V"} && only_nf == std::vector<std::string>{"U*V*U"},
              "normal forms equal the first listing up to VUV -> UVU");
    std::size_t bad = 0;
    for (std::size_t i = 0; i < kRank; ++i)
        for (std::size_t j = 0; j < kRank; ++j)
            for (std::size_t k = 0; k < kRank; ++k)
                bad += !(ring.multiply(ring.structure_constant(i, j), RingElement::basis(k)) ==
                         ring.multiply(RingElement::basis(i), ring.structure_constant(j, k)));
    o.require(bad == 0, "associativity");
    o.detail << nf.size() << " normal forms; " << 18 * 18 * 18 - bad << "/5832 triples associative";
}

void nilpotency(Outcome& o) {
    auto n = nilpotency_degree();
    o.require(n.degree == 6, "degree 6");
    o.require(n.witness_in_fifth_power, "U^2*V^2*U in B^5");
    o.detail << "degree " << n.degree << ", ranks of B^k:";
    for (auto r : n.power_ranks) o.detail << " " << r;
}

void matrices(Outcome& o) {
    const RingModel& ring = RingModel::instance();
    const QMatrix& a = RingModel::printed_matrix('a');
    const QMatrix& b = RingModel::printed_matrix('b');
    bool triangular = true;
    for (const QMatrix* m : {&a, &b})
        for (std::size_t i = 0; i < kRank; ++i)
            for (std::size_t j = 0; j <= i; ++j) triangular = triangular && m->at(i, j) == (i == j ? 1 : 0);
    o.require(triangular, "unit upper triangular");
    o.require(a.at(4, 12) == mpq_class(1, 2) && b.at(0, 2) == 1, "spot entries");
    try {
        ring.generator_matrices();
    } catch (const MatrixMismatch& e) {
        o.require(false, e.what());
    }
    std::size_t conditions = 0;
    for (const auto& c : verify_defining_conditions(a, b)) {
        o.require(c.ok, c.name);
        ++conditions;
    }
    std::vector<std::vector<mpq_class>> flat;
    for (std::size_t i = 0; i < kRank; ++i) {
        QMatrix m = ring.regular_matrix(RingElement::basis(i));
        std::vector<mpq_class> row;
        for (std::size_t r = 0; r < kRank; ++r)
            for (std::size_t c = 0; c < kRank; ++c) row.push_back(m.at(r, c));
        flat.push_back(std::move(row));
    }
    std::size_t rk = rank_rational(flat);
    o.require(rk == 18, "algebra rank 18");
    o.detail << "matrices equal the regular representation; " << conditions << " conditions hold; algebra rank " << rk;
}

void commutators(Outcome& o) {
    auto c = basic_commutators();
    std::size_t matched = 0;
    for (const auto& it : c.items) {
        matched += it.matches;
        o.require(it.matches, it.label);
    }
    o.require(c.weight5_trivial && c.weight5_count == 32, "weight-5 commutators trivial");
    o.require(c.independent, "independence");
    o.detail << matched << "/7 expressions; " << c.weight5_count << " weight-5 commutators trivial; ranks";
    for (auto r : c.weight_ranks) o.detail << " " << r;
}

void cube(Outcome& o) {
    auto c = cube_of_commutator();
    o.require(c.truncated_matches_expected, "truncated cube");
    o.require(c.reduced_cube.is_zero(), "cube vanishes");
    o.require(c.statement_form_vanishes && c.proof_form_vanishes, "6UV^2U^2V and 6U^2V^2UV vanish");
    o.detail << "C^3 reduces to " << c.reduced_cube.to_string();
}

void variety(Outcome& o) {
    auto r = check_group_in_variety();
    o.require(r.ok(), "group in locus");
    auto ce = circle_counterexample();
    o.require(ce.has_value(), "circle counterexample");
    o.detail << r.normal_form_elements << " normal-form elements, " << r.raw_words << " words, "
             << r.violations.size() << " violations";
    if (ce) o.detail << "; counterexample " << ce->x.to_string() << " o " << ce->y.to_string() << " -> " << ce->value.get_str();
}

void quadratic(Outcome& o) {
    for (int d = 1; d <= 8; ++d) {
        QuadraticRep rep = build_rep(d);
        const std::string tag = "d=" + std::to_string(d) + " ";
        try {
            o.require(verify_relations(rep).ok(), tag + "relations");
        } catch (const RelationFailed& e) {
            o.require(false, tag + e.what());
        }
        o.require(rank_and_basis(rep).rank == rep.dim(), tag + "rank");
        auto n = nilpotency_check(rep);
        o.require(n.degree == d + 1 && n.top_power_spanned_by_product, tag + "nilpotency");
        o.require(class2_check(rep).ok(d), tag + "class 2");
    }
    o.detail << "d = 1..8";
}

void spanning(Outcome& o) {
    auto em = build_EM(2);
    std::set<GroupWord> got, want;
    for (const auto& x : em.E.elements) got.insert(conjugacy_inverse_class(x));
    for (const char* x : {"y1", "y2", "y1*y2", "y1*y2^-1"}) want.insert(conjugacy_inverse_class(GroupWord::parse(x)));
    o.require(got == want, "E_2 classes");
    o.require(em.M.elements.size() <= 39, "|M_2| <= 39");
    for (int d = 2; d <= 12; ++d) {
        auto b = cardinality_bound(d);
        o.require(b.within_limit, "log bound at d=" + std::to_string(d));
        if (d <= 6) o.require(b.burnside_below, "Burnside at d=" + std::to_string(d));
    }
    o.detail << "|E_2| = " << em.E.elements.size() << " in " << got.size() << " classes; |M_2| = " << em.M.elements.size()
             << "; |M_3| = " << build_EM(3).M.elements.size();
}

void span_oracle(Outcome& o) {
    const QMatrix& a = RingModel::printed_matrix('a');
    const QMatrix& b = RingModel::printed_matrix('b');
    auto conds = unipotent_conditions();
    std::mt19937 rng(500);
    std::uniform_int_distribution<int> len(0, 10), letter(0, 3);
    std::size_t agree = 0;
    for (int t = 0; t < 500; ++t) {
        GroupWord w;
        for (int k = len(rng); k > 0; --k) {
            int x = letter(rng);
            w = w * GroupWord::gen(x / 2 + 1, x % 2 ? -1 : 1);
        }
        auto r = span_reduce_d2(w, conds);
        agree += evaluate_combination(r.result, a, b) == matrix_of_word(w, a, b);
    }
    o.require(agree == 500, "matrix evaluation");
    o.detail << agree << "/500 words agree";
}

void fixtures(Outcome& o) {
    auto w2 = build_W(2);
    o.require(w2.size() == 30, "|W_2| = 30");
    o.require(build_P(1).elements.size() == 7, "|P_2| = 7");
    o.require(vu1u2v_expansion() == Polynomial::parse(kExpansion), "V U1 U2 V expansion");
    auto fam = verify_v_mu_v(4);
    o.require(fam.failures.empty(), "V^2 mu V^2 family");
    o.detail << "|W_2| = " << w2.size() << ", |W_3| = " << build_W(3).size() << "; expansion re-derived; "
             << fam.checked << " family identities";
}

void confluence(Outcome& o) {
    auto failures = check_local_confluence(table_system(), 7);
    o.require(failures.empty(), "no critical-pair failures");
    o.detail << failures.size() << " critical-pair failures up to length 7";
}

struct Criterion {
    int id;
    const char* name;
    Check run;
    double limit;
};

const Criterion kCriteria[] = {
    {1, "derivation replay", derivation, 1},
    {2, "relation table", relation_table, 10},
    {3, "rank 18", rank, 0},
    {4, "nilpotency degree 6", nilpotency, 0},
    {5, "generator matrices", matrices, 5},
    {6, "basic commutators", commutators, 0},
    {7, "cube of the commutator", cube, 0},
    {8, "cubic locus", variety, 60},
    {9, "quadratic d = 1..8", quadratic, 120},
    {10, "spanning sets and bounds", spanning, 0},
    {11, "span reduction oracle", span_oracle, 0},
    {12, "W, P and expansion fixtures", fixtures, 0},
    {13, "local confluence", confluence, 0},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only,
                                            const std::function<void(const CriterionResult&)>& progress) {
    std::vector<CriterionResult> out;
    for (const auto& c : kCriteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        CriterionResult r{c.id, c.name, false, "", 0, c.limit};
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit > 0 && r.seconds >= c.limit) o.require(false, "runtime limit");
        r.pass = o.pass;
        r.detail = o.detail.str();
        if (progress) progress(r);
        out.push_back(std::move(r));
    }
    return out;
}

nlohmann::json acceptance_json(const std::vector<CriterionResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    return {{"criteria", arr}, {"all_pass", all}};
}

std::string format_result(const CriterionResult& r) {
    char head[64];
    std::snprintf(head, sizeof head, "%s %2d ", r.pass ? "PASS" : "FAIL", r.id);
    char tail[64];
    if (r.limit_seconds > 0)
        std::snprintf(tail, sizeof tail, " (%.2f s, limit %.0f s)", r.seconds, r.limit_seconds);
    else
        std::snprintf(tail, sizeof tail, " (%.2f s)", r.seconds);
    return std::string(head) + r.name + ": " + r.detail + tail;
}

}  // namespace unipotent
