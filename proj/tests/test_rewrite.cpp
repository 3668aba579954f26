#include "unipotent/derivation.hpp"
#include "unipotent/relations.hpp"

#include <doctest.h>

#include <fstream>
#include <map>
#include <random>
#include <sstream>

using namespace unipotent;

namespace {

Monomial M(const char* s) { return *parse_monomial(s); }
Polynomial P(const char* s) { return Polynomial::parse(s); }
RewriteRule R(const char* l, const char* r) { return RewriteRule(M(l), P(r)); }

std::map<int, std::string> golden_steps() {
    std::ifstream in(std::string(UNIPOTENT_GOLDEN_DIR) + "/derivation_steps.txt");
    std::map<int, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto tab = line.find('\t');
        if (tab != std::string::npos) out[std::stoi(line.substr(0, tab))] = line.substr(tab + 1);
    }
    return out;
}

// Row-echelon basis over Q, kept independent of the library's linear algebra.
class Span {
public:
    void add(std::map<Monomial, mpq_class, MonomialLess> v) {
        reduce_vec(v);
        if (v.empty()) return;
        auto piv = v.begin()->first;
        mpq_class c = v.begin()->second;
        for (auto& [m, x] : v) x /= c;
        rows_.emplace(piv, std::move(v));
    }
    bool contains(std::map<Monomial, mpq_class, MonomialLess> v) const {
        reduce_vec(v);
        return v.empty();
    }
    std::size_t rank() const { return rows_.size(); }

private:
    void reduce_vec(std::map<Monomial, mpq_class, MonomialLess>& v) const {
        while (!v.empty()) {
            bool hit = false;
            for (auto it = v.begin(); it != v.end(); ++it) {
                auto row = rows_.find(it->first);
                if (row == rows_.end()) continue;
                mpq_class c = it->second;
                for (const auto& [m, x] : row->second) {
                    v[m] -= c * x;
                    if (v[m] == 0) v.erase(m);
                }
                hit = true;
                break;
            }
            if (!hit) return;
        }
    }
    std::map<Monomial, std::map<Monomial, mpq_class, MonomialLess>, MonomialLess> rows_;
};

std::map<Monomial, mpq_class, MonomialLess> vec(const Polynomial& p) {
    std::map<Monomial, mpq_class, MonomialLess> v;
    for (const auto& [m, c] : p.terms()) v[m] = c.value();
    return v;
}

}  // namespace

TEST_CASE("rules must decrease") {
    CHECK_THROWS_AS(R("U*V*U", "V*U*V"), std::invalid_argument);
    CHECK_NOTHROW(R("V*U*V", "U*V*U"));
    RewriteSystem s;
    s.add(R("V*U*V", "U*V*U"));
    CHECK_THROWS_AS(s.add(R("V*U*V", "0")), std::invalid_argument);
}

TEST_CASE("head substitution") {
    auto r7 = R("V*U*V^2", "-V^2*U*V");
    CHECK(apply_head(P("V*U*V^2 + U"), r7) == P("-V^2*U*V + U"));
    CHECK(apply_head(P("U*V"), r7) == P("U*V"));
    auto r48 = R("U*V*U^2", "-U^2*V*U");
    CHECK(apply_head(P("3*U*V*U^2"), r48) == P("-3*U^2*V*U"));
    CHECK(apply_head(P("U*V*U^2*V"), r48) == P("U*V*U^2*V"));
}

TEST_CASE("subword substitution") {
    auto r7 = R("V*U*V^2", "-V^2*U*V");
    CHECK(apply_subword(P("U*V*U*V^2"), r7) == P("-U*V^2*U*V"));
    CHECK(apply_subword(P("V*U*V^2"), r7) == P("V*U*V^2"));
    CHECK(apply_subword(P("U*V"), r7) == P("U*V"));
    CHECK(apply_subword(P("V*U^2") * P("U") * P("V"), R("U*V", "U")).is_zero());
}

TEST_CASE("reduction under the table system") {
    const auto& sys = table_system();
    CHECK(reduce(P("V*U*V"), sys) == P("U*V*U - U*V^2 + U^2*V - V^2*U + V*U^2"));
    CHECK(reduce(P("U^2*V*U^2"), sys).is_zero());
    CHECK(reduce(P("0"), sys).is_zero());
    CHECK(reduce(P("U*V*U^2"), sys) == P("-U^2*V*U"));
}

TEST_CASE("printed table reduces to identities") {
    const auto& sys = table_system();
    for (const auto& r : printed_table()) {
        INFO(r.label);
        CHECK(reduce(r.relation(), sys).is_zero());
    }
    for (const auto& r : lemma_relations()) {
        INFO(r.label);
        CHECK(reduce(r.relation(), sys).is_zero());
    }
    for (const auto& r : supplementary_relations()) {
        INFO(r.label);
        CHECK(reduce(r.relation(), sys).is_zero());
    }
}

TEST_CASE("completed table system shape") {
    const auto& sys = table_system();
    CHECK(sys.rules().size() == 14);
    auto nf = normal_form_closure(sys, 2, 7);
    CHECK(nf.size() == 18);
    for (const auto& m : all_monomials(2, 7))
        if (m.total_length() >= 6) CHECK(reduce(Polynomial(m), sys).is_zero());
}

TEST_CASE("five defining relations give the same normal forms") {
    const auto& a = table_system();
    const auto& b = lemma_system();
    CHECK(a.rules() == b.rules());
    for (const auto& m : all_monomials(2, 7)) CHECK(reduce(Polynomial(m), a) == reduce(Polynomial(m), b));
}

TEST_CASE("reduce is idempotent and linear") {
    const auto& sys = table_system();
    std::mt19937 rng(5);
    auto words = all_monomials(2, 7);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int iter = 0; iter < 200; ++iter) {
        Polynomial p, q;
        for (int k = 0; k < 4; ++k) {
            p.add_term(words[pick(rng)], c(rng));
            q.add_term(words[pick(rng)], c(rng));
        }
        Coefficient alpha(c(rng), 2), beta(c(rng), 3);
        auto rp = reduce(p, sys), rq = reduce(q, sys);
        CHECK(reduce(rp, sys) == rp);
        CHECK(reduce(p.scaled(alpha) + q.scaled(beta), sys) == rp.scaled(alpha) + rq.scaled(beta));
    }
}

TEST_CASE("reduction is sound against an ideal-membership oracle") {
    // u(x)^3 for the seven conditioning words, built from (1 + u) products by hand
    Polynomial U = P("U"), V = P("V"), one = P("1");
    auto grp = [&](std::initializer_list<Polynomial> factors) {
        Polynomial g = one;
        for (const auto& f : factors) g = g * (one + f);
        return g - one;
    };
    Polynomial ainv = P("U^2 - U"), binv = P("V^2 - V"), a2 = P("U^2 + 2*U"), b2 = P("V^2 + 2*V");
    std::vector<Polynomial> gens;
    for (const auto& x : {U, V, grp({U, V}), grp({ainv, V}), grp({a2, V}), grp({U, b2}), grp({ainv, binv, U, V})})
        gens.push_back(power(x, 3));
    const int cap = 7;
    Span ideal;
    auto ctx = all_monomials(2, cap - 3);
    for (const auto& g : gens)
        for (const auto& l : ctx)
            for (const auto& r : ctx)
                if (l.total_length() + r.total_length() <= cap - 3)
                    ideal.add(vec(multiply(multiply(Polynomial(l), g), Polynomial(r)).truncated(cap)));
    const auto& sys = table_system();
    for (const auto& w : all_monomials(2, 6)) {
        INFO(w.to_string(2));
        CHECK(ideal.contains(vec(reduce(Polynomial(w), sys) - Polynomial(w))));
    }
    // a sanity check that the oracle is not trivially accepting
    CHECK_FALSE(ideal.contains(vec(P("U*V*U"))));
}

TEST_CASE("derivation replay matches the golden relations") {
    auto golden = golden_steps();
    REQUIRE(golden.size() == 15);
    auto res = derive_cubic_relations(CoefficientRing::z16());
    REQUIRE(res.log.steps.size() == 15);
    for (const auto& step : res.log.steps) {
        INFO("step " << step.id);
        CHECK(step.rule.to_string(2) == golden[step.id]);
    }
    CHECK(res.log.required_inverses == std::set<long>{3});
    CHECK(res.system.rules() == table_system().rules());
    for (const auto& r : lemma_relations()) CHECK(reduce(r.relation(), res.system).is_zero());
    std::vector<Polynomial> only_steps;
    for (const auto& step : res.log.steps) only_steps.push_back(step.rule.relation());
    auto partial = complete_bounded(only_steps, CoefficientRing::z16(), 7);
    CHECK(normal_form_closure(partial, 2, 7).size() == 19);
    CHECK(reduce(P("V^2*U^2*V*U"), partial) == P("V^2*U^2*V*U"));
    auto j = res.log.to_json();
    CHECK(j["steps"][6]["relation"] == "V*U*V^2 = -V^2*U*V");
    CHECK(j["failure"].is_null());
}

TEST_CASE("derivation over Z stops at the division by 3") {
    auto res = replay_derivation(CoefficientRing::integers());
    REQUIRE(res.log.failure);
    CHECK(res.log.failure->step == 7);
    CHECK(res.log.failure->prime == 3);
    CHECK(res.log.steps.size() == 6);
    try {
        derive_cubic_relations(CoefficientRing::integers());
        FAIL("expected InversionRequired");
    } catch (const InversionRequired& e) {
        CHECK(e.prime() == 3);
    }
    auto q = replay_derivation(CoefficientRing::rationals());
    CHECK_FALSE(q.log.failure);
}

TEST_CASE("bad scripts are rejected") {
    auto script = nlohmann::json::parse(R"({"steps": [{"id": 1, "start": {"relation": 9}, "operations": []}]})");
    CHECK_THROWS_AS(replay_derivation(CoefficientRing::z16(), script), std::invalid_argument);
    script = nlohmann::json::parse(R"({"steps": [{"id": 1, "start": {"cube": "U"}, "operations": [{"twist": 1}]}]})");
    CHECK_THROWS(replay_derivation(CoefficientRing::z16(), script));
}

TEST_CASE("local confluence") {
    CHECK(check_local_confluence(table_system(), 7).empty());
    RewriteSystem single;
    single.add(R("U^2*V^2", "V^2*U^2"));
    CHECK(check_local_confluence(single, 7).empty());
    RewriteSystem bad;
    bad.add(R("U*V", "U"));
    bad.add(R("V*U", "V"));
    CHECK_FALSE(check_local_confluence(bad, 7).empty());
    CHECK_THROWS(check_local_confluence(single, 13));
}
