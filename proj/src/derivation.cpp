#include "unipotent/derivation.hpp"

#include "unipotent/relations.hpp"

#include <map>

namespace unipotent {

namespace {

constexpr const char* kScript = R"json({"steps": [
  {"id": 1,  "start": {"cube": "U*V + U + V"}, "operations": []},
  {"id": 2,  "start": {"relation": 1}, "operations": [{"mulR": "V^2"}, {"subword": 1}, {"head": 1}]},
  {"id": 3,  "start": {"relation": 2}, "operations": [{"mulR": "U^2"}, {"subword": 2}, {"head": 2}]},
  {"id": 4,  "start": {"relation": 3}, "operations": [{"mulL": "U^2"}, {"subword": 3}, {"head": 3}]},
  {"id": 5,  "start": {"relation": 4}, "operations": [{"subst": {"U": "U^2 - U"}}]},
  {"id": 6,  "start": {"relation": 4}, "operations": [{"subst": {"V": "V^2 - V"}}]},
  {"id": 7,  "start": {"relation": 4}, "operations": [{"subst": {"V": "V^2 + 2*V"}}, {"head": 6}, {"head": 4}, {"scale": "1/3"}]},
  {"id": 8,  "start": {"relation": 7}, "operations": [{"mulR": "V"}]},
  {"id": 9,  "start": {"relation": 7}, "operations": [{"subst": {"U": "V", "V": "U"}}]},
  {"id": 10, "start": {"relation": 8}, "operations": [{"subst": {"U": "V", "V": "U"}}]},
  {"id": 11, "start": {"relation": 6}, "operations": [{"head": 10}, {"head": 9}, {"head": 8}, {"head": 7}]},
  {"id": 12, "start": {"relation": 5}, "operations": [{"head": 11}]},
  {"id": 13, "start": {"relation": 11}, "operations": [{"mulR": "V"}, {"head": 12}, {"head": 7}, {"head": 3}, {"head": 11}]},
  {"id": 14, "start": {"relation": 13}, "operations": [{"mulR": "U"}, {"subword": 13}, {"head": 9}]},
  {"id": 15, "start": {"relation": 14}, "operations": [{"mulL": "U"}]}
]})json";

int generator_index(const std::string& name) {
    auto m = parse_monomial(name);
    if (!m || m->syllable_length() != 1 || m->syllables()[0].exp != 1)
        throw std::invalid_argument("substitution key '" + name + "' is not a generator");
    return m->syllables()[0].gen;
}

void note_primes(std::set<long>& acc, const mpz_class& n) {
    mpz_class a = abs(n);
    if (a > 1)
        for (long p : prime_factors(a)) acc.insert(p);
}

}  // namespace

const nlohmann::json& default_derivation_script() {
    static const nlohmann::json script = nlohmann::json::parse(kScript);
    return script;
}

const DerivationStep* DerivationLog::step(int id) const {
    for (const auto& s : steps)
        if (s.id == id) return &s;
    return nullptr;
}

nlohmann::json DerivationLog::to_json() const {
    nlohmann::json j;
    j["ring"] = ring.name();
    j["required_inverses"] = std::vector<long>(required_inverses.begin(), required_inverses.end());
    j["steps"] = nlohmann::json::array();
    for (const auto& s : steps)
        j["steps"].push_back({{"id", s.id}, {"operations", s.operations}, {"relation", s.rule.to_string(2)}});
    if (failure)
        j["failure"] = {{"step", failure->step}, {"error", "InversionRequired"}, {"prime", failure->prime}};
    else
        j["failure"] = nullptr;
    return j;
}

DerivationResult replay_derivation(const CoefficientRing& ring, const nlohmann::json& script) {
    DerivationResult result;
    result.log.ring = ring;
    result.system = RewriteSystem(ring);
    std::map<int, RewriteRule> derived;
    auto lookup = [&](int id) -> const RewriteRule& {
        auto it = derived.find(id);
        if (it == derived.end()) throw std::invalid_argument("script refers to unknown relation " + std::to_string(id));
        return it->second;
    };

    for (const auto& step : script.at("steps")) {
        const int id = step.at("id").get<int>();
        std::vector<std::string> ops;
        try {
            Polynomial q;
            const auto& start = step.at("start");
            if (start.contains("cube")) {
                q = power(Polynomial::parse(start.at("cube").get<std::string>()), 3);
                ops.push_back("cube(" + start.at("cube").get<std::string>() + ")");
            } else {
                q = lookup(start.at("relation").get<int>()).relation();
                ops.push_back("relation(" + std::to_string(start.at("relation").get<int>()) + ")");
            }
            for (const auto& op : step.at("operations")) {
                const auto& [name, arg] = *op.items().begin();
                if (name == "mulL") {
                    q = Polynomial::parse(arg.get<std::string>()) * q;
                    ops.push_back("mulL(" + arg.get<std::string>() + ")");
                } else if (name == "mulR") {
                    q = q * Polynomial::parse(arg.get<std::string>());
                    ops.push_back("mulR(" + arg.get<std::string>() + ")");
                } else if (name == "subst") {
                    std::map<int, Polynomial> images;
                    std::string desc;
                    for (const auto& [k, v] : arg.items()) {
                        images[generator_index(k)] = Polynomial::parse(v.get<std::string>());
                        desc += (desc.empty() ? "" : ", ") + k + " -> " + v.get<std::string>();
                    }
                    q = substitute(q, images);
                    ops.push_back("subst(" + desc + ")");
                } else if (name == "head") {
                    q = apply_head(q, lookup(arg.get<int>()));
                    ops.push_back("head(" + std::to_string(arg.get<int>()) + ")");
                } else if (name == "subword") {
                    q = apply_subword(q, lookup(arg.get<int>()));
                    ops.push_back("subword(" + std::to_string(arg.get<int>()) + ")");
                } else if (name == "scale") {
                    Coefficient s = Coefficient::parse(arg.get<std::string>());
                    // deducing x = 0 from n*x = 0 is only sound when 1/n exists
                    ring.require(s);
                    note_primes(result.log.required_inverses, s.denominator());
                    q = q.scaled(s);
                    ops.push_back("scale(" + arg.get<std::string>() + ")");
                } else {
                    throw std::invalid_argument("unknown derivation operation '" + name + "'");
                }
            }
            if (q.is_zero()) throw std::runtime_error("derivation step " + std::to_string(id) + " collapsed to 0 = 0");
            Coefficient lead = q.coeff(q.leading());
            note_primes(result.log.required_inverses, lead.numerator());
            RewriteRule rule = RewriteRule::orient(q, ring);
            derived.insert_or_assign(id, rule);
            result.log.steps.push_back({id, std::move(rule), std::move(ops)});
        } catch (const InversionRequired& e) {
            result.log.failure = DerivationFailure{id, e.prime()};
            return result;
        }
    }
    std::vector<Polynomial> rels;
    for (const auto& s : result.log.steps) rels.push_back(s.rule.relation());
    // the derived steps leave V^2*U^2*V*U alive; the stated length-6 identities close the gap
    for (const auto& r : supplementary_relations()) rels.push_back(r.relation());
    result.system = complete_bounded(rels, ring, 7);
    for (long p : result.log.required_inverses) result.system.note_inverse(p);
    return result;
}

DerivationResult derive_cubic_relations(const CoefficientRing& ring, const nlohmann::json& script) {
    DerivationResult r = replay_derivation(ring, script);
    if (r.log.failure) throw InversionRequired(r.log.failure->prime);
    return r;
}

}  // namespace unipotent
