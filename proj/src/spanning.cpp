#include "unipotent/spanning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "unipotent/relations.hpp"
#include "unipotent/rewrite.hpp"
#include "unipotent/ringmodel.hpp"

namespace unipotent {

namespace {

WordSet make_set(char label, int d, const std::set<GroupWord>& words) {
    return {label, d, std::vector<GroupWord>(words.begin(), words.end())};
}

GroupWord y(int g, int e = 1) { return GroupWord::gen(g, e); }

// ---- span reduction -------------------------------------------------------------------------

struct Coeffs {
    Coefficient delta, gamma, epsilon;
};

struct ConditionTable {
    Coeffs a, b;
    std::map<std::pair<int, int>, Coeffs> pair;  // (s, t) -> coefficients of a^s b^t
    Coefficient inv_eps_a, inv_eps_b;
};

Coeffs inverted(const Coeffs& c, const CoefficientRing& ring) {
    Coefficient inv = coeff_div(Coefficient(1), c.epsilon, ring);
    return {-(c.gamma * inv), -(c.delta * inv), inv};
}

ConditionTable table_for(const std::vector<CubicCondition>& conditions, const CoefficientRing& ring) {
    auto find = [&](const char* text) -> Coeffs {
        GroupWord w = GroupWord::parse(text);
        for (const auto& c : conditions)
            if (c.word == w) {
                for (const auto* k : {&c.delta, &c.gamma, &c.epsilon}) ring.require(*k);
                if (c.epsilon.is_zero()) throw std::invalid_argument("condition on " + std::string(text) + " has zero constant term");
                return {c.delta, c.gamma, c.epsilon};
            }
        throw std::invalid_argument("missing cubic condition for " + std::string(text));
    };
    ConditionTable t;
    t.a = find("a");
    t.b = find("b");
    Coeffs ab = find("a*b"), aib = find("a^-1*b");
    t.pair[{1, 1}] = ab;
    t.pair[{-1, 1}] = aib;
    t.pair[{-1, -1}] = inverted(ab, ring);   // a^-1 b^-1 = (ba)^-1, ba conjugate to ab
    t.pair[{1, -1}] = inverted(aib, ring);   // a b^-1 = (b a^-1)^-1, b a^-1 conjugate to a^-1 b
    t.inv_eps_a = coeff_div(Coefficient(1), t.a.epsilon, ring);
    t.inv_eps_b = coeff_div(Coefficient(1), t.b.epsilon, ring);
    return t;
}

using Terms = std::vector<std::pair<Coefficient, GroupWord>>;

struct Measure {
    long b_count = 0, inversions = 0, length = 0;
    auto operator<=>(const Measure&) const = default;
};

Measure measure(const GroupWord& w) {
    Measure m;
    long plus = 0;
    for (const Letter& l : w.letters()) {
        m.length += std::abs(l.exp);
        if (l.gen != 2) continue;
        m.b_count += std::abs(l.exp);
        if (l.exp > 0)
            plus += l.exp;
        else
            m.inversions += plus * -l.exp;
    }
    return m;
}

GroupWord slice(const std::vector<Letter>& ls, std::size_t from, std::size_t to) {
    return GroupWord(std::vector<Letter>(ls.begin() + static_cast<long>(from), ls.begin() + static_cast<long>(to)));
}

// One rewrite of w, or nullopt when w is irreducible.
std::optional<Terms> rewrite_once(const GroupWord& w, const ConditionTable& t) {
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const Letter& l = ls[i];
        if (std::abs(l.exp) < 2) continue;
        const Coeffs& c = l.gen == 1 ? t.a : t.b;
        const Coefficient& inv_eps = l.gen == 1 ? t.inv_eps_a : t.inv_eps_b;
        const int s = l.exp > 0 ? 1 : -1;
        GroupWord pre = slice(ls, 0, i), post = y(l.gen, l.exp - 2 * s) * slice(ls, i + 1, ls.size());
        Terms out;
        if (s > 0) {  // x^2 = eps x^-1 + delta x + gamma
            out = {{c.epsilon, pre * y(l.gen, -1) * post}, {c.delta, pre * y(l.gen) * post}, {c.gamma, pre * post}};
        } else {      // x^-2 = eps^-1 (x - delta - gamma x^-1)
            out = {{inv_eps, pre * y(l.gen) * post},
                   {-(c.delta * inv_eps), pre * post},
                   {-(c.gamma * inv_eps), pre * y(l.gen, -1) * post}};
        }
        return out;
    }
    for (std::size_t i = 0; i + 2 < ls.size(); ++i) {
        if (ls[i].gen != 2 || ls[i + 1].gen != 1 || ls[i + 2].gen != 2) continue;
        const int t1 = ls[i].exp, s = ls[i + 1].exp, t2 = ls[i + 2].exp;
        GroupWord pre = slice(ls, 0, i), post = slice(ls, i + 3, ls.size());
        const Coeffs& x = t.pair.at({s, t1 > 0 ? 1 : -1});
        if (t1 == t2) {  // b^t a^s b^t = eps a^-s b^-t a^-s + delta b^t + gamma a^-s
            return Terms{{x.epsilon, pre * y(1, -s) * y(2, -t1) * y(1, -s) * post},
                         {x.delta, pre * y(2, t1) * post},
                         {x.gamma, pre * y(1, -s) * post}};
        }
        if (t1 == 1 && t2 == -1) {  // b a^s b^-1 through b^-1 = eps_b^-1 (b^2 - delta_b b - gamma_b)
            const Coeffs& b = t.b;
            const Coefficient& k = t.inv_eps_b;
            return Terms{{k * x.epsilon, pre * y(1, -s) * y(2, -1) * y(1, -s) * y(2) * post},
                         {k * x.delta * b.epsilon, pre * y(2, -1) * post},
                         {k * x.delta * b.gamma, pre * post},
                         {k * x.gamma, pre * y(1, -s) * y(2) * post},
                         {-(k * b.delta * x.epsilon), pre * y(1, -s) * y(2, -1) * y(1, -s) * post},
                         {-(k * b.delta * x.gamma), pre * y(1, -s) * post},
                         {-(k * b.gamma), pre * y(2) * y(1, s) * post}};
        }
    }
    return std::nullopt;
}

}  // namespace

bool WordSet::contains(const GroupWord& w) const { return std::binary_search(elements.begin(), elements.end(), w); }

std::string WordSet::to_text() const {
    std::string out;
    for (const auto& w : elements) out += w.to_string(d <= 2) + "\n";
    return out;
}

EMSets build_EM(int d) {
    if (d < 1 || d > kMaxExplicitM) throw std::invalid_argument("explicit E_d, M_d need 1 <= d <= 3");
    std::set<GroupWord> e{y(1)}, m{GroupWord(), y(1), y(1, -1)};
    for (int s = 1; s < d; ++s) {
        const GroupWord up = y(s + 1), down = y(s + 1, -1);
        std::set<GroupWord> e2 = e, m2 = m;
        for (const auto& x : m) {
            e2.insert(x * up);
            e2.insert(x * down);
            for (const auto& z : m) {
                m2.insert(x * up * z);
                m2.insert(x * down * z);
                for (const auto& w : m)
                    if (!w.empty()) m2.insert(x * down * w * up * z);
            }
        }
        e = std::move(e2);
        m = std::move(m2);
    }
    return {make_set('E', d, e), make_set('M', d, m)};
}

WordSet build_E(int d) {
    if (d < 1 || d > kMaxExplicitE) throw std::invalid_argument("explicit E_d needs 1 <= d <= 4");
    if (d <= kMaxExplicitM) return build_EM(d).E;
    EMSets prev = build_EM(d - 1);
    std::set<GroupWord> e(prev.E.elements.begin(), prev.E.elements.end());
    for (const auto& x : prev.M.elements) {
        e.insert(x * y(d));
        e.insert(x * y(d, -1));
    }
    return make_set('E', d, e);
}

GroupWord conjugacy_inverse_class(const GroupWord& w) {
    GroupWord best;
    bool first = true;
    for (GroupWord v : {w, w.inverse()}) {
        // cyclically reduce
        auto ls = v.letters();
        while (ls.size() > 1 && ls.front().gen == ls.back().gen) {
            int e = ls.front().exp + ls.back().exp;
            ls.pop_back();
            if (e == 0)
                ls.erase(ls.begin());
            else
                ls.front().exp = e;
        }
        for (std::size_t r = 0; r < std::max<std::size_t>(ls.size(), 1); ++r) {
            std::vector<Letter> rot(ls.begin() + static_cast<long>(r), ls.end());
            rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<long>(r));
            GroupWord c(rot);
            if (first || c < best) best = c;
            first = false;
        }
    }
    return best;
}

bool abelian_primitive(const GroupWord& w, int d) {
    int g = 0;
    for (int x : w.exponent_sums(d)) g = std::gcd(g, x);
    return g == 1;
}

BoundReport cardinality_bound(int d) {
    if (d < 2) throw std::invalid_argument("the bound starts at d = 2");
    BoundReport r;
    r.d = d;
    r.bound = 39;
    for (int s = 2; s < d; ++s) r.bound = r.bound + r.bound * r.bound + r.bound * r.bound * r.bound;
    mpz_class three_pow;
    mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(d - 2));
    r.log3_limit = 4 * three_pow;
    mpz_class limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 3, r.log3_limit.get_ui());
    r.within_limit = r.bound <= limit;
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, r.bound.get_mpz_t());
    r.log3 = (std::log(mant) + static_cast<double>(exp2) * std::log(2.0)) / std::log(3.0);
    long dd = d;
    r.burnside_exponent = dd + dd * (dd - 1) / 2 + dd * (dd - 1) * (dd - 2) / 6;
    mpz_class burnside;
    mpz_ui_pow_ui(burnside.get_mpz_t(), 3, static_cast<unsigned long>(r.burnside_exponent));
    r.burnside_below = burnside <= r.bound;
    return r;
}

std::vector<CubicCondition> unipotent_conditions() {
    std::vector<CubicCondition> out;
    for (const char* w : {"a", "b", "a*b", "a^-1*b"}) out.push_back({GroupWord::parse(w), 3, -3, 1});
    return out;
}

bool in_M2(const GroupWord& w) {
    const auto& ls = w.letters();
    for (const auto& l : ls)
        if (std::abs(l.exp) != 1 || l.gen > 2) return false;
    std::size_t i = 0, n = ls.size();
    if (i < n && ls[i].gen == 1) ++i;
    if (i < n && ls[i].gen == 2) {
        if (i + 2 < n && ls[i + 1].gen == 1 && ls[i + 2].gen == 2) {
            if (ls[i].exp != -1 || ls[i + 2].exp != 1) return false;
            i += 3;
        } else {
            ++i;
        }
        if (i < n && ls[i].gen == 1) ++i;
    }
    return i == n;
}

SpanReduction span_reduce_d2(const GroupWord& w, const std::vector<CubicCondition>& conditions,
                             const CoefficientRing& ring) {
    if (w.max_gen() > 2) throw std::invalid_argument("span reduction is for words in a, b");
    const ConditionTable table = table_for(conditions, ring);
    SpanReduction out;
    GroupCombination pending{{w, Coefficient(1)}};
    while (!pending.empty()) {
        auto it = pending.begin();
        GroupWord word = it->first;
        Coefficient c = it->second;
        pending.erase(it);
        if (c.is_zero()) continue;
        auto terms = rewrite_once(word, table);
        if (!terms) {
            if (!in_M2(word)) throw std::logic_error("irreducible word outside M_2: " + word.to_string(true));
            Coefficient& slot = out.result[word];
            slot += c;
            if (slot.is_zero()) out.result.erase(word);
            continue;
        }
        if (++out.steps > kDefaultStepBudget) throw StepBudgetExceeded("span reduction exceeded its step budget");
        const Measure before = measure(word);
        for (const auto& [k, v] : *terms) {
            if (k.is_zero()) continue;
            if (!(measure(v) < before) && !in_M2(v))
                throw std::logic_error("span reduction measure did not drop at " + word.to_string(true));
            Coefficient& slot = pending[v];
            slot += c * k;
        }
    }
    return out;
}

QMatrix evaluate_combination(const GroupCombination& c, const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.rows(), a.cols());
    for (const auto& [w, k] : c) {
        QMatrix m = matrix_of_word(w, a, b);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (sgn(m.at(i, j)) != 0) out.at(i, j) += k.value() * m.at(i, j);
    }
    return out;
}

GroupWord leading_word(const Monomial& m) {
    std::vector<Letter> ls;
    for (const Syllable& s : m.syllables()) ls.push_back({s.gen, s.exp == 1 ? 1 : -1});
    return GroupWord(ls);
}

std::vector<GroupWord> initial_segments(const GroupWord& w) {
    std::vector<GroupWord> out;
    std::vector<Letter> acc;
    for (const Letter& l : w.letters()) {
        const int s = l.exp > 0 ? 1 : -1;
        for (int k = 0; k < std::abs(l.exp); ++k) {
            if (k == 0)
                acc.push_back({l.gen, s});
            else
                acc.back().exp += s;
            out.emplace_back(acc);
        }
    }
    return out;
}

std::vector<Monomial> build_W(int d) {
    if (d < 1 || d > 3) throw std::invalid_argument("W_d is built for 1 <= d <= 3");
    auto mono = [](std::vector<Syllable> s) { return *Monomial::from_syllables(s, 2); };
    std::set<Monomial, MonomialLess> w{mono({{1, 1}}), mono({{1, 2}})};
    for (int k = 1; k < d; ++k) {
        const Monomial v1 = mono({{k + 1, 1}}), v2 = mono({{k + 1, 2}});
        auto cat = [](std::initializer_list<Monomial> parts) {
            std::vector<Syllable> s;
            for (const auto& p : parts) s.insert(s.end(), p.syllables().begin(), p.syllables().end());
            return *Monomial::from_syllables(s, 2);
        };
        std::set<Monomial, MonomialLess> next = w;
        for (const auto& v : {v1, v2}) {
            next.insert(v);
            for (const auto& x : w) {
                next.insert(cat({x, v}));
                next.insert(cat({v, x}));
            }
        }
        for (const auto& x : w) {
            next.insert(cat({v2, x, v1}));
            for (const auto& z : w) {
                next.insert(cat({v2, x, v1, z}));
                next.insert(cat({x, v2, z, v1}));
                for (const auto& t : w) next.insert(cat({x, v2, z, v1, t}));
            }
        }
        w = std::move(next);
    }
    return {w.begin(), w.end()};
}

WordSet closure_P(int d) {
    WordSet p = build_P(d - 1 < 1 ? 0 : d - 1);
    std::set<GroupWord> out;
    std::vector<GroupWord> seeds = p.elements;
    for (const auto& m : build_W(d)) seeds.push_back(leading_word(m));
    for (const auto& s : seeds)
        for (const auto& seg : initial_segments(s)) out.insert(seg);
    return make_set('P', d, out);
}

WordSet build_P(int d) {
    if (d < 0 || d > 3) throw std::invalid_argument("P_{d+1} is built for 0 <= d <= 3");
    if (d == 0) return make_set('P', 1, {y(1)});
    if (d == 1) {
        std::set<GroupWord> p;
        for (const char* w : {"y1", "y2", "y1*y2", "y1^-1*y2", "y1^2*y2", "y1*y2^2", "[y1,y2]"})
            p.insert(GroupWord::parse(w));
        return make_set('P', 2, p);
    }
    WordSet tilde = closure_P(d);
    const GroupWord v = y(d + 1), v2 = y(d + 1, 2);
    std::set<GroupWord> out(tilde.elements.begin(), tilde.elements.end());
    out.insert(v);
    for (const auto& h : tilde.elements) {
        out.insert(h * v);
        out.insert(h.inverse() * v);
        out.insert(h * v2);
        out.insert(h * h * v);
    }
    return make_set('P', d + 1, out);
}

PropagationVerdict nilpotency_propagation(std::size_t rho, const Monomial& w, int top) {
    PropagationVerdict v;
    for (const Syllable& s : w.syllables())
        if (s.gen != top) v.free_length += static_cast<std::size_t>(s.exp);
    v.threshold = 3 * rho;
    v.pigeonhole = (v.free_length + 2) / 3;
    v.vanishes = v.free_length > 0 && v.free_length >= v.threshold;
    return v;
}

Polynomial substituted_square() {
    return reduce(power(Polynomial::parse("U + V + U*V"), 2), table_system());
}

Polynomial vu1u2v_expansion() {
    // VUV = UVU - UV^2 + U^2V - V^2U + VU^2 with U = U1, V = U2
    const Polynomial rel = Polynomial::parse("V*U*V - U*V*U + U*V^2 - U^2*V + V^2*U - V*U^2");
    const Polynomial v = Polynomial::parse("U3");
    const Polynomial x = Polynomial::parse("U1 + U2 + U1*U2");
    const Polynomial x2 = Polynomial::parse("U2^2*U1^2 - U2^2*U1 + U2^2 - U2*U1^2 + U1*U2 + U2*U1 + U1^2");
    Polynomial image = substitute(rel, {{1, x}, {2, v}}, {{1, x2}});
    Polynomial copy1 = substitute(rel, {{1, Polynomial::parse("U1")}, {2, v}});
    Polynomial copy2 = substitute(rel, {{1, Polynomial::parse("U2")}, {2, v}});
    Polynomial rest = image - copy1 - copy2;
    const Monomial target = *parse_monomial("U3*U1*U2*U3");
    if (!(rest.coeff(target) == Coefficient(1))) throw std::logic_error("V U1 U2 V does not appear once");
    return Polynomial(target) - rest;
}

FamilyReport verify_v_mu_v(int max_len) {
    FamilyReport r;
    const auto& sys = table_system();
    const Polynomial v = Polynomial::parse("V"), v2 = Polynomial::parse("V^2");
    for (const auto& m : all_monomials(2, max_len, 2)) {
        Polynomial mu(m);
        ++r.checked;
        if (!reduce(v2 * mu * v2, sys).is_zero()) r.failures.push_back("V^2*" + m.to_string(2) + "*V^2");
        if (m.max_gen() > 1) continue;
        ++r.checked;
        if (!reduce(v * mu * v2 + v2 * mu * v, sys).is_zero()) r.failures.push_back("V*" + m.to_string(2) + "*V^2");
    }
    return r;
}

nlohmann::json spanning_em_report(int d) {
    nlohmann::json j;
    j["d"] = d;
    EMSets sets = build_EM(std::min(d, kMaxExplicitM));
    WordSet e = d <= kMaxExplicitM ? sets.E : build_E(d);
    j["E_size"] = e.elements.size();
    std::set<GroupWord> classes;
    bool primitive = true;
    for (const auto& w : e.elements) {
        classes.insert(conjugacy_inverse_class(w));
        primitive = primitive && abelian_primitive(w, d);
    }
    j["E_classes"] = classes.size();
    j["E_primitive"] = primitive;
    if (d <= kMaxExplicitM) j["M_size"] = sets.M.elements.size();
    if (d == 2) {
        nlohmann::json names = nlohmann::json::array();
        for (const auto& c : classes) names.push_back(c.to_string(true));
        j["E_class_representatives"] = names;
    }
    return j;
}

nlohmann::json spanning_bound_report(int d) {
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 2; k <= d; ++k) {
        BoundReport b = cardinality_bound(k);
        nlohmann::json row{{"d", k},
                           {"log3_bound", b.log3},
                           {"log3_limit", b.log3_limit.get_str()},
                           {"within_limit", b.within_limit},
                           {"burnside_exponent", b.burnside_exponent},
                           {"burnside_below", b.burnside_below}};
        if (b.bound < mpz_class("1000000000000000000")) row["bound"] = b.bound.get_str();
        rows.push_back(row);
    }
    return {{"d", d}, {"bounds", rows}};
}

nlohmann::json spanning_pw_report(int d) {
    nlohmann::json j;
    j["d"] = d;
    j["W_size"] = build_W(d).size();
    j["P_size"] = build_P(d - 1).elements.size();
    if (d >= 1) j["P_closure_size"] = closure_P(d).elements.size();
    if (d <= 2) j["P_next_size"] = build_P(d).elements.size();
    return j;
}

}  // namespace unipotent
