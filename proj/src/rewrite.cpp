#include "unipotent/rewrite.hpp"

#include <algorithm>
#include <deque>

namespace unipotent {

RewriteRule::RewriteRule(Monomial lhs, Polynomial rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
    for (const auto& [m, c] : rhs_.terms())
        if (compare_monomials(m, lhs_) >= 0)
            throw std::invalid_argument("rule " + lhs_.to_string(2) + " -> " + rhs_.to_string() +
                                        " is not decreasing at " + m.to_string(2));
}

RewriteRule RewriteRule::orient(const Polynomial& relation, const CoefficientRing& ring) {
    if (relation.is_zero()) throw std::invalid_argument("cannot orient the zero relation");
    const Monomial lead = relation.leading();
    Coefficient c = relation.coeff(lead);
    Coefficient inv = coeff_div(Coefficient(1), c, ring);
    Polynomial rest = relation;
    rest.add_term(lead, -c);
    Polynomial rhs = rest.scaled(-inv);
    for (const auto& [m, v] : rhs.terms()) ring.require(v);
    return RewriteRule(lead, std::move(rhs));
}

Polynomial RewriteRule::relation() const { return Polynomial(lhs_) - rhs_; }

std::string RewriteRule::to_string(int d) const { return lhs_.to_string(d) + " = " + rhs_.to_string(d); }

RewriteSystem::RewriteSystem(std::vector<RewriteRule> rules, CoefficientRing ring) : ring_(std::move(ring)) {
    for (auto& r : rules) add(std::move(r));
}

void RewriteSystem::add(RewriteRule rule) {
    if (find(rule.lhs())) throw std::invalid_argument("duplicate rule head " + rule.lhs().to_string(2));
    rules_.push_back(std::move(rule));
}

const RewriteRule* RewriteSystem::find(const Monomial& lhs) const {
    for (const auto& r : rules_)
        if (r.lhs() == lhs) return &r;
    return nullptr;
}

namespace {

Polynomial sandwich(const Monomial& left, const Polynomial& mid, const Monomial& right, const Coefficient& c) {
    return multiply(multiply(Polynomial(left, c), mid), Polynomial(right));
}

std::vector<int> letters(const Monomial& m) {
    std::vector<int> out;
    for (const auto& s : m.syllables())
        for (int k = 0; k < s.exp; ++k) out.push_back(s.gen);
    return out;
}

std::optional<Monomial> from_letters(const std::vector<int>& ls) {
    std::vector<Syllable> syl;
    syl.reserve(ls.size());
    for (int g : ls) syl.push_back({g, 1});
    return Monomial::from_syllables(syl, 2);
}

}  // namespace

Polynomial apply_head(const Polynomial& q, const RewriteRule& rule) {
    Coefficient c = q.coeff(rule.lhs());
    if (c.is_zero()) return q;
    Polynomial out = q;
    out.add_term(rule.lhs(), -c);
    return out + rule.rhs().scaled(c);
}

Polynomial apply_subword(const Polynomial& q, const RewriteRule& rule) {
    Polynomial out;
    for (const auto& [m, c] : q.terms()) {
        bool done = false;
        for (const Occurrence& occ : find_factor(m, rule.lhs())) {
            if (occ.left.empty() && occ.right.empty()) continue;
            out += sandwich(occ.left, rule.rhs(), occ.right, c);
            done = true;
            break;
        }
        if (!done) out.add_term(m, c);
    }
    return out;
}

Polynomial reduce(const Polynomial& p, const RewriteSystem& system, std::size_t budget) {
    Polynomial cur = p;
    for (std::size_t steps = 0;; ++steps) {
        if (steps > budget) throw StepBudgetExceeded("reduction exceeded step budget");
        bool hit = false;
        for (const auto& [m, c] : cur.terms()) {
            for (const auto& rule : system.rules()) {
                if (auto occ = find_exact(m, rule.lhs())) {
                    Monomial word = m;
                    Coefficient coef = c;
                    cur.add_term(word, -coef);
                    cur += sandwich(occ->left, rule.rhs(), occ->right, coef);
                    hit = true;
                    break;
                }
            }
            if (hit) break;
        }
        if (!hit) return cur;
    }
}

std::vector<Monomial> critical_words(const RewriteSystem& system, int cap) {
    std::set<Monomial, MonomialLess> words;
    int d = 0;
    for (const auto& r : system.rules()) d = std::max(d, std::max(r.lhs().max_gen(), r.rhs().max_gen()));
    auto keep = [&](const std::vector<int>& ls) {
        if (static_cast<int>(ls.size()) > cap) return;
        if (auto m = from_letters(ls)) words.insert(*m);
    };
    for (const auto& r1 : system.rules()) {
        const auto a = letters(r1.lhs());
        keep(a);
        for (int x = 1; x <= d; ++x) {
            if (a.front() == x) {
                auto w = a;
                w.insert(w.begin(), x);
                keep(w);
                if (a.back() == x) {
                    w.push_back(x);
                    keep(w);
                }
            }
            if (a.back() == x) {
                auto w = a;
                w.push_back(x);
                keep(w);
            }
        }
        for (const auto& r2 : system.rules()) {
            const auto b = letters(r2.lhs());
            for (std::size_t t = 1; t < std::min(a.size(), b.size()); ++t) {
                if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(t), a.end(), b.begin())) continue;
                auto w = a;
                w.insert(w.end(), b.begin() + static_cast<std::ptrdiff_t>(t), b.end());
                keep(w);
            }
        }
    }
    return {words.begin(), words.end()};
}

std::vector<Polynomial> one_step_rewrites(const Monomial& word, const RewriteSystem& system) {
    std::vector<Polynomial> out;
    for (const auto& rule : system.rules())
        for (const Occurrence& occ : find_factor(word, rule.lhs()))
            out.push_back(sandwich(occ.left, rule.rhs(), occ.right, 1));
    return out;
}

std::vector<CriticalPairFailure> check_local_confluence(const RewriteSystem& system, int max_total_length) {
    if (max_total_length > 12) throw std::invalid_argument("confluence check is capped at total length 12");
    std::vector<CriticalPairFailure> failures;
    for (const Monomial& w : critical_words(system, max_total_length)) {
        Polynomial base = reduce(Polynomial(w), system);
        for (const Polynomial& r : one_step_rewrites(w, system)) {
            Polynomial nf = reduce(r, system);
            if (nf != base) failures.push_back({w, base, nf});
        }
    }
    return failures;
}

RewriteSystem complete_bounded(const std::vector<Polynomial>& relations, const CoefficientRing& ring, int cap) {
    int d = 0;
    for (const auto& p : relations) d = std::max(d, p.max_gen());
    std::vector<Monomial> alphabet;
    for (int g = 1; g <= d; ++g)
        for (int e = 1; e <= 2; ++e) alphabet.push_back(Monomial::letter(g, e));

    RewriteSystem sys(ring);
    std::deque<Polynomial> pending(relations.begin(), relations.end());
    for (;;) {
        while (!pending.empty()) {
            Polynomial p = reduce(pending.front(), sys);
            pending.pop_front();
            if (p.is_zero()) continue;
            RewriteRule rule = RewriteRule::orient(p, ring);
            std::vector<RewriteRule> kept;
            for (const auto& old : sys.rules()) {
                if (find_exact(old.lhs(), rule.lhs()))
                    pending.push_back(old.relation());
                else
                    kept.push_back(old);
            }
            kept.push_back(std::move(rule));
            sys = RewriteSystem(std::move(kept), ring);
        }
        std::vector<RewriteRule> inter;
        for (const auto& r : sys.rules()) inter.emplace_back(r.lhs(), reduce(r.rhs(), sys));
        std::sort(inter.begin(), inter.end(),
                  [](const RewriteRule& x, const RewriteRule& y) { return compare_monomials(x.lhs(), y.lhs()) < 0; });
        sys = RewriteSystem(std::move(inter), ring);

        for (const auto& r : sys.rules()) {
            if (r.lhs().total_length() > cap) continue;
            Polynomial rel = r.relation();
            for (const auto& x : alphabet) {
                for (Polynomial q : {multiply(Polynomial(x), rel), multiply(rel, Polynomial(x))}) {
                    q = reduce(q, sys);
                    if (!q.is_zero()) pending.push_back(std::move(q));
                }
            }
        }
        for (const Monomial& w : critical_words(sys, cap)) {
            Polynomial base = reduce(Polynomial(w), sys);
            for (const Polynomial& r : one_step_rewrites(w, sys)) {
                Polynomial diff = reduce(r, sys) - base;
                if (!diff.is_zero()) pending.push_back(std::move(diff));
            }
        }
        if (pending.empty()) return sys;
    }
}

std::vector<Monomial> normal_form_closure(const RewriteSystem& system, int d, int max_len) {
    std::set<Monomial, MonomialLess> seen;
    for (const Monomial& w : all_monomials(d, max_len)) {
        Polynomial nf = reduce(Polynomial(w), system);
        for (const auto& [m, c] : nf.terms()) seen.insert(m);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace unipotent
