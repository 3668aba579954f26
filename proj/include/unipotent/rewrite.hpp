// Oriented rules, normal forms, and bounded completion / confluence checks.
#pragma once

#include "unipotent/coeff.hpp"
#include "unipotent/polynomial.hpp"

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace unipotent {

class RewriteRule {
public:
    /// Throws std::invalid_argument unless every rhs monomial is smaller than lhs.
    RewriteRule(Monomial lhs, Polynomial rhs);

    /// Turns the relation p = 0 into "leading monomial -> rest / (-leading coefficient)".
    /// Dividing by the leading coefficient needs its inverse in the ring.
    static RewriteRule orient(const Polynomial& relation, const CoefficientRing& ring);

    const Monomial& lhs() const noexcept { return lhs_; }
    const Polynomial& rhs() const noexcept { return rhs_; }
    /// lhs - rhs
    Polynomial relation() const;
    std::string to_string(int d = 2) const;

    friend bool operator==(const RewriteRule&, const RewriteRule&) = default;

private:
    Monomial lhs_;
    Polynomial rhs_;
};

class StepBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RewriteSystem {
public:
    explicit RewriteSystem(CoefficientRing ring = CoefficientRing::z16()) : ring_(std::move(ring)) {}
    RewriteSystem(std::vector<RewriteRule> rules, CoefficientRing ring);

    /// Throws std::invalid_argument if a rule with the same lhs exists.
    void add(RewriteRule rule);
    const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
    const CoefficientRing& ring() const noexcept { return ring_; }
    const std::set<long>& required_inverses() const noexcept { return required_inverses_; }
    void note_inverse(long prime) { required_inverses_.insert(prime); }
    const RewriteRule* find(const Monomial& lhs) const;

private:
    std::vector<RewriteRule> rules_;
    CoefficientRing ring_;
    std::set<long> required_inverses_;
};

/// Replaces every term whose monomial equals rule.lhs.
Polynomial apply_head(const Polynomial& q, const RewriteRule& rule);
/// One pass: in each term the leftmost proper factor occurrence of rule.lhs is replaced.
Polynomial apply_subword(const Polynomial& q, const RewriteRule& rule);

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

/// Normal form: repeatedly rewrite the largest reducible term with the first matching rule
/// (syllable-exact, leftmost occurrence).
Polynomial reduce(const Polynomial& p, const RewriteSystem& system, std::size_t budget = kDefaultStepBudget);

/// Words built from overlaps, inclusions and letter merges of the rule heads, with total length <= cap.
std::vector<Monomial> critical_words(const RewriteSystem& system, int cap);

/// All one-step rewrites of word, using free-algebra factor occurrences of each lhs.
std::vector<Polynomial> one_step_rewrites(const Monomial& word, const RewriteSystem& system);

struct CriticalPairFailure {
    Monomial word;
    Polynomial first;
    Polynomial second;
};

std::vector<CriticalPairFailure> check_local_confluence(const RewriteSystem& system, int max_total_length);

/// Bounded completion: consequences of rules with lhs length <= cap are fed back until stable.
/// Returns the rules sorted by lhs.
RewriteSystem complete_bounded(const std::vector<Polynomial>& relations, const CoefficientRing& ring, int cap = 7);

/// Distinct monomials occurring in normal forms of all words of total length <= max_len.
std::vector<Monomial> normal_form_closure(const RewriteSystem& system, int d, int max_len);

}  // namespace unipotent
