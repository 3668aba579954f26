// Scripted replay of the cubic-relation derivation.
#pragma once

#include "unipotent/rewrite.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace unipotent {

struct DerivationStep {
    int id = 0;
    RewriteRule rule;
    std::vector<std::string> operations;
};

struct DerivationFailure {
    int step = 0;
    long prime = 0;
};

struct DerivationLog {
    CoefficientRing ring = CoefficientRing::z16();
    std::vector<DerivationStep> steps;
    std::set<long> required_inverses;
    std::optional<DerivationFailure> failure;

    nlohmann::json to_json() const;
    const DerivationStep* step(int id) const;
};

struct DerivationResult {
    DerivationLog log;
    /// Bounded completion of the derived relations together with the supplementary
    /// length-6 identities; empty when the replay failed.
    RewriteSystem system;
};

/// The built-in script. Each step is {"id", "start", "operations"} where start is
/// {"cube": poly} or {"relation": id} and operations are {"mulL": poly}, {"mulR": poly},
/// {"subst": {gen: poly}}, {"head": id}, {"subword": id}, {"scale": "p/q"}.
const nlohmann::json& default_derivation_script();

/// Runs the script; an inversion outside the ring stops the replay and is recorded in log.failure.
DerivationResult replay_derivation(const CoefficientRing& ring,
                                   const nlohmann::json& script = default_derivation_script());

/// As replay_derivation but throws InversionRequired on failure.
DerivationResult derive_cubic_relations(const CoefficientRing& ring,
                                        const nlohmann::json& script = default_derivation_script());

}  // namespace unipotent
