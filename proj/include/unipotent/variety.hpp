// The cubic locus X^3 = 0 in the augmentation ideal and the check that the group lies in it.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "unipotent/grouprel.hpp"
#include "unipotent/ringmodel.hpp"

namespace unipotent {

class VarietyViolation : public std::runtime_error {
public:
    explicit VarietyViolation(const std::string& element)
        : std::runtime_error("element outside the cubic locus: " + element) {}
};

class CubeMismatch : public std::runtime_error {
public:
    explicit CubeMismatch(const std::string& point)
        : std::runtime_error("direct cube differs from the closed form at " + point) {}
};

/// Basis positions of x1..x10: V, U, VU, UV, V^2, U^2, V^2U, VU^2, UV^2, U^2V.
inline constexpr std::array<std::size_t, 10> kVarietySlots = {2, 1, 5, 4, 6, 3, 10, 9, 8, 7};
/// Basis positions of the tail (monomials of length >= 4).
inline constexpr std::array<std::size_t, 7> kTailSlots = {11, 12, 13, 14, 15, 16, 17};

struct VarietyPoint {
    std::array<mpq_class, 10> x{};
    std::array<mpq_class, 7> tail{};

    static VarietyPoint from_element(const RingElement& e);  // ignores the constant term
    RingElement element() const;
    std::string to_string() const;
};

/// x1 x2 (x1 + x2)/2 - x1 x2 x3 - x1 x2 x4 + x2^2 x5 + x1^2 x6
mpq_class variety_equation(const VarietyPoint& p);
/// Scalar s with X^3 = s (UVU + U^2V + VU^2).
mpq_class cube_scalar(const VarietyPoint& p);
/// X^3 by structure constants; throws CubeMismatch when it differs from the closed form.
RingElement cube_in_B(const VarietyPoint& p);

struct GroupSample {
    int n = 0, m = 0;
    std::string commutator;  // label of the commutator-subgroup factor
    RingElement element;     // g - 1
};

/// Products of the six basic commutators with exponents in {-1, 0, 1}.
std::vector<std::pair<std::string, GroupWord>> commutator_words();

/// g - 1 for g = a^n b^m c over the given ranges and commutator words.
std::vector<GroupSample> enumerate_group_elements(int n_min, int n_max, int m_min, int m_max,
                                                  const std::vector<std::pair<std::string, GroupWord>>& words);

/// Freely reduced words in a, b of length at most max_len.
std::vector<GroupWord> reduced_words(int max_len);

struct VarietyOptions {
    int n_min = -6, n_max = 6, m_min = -6, m_max = 6;
    int word_length = 6;
};

struct VarietyReport {
    std::size_t normal_form_elements = 0;
    std::size_t raw_words = 0;
    std::size_t commutator_words = 0;
    std::vector<std::string> violations;
    bool commutator_shape_ok = false;  // x1 = x2 = x5 = x6 = 0, x3 = -x4
    bool circle_shift_ok = false;      // X o C shifts (x3, x4) by (y, -y)
    bool ok() const { return violations.empty() && commutator_shape_ok && circle_shift_ok; }
    nlohmann::json to_json() const;
};

/// Runs both sweeps; violations are collected, not thrown.
VarietyReport check_group_in_variety(const VarietyOptions& opts = {});

/// Throws VarietyViolation for the first element off the locus.
void require_in_variety(const RingElement& x, const std::string& label);

/// X o Y = X + Y + XY.
RingElement circle(const RingElement& x, const RingElement& y);

struct CircleCounterexample {
    VarietyPoint x, y;
    mpq_class value;  // equation at x o y
};

/// Two points on the locus whose circle product leaves it.
std::optional<CircleCounterexample> circle_counterexample();

}  // namespace unipotent
