#include <doctest.h>

#include <random>

#include "unipotent/variety.hpp"

using namespace unipotent;

namespace {

const RingModel& ring() { return RingModel::instance(); }

VarietyPoint point(std::initializer_list<int> xs) {
    VarietyPoint p;
    std::size_t k = 0;
    for (int v : xs) p.x[k++] = v;
    return p;
}

mpq_class small_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

VarietyPoint random_point(std::mt19937& rng) {
    VarietyPoint p;
    for (auto& x : p.x) x = small_rational(rng);
    for (auto& t : p.tail) t = small_rational(rng);
    return p;
}

}  // namespace

TEST_CASE("equation examples") {
    CHECK(variety_equation(point({0, 0, 5, -3, 2, 7})) == 0);
    CHECK(variety_equation(point({1, 1, 0, 0, 0, 0})) == 1);
    VarietyPoint ab = VarietyPoint::from_element(ring().coordinates(Polynomial::parse("U*V + U + V")));
    CHECK(ab.x[0] == 1);
    CHECK(ab.x[1] == 1);
    CHECK(ab.x[3] == 1);
    CHECK(variety_equation(ab) == 0);
}

TEST_CASE("cube examples") {
    CHECK(cube_in_B(VarietyPoint::from_element(ring().coordinates(Polynomial::parse("U")))).is_zero());
    RingElement c = cube_in_B(point({1, 1}));
    // oracle: cube the polynomial and reduce with the rewriting system
    Polynomial direct = reduce(power(Polynomial::parse("U + V"), 3), table_system());
    CHECK(c == ring().coordinates(direct));
    CHECK(c == ring().coordinates(Polynomial::parse("2*U*V*U + 2*U^2*V + 2*V*U^2")));
    RingElement comm = ring().element_of(GroupWord::parse("[a,b]")) - RingElement::unit();
    CHECK(cube_in_B(VarietyPoint::from_element(comm)).is_zero());
}

TEST_CASE("closed form agrees with the direct cube on random points") {
    std::mt19937 rng(11);
    for (int t = 0; t < 1000; ++t) {
        VarietyPoint p = random_point(rng);
        bool mismatch = false;
        try {
            cube_in_B(p);
        } catch (const CubeMismatch&) {
            mismatch = true;
        }
        if (mismatch) FAIL("closed form fails at " << p.to_string());
        CHECK(cube_scalar(p) == 2 * variety_equation(p));
        VarietyPoint q = p;
        mpq_class y = small_rational(rng);
        q.x[2] += y;
        q.x[3] -= y;
        CHECK(variety_equation(q) == variety_equation(p));
    }
    // oracle through polynomial arithmetic for a few points
    for (int t = 0; t < 20; ++t) {
        VarietyPoint p = random_point(rng);
        Polynomial x = ring().to_polynomial(p.element());
        CHECK(ring().coordinates(power(x, 3)) == cube_in_B(p));
    }
}

TEST_CASE("group elements") {
    auto words = commutator_words();
    CHECK(words.size() == 729);
    auto id = enumerate_group_elements(0, 0, 0, 0, {{"e", GroupWord()}});
    REQUIRE(id.size() == 1);
    CHECK(id[0].element.is_zero());
    auto ab = enumerate_group_elements(1, 1, 1, 1, {{"e", GroupWord()}});
    CHECK(ab[0].element == ring().coordinates(Polynomial::parse("U*V + U + V")));
    auto s = enumerate_group_elements(2, 2, 3, 3, {{"[a,b]", GroupWord::parse("[a,b]")}});
    CHECK_NOTHROW(require_in_variety(s[0].element, "a^2*b^3*[a,b]"));
    CHECK_THROWS_AS(require_in_variety(ring().coordinates(Polynomial::parse("U + V")), "U + V"), VarietyViolation);
}

TEST_CASE("ring elements of words agree with the polynomial expansion") {
    const auto& sys = table_system();
    for (const auto& w : reduced_words(4))
        CHECK(ring().element_of(w) - RingElement::unit() == ring().coordinates(expand_word(w, Context::Cubic, &sys)));
    CHECK(reduced_words(6).size() == 1457);
}

TEST_CASE("the group lies in the cubic locus") {
    auto rep = check_group_in_variety();
    CHECK(rep.normal_form_elements == 13u * 13u * 729u);
    CHECK(rep.raw_words == 1457);
    CHECK(rep.commutator_shape_ok);
    CHECK(rep.circle_shift_ok);
    CHECK(rep.violations.empty());
    CHECK(rep.ok());
}

TEST_CASE("the locus is not closed under the circle operation") {
    auto ce = circle_counterexample();
    REQUIRE(ce.has_value());
    CHECK(variety_equation(ce->x) == 0);
    CHECK(variety_equation(ce->y) == 0);
    RingElement prod = circle(ce->x.element(), ce->y.element());
    CHECK(variety_equation(VarietyPoint::from_element(prod)) == ce->value);
    CHECK(ce->value != 0);
    CHECK_FALSE(cube_in_B(VarietyPoint::from_element(prod)).is_zero());
}
