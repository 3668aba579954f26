#include <doctest.h>

#include <random>

#include "unipotent/ringmodel.hpp"

using namespace unipotent;

namespace {

const RingModel& ring() { return RingModel::instance(); }

std::vector<mpq_class> vec(const RingElement& x) { return {x.coords.begin(), x.coords.end()}; }

Polynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 5), gen(1, 2), exp(1, 2), coef(-3, 3);
    Polynomial p;
    for (int t = 0; t < 4; ++t) {
        std::vector<Syllable> syl;
        int n = len(rng);
        for (int k = 0; k < n; ++k) {
            int g = gen(rng);
            if (!syl.empty() && syl.back().gen == g) continue;
            syl.push_back({g, exp(rng)});
        }
        p.add_term(*Monomial::from_syllables(syl, 2), Coefficient(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("basis spans the normal forms and matches the first listing") {
    CHECK(ring().normal_forms().size() == kRank);
    EchelonBasis a(kRank), b(kRank);
    for (const auto& m : ring().basis()) a.add(vec(ring().coordinates(Polynomial(m))));
    for (const auto& m : ring().first_listing()) b.add(vec(ring().coordinates(Polynomial(m))));
    CHECK(a.rank() == kRank);
    CHECK(b.rank() == kRank);
    for (std::size_t i = 0; i < kRank; ++i) CHECK(ring().coordinates(Polynomial(ring().basis()[i])) == RingElement::basis(i));
}

TEST_CASE("change of basis needs only 2 and 3 inverted") {
    const auto z6 = CoefficientRing::localized({2, 3});
    for (const auto& m : ring().normal_forms()) {
        RingElement x = ring().coordinates(Polynomial(m));
        for (const auto& c : x.coords) CHECK(z6.admits(Coefficient(c)));
        CHECK(reduce(ring().to_polynomial(x) - Polynomial(m), table_system()).is_zero());
    }
}

TEST_CASE("structure constants are associative") {
    for (std::size_t i = 0; i < kRank; ++i)
        for (std::size_t j = 0; j < kRank; ++j)
            for (std::size_t k = 0; k < kRank; ++k) {
                auto left = ring().multiply(ring().structure_constant(i, j), RingElement::basis(k));
                auto right = ring().multiply(RingElement::basis(i), ring().structure_constant(j, k));
                if (!(left == right)) FAIL("non-associative at " << i << "," << j << "," << k);
            }
    CHECK(ring().structure_nonzeros() > 0);
}

TEST_CASE("structure constants agree with rewriting on random products") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = random_poly(rng), q = random_poly(rng);
        CHECK(ring().multiply(ring().coordinates(p), ring().coordinates(q)) == ring().coordinates(p * q));
        QMatrix mp = ring().regular_matrix(ring().coordinates(p));
        QMatrix mq = ring().regular_matrix(ring().coordinates(q));
        CHECK(mp * mq == ring().regular_matrix(ring().coordinates(p * q)));
    }
}

TEST_CASE("printed generator matrices equal the regular representation") {
    std::pair<QMatrix, QMatrix> mats;
    bool mismatch = false;
    try {
        mats = ring().generator_matrices();
    } catch (const MatrixMismatch& e) {
        mismatch = true;
        MESSAGE(e.what());
    }
    REQUIRE_FALSE(mismatch);
    CHECK(mats.first.rank() == kRank);
    CHECK(mats.second.rank() == kRank);
    CHECK(mats.first * unipotent_inverse(mats.first) == QMatrix::identity(kRank));
    CHECK(mats.second * unipotent_inverse(mats.second) == QMatrix::identity(kRank));
    for (const auto& c : verify_defining_conditions(mats.first, mats.second)) {
        INFO(c.name);
        CHECK(c.ok);
    }
}

TEST_CASE("a perturbed matrix fails the defining conditions") {
    QMatrix a = RingModel::printed_matrix('a');
    QMatrix bad = a;
    bad.at(4, 12) = 0;
    CHECK(bad != a);
    bool all = true;
    for (const auto& c : verify_defining_conditions(bad, RingModel::printed_matrix('b'))) all = all && c.ok;
    CHECK_FALSE(all);
}

TEST_CASE("word matrices follow the ring elements") {
    const QMatrix& a = RingModel::printed_matrix('a');
    const QMatrix& b = RingModel::printed_matrix('b');
    for (const char* w : {"a", "b^-1", "a*b", "[a,b]", "a^2*b^-1*a^-1", "[a,b,a]"}) {
        GroupWord g = GroupWord::parse(w);
        INFO(w);
        CHECK(matrix_of_word(g, a, b) == ring().regular_matrix(ring().element_of(g)));
    }
}

TEST_CASE("augmentation ideal is nilpotent of degree 6") {
    auto rep = nilpotency_degree();
    CHECK(rep.degree == 6);
    CHECK(rep.witness_in_fifth_power);
    // oracle: the k-th power is spanned by reduced monomials of length >= k
    REQUIRE(rep.power_ranks.size() == 6);
    for (int k = 1; k <= 6; ++k) {
        EchelonBasis span(kRank);
        for (const auto& m : all_monomials(2, 7, 2))
            if (m.total_length() >= k) span.add(vec(ring().coordinates(Polynomial(m))));
        CHECK(rep.power_ranks[static_cast<std::size_t>(k - 1)] == span.rank());
    }
    CHECK_FALSE(ring().coordinates(Polynomial::parse("U^2*V^2*U")).is_zero());
}

TEST_CASE("basic commutators match their printed expansions") {
    auto rep = basic_commutators();
    REQUIRE(rep.items.size() == 7);
    for (const auto& it : rep.items) {
        INFO(it.label << " -> " << it.computed.to_string());
        CHECK(it.matches);
    }
    CHECK(rep.items[4].computed == rep.items[5].computed);
    CHECK(rep.weight5_count == 32);
    CHECK(rep.weight5_trivial);
    CHECK(rep.weight_ranks == std::vector<std::size_t>{1, 2, 3});
    CHECK(rep.independent);
    CHECK(rep.ok());
}

TEST_CASE("cube of the basic commutator") {
    auto rep = cube_of_commutator();
    INFO(rep.truncated_cube.to_string());
    CHECK(rep.truncated_matches_expected);
    CHECK(rep.reduced_cube.is_zero());
    CHECK(rep.statement_form_vanishes);
    CHECK(rep.proof_form_vanishes);
}

TEST_CASE("matrix CSV export") {
    std::string csv = RingModel::printed_matrix('a').to_csv();
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(kRank));
    CHECK(csv.find("1/2") != std::string::npos);
    CHECK(csv.rfind("1,1,0", 0) == 0);
}

TEST_CASE("ring report") {
    auto j = ring_report();
    CHECK(j["rank"] == 18);
    CHECK(j["nilpotency_degree"] == 6);
    for (const auto& r : j["relations_verified"]) CHECK(r["ok"] == true);
    for (const auto& r : j["commutators_verified"]) CHECK(r["ok"] == true);
    for (const auto& r : j["matrix_checks"]) CHECK(r["ok"] == true);
}
