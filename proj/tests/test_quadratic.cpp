#include <doctest.h>

#include "unipotent/quadratic.hpp"

using namespace unipotent;

namespace {

SparseIntMatrix dense(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    SparseIntMatrix m(rows.size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (auto v : r) m.set(i, j++, v);
        ++i;
    }
    return m;
}

SparseIntMatrix block(const SparseIntMatrix& m, std::size_t r0, std::size_t c0, std::size_t n) {
    SparseIntMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b.set(i, j, m.get(r0 + i, c0 + j));
    return b;
}

}  // namespace

TEST_CASE("construction") {
    CHECK(build_rep(1).gens[0] == dense({{1, 0}, {1, 1}}));
    auto r2 = build_rep(2);
    CHECK(block(r2.gens[1], 0, 0, 2) == build_rep(1).gens[0]);
    CHECK(r2.gens[0] == dense({{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
    CHECK(r2.gens[1] == dense({{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, -1, 1}}));
    auto r4 = build_rep(4);
    auto r3 = build_rep(3);
    for (std::size_t i = 1; i < 4; ++i) {
        const auto& a = r3.gens[i - 1];
        CHECK(block(r4.gens[i], 0, 0, 8) == a);
        CHECK(block(r4.gens[i], 8, 0, 8) == a);
        CHECK(block(r4.gens[i], 0, 8, 8).is_zero());
        CHECK(block(r4.gens[i], 8, 8, 8) == r3.inverses[i - 1]);
    }
    CHECK_THROWS_AS(build_rep(0), std::invalid_argument);
    CHECK_THROWS_AS(build_rep(13), std::invalid_argument);
}

TEST_CASE("defining relations and inverses") {
    for (int d = 1; d <= 6; ++d) {
        auto rep = build_rep(d);
        auto r = verify_relations(rep);
        CHECK(r.relations_checked == static_cast<std::size_t>(d + d * (d - 1) / 2));
        CHECK(r.ok());
        const auto two = SparseIntMatrix::identity(rep.dim()).scaled(2);
        for (const auto& a : rep.gens) CHECK(a + (two - a) == two);
    }
}

TEST_CASE("a broken generator is reported") {
    auto rep = build_rep(3);
    rep.gens[1].set(5, 0, 7);
    bool caught = false;
    int i = -1, j = -1;
    try {
        verify_relations(rep);
    } catch (const RelationFailed& e) {
        caught = true;
        i = e.i();
        j = e.j();
    }
    CHECK(caught);
    CHECK(i == 2);
    CHECK(j == 0);
}

TEST_CASE("rank 2^d and direct sum") {
    for (int d = 1; d <= 8; ++d) {
        auto r = rank_and_basis(build_rep(d));
        CHECK(r.rank == (std::size_t{1} << d));
        CHECK(r.direct_sum);
        CHECK(r.witness.size() == r.rank);
    }
    // oracle: rank of the flattened product matrices
    for (int d = 1; d <= 4; ++d) CHECK(rank_and_basis(build_rep(d), true).rank == (std::size_t{1} << d));
}

TEST_CASE("nilpotency degree d + 1") {
    for (int d = 1; d <= 8; ++d) {
        auto n = nilpotency_check(build_rep(d));
        CHECK(n.degree == d + 1);
        CHECK(n.top_product_nonzero);
        CHECK(n.top_power_spanned_by_product);
    }
    // oracle: every word of length d + 1 in the u_i vanishes, every word of length d is 0 or +-u_1...u_d
    for (int d = 1; d <= 4; ++d) {
        auto rep = build_rep(d);
        std::vector<SparseIntMatrix> us;
        for (int i = 1; i <= d; ++i) us.push_back(rep.u(i));
        SparseIntMatrix top = SparseIntMatrix::identity(rep.dim());
        for (const auto& u : us) top = top * u;
        std::vector<SparseIntMatrix> words{SparseIntMatrix::identity(rep.dim())};
        for (int len = 1; len <= d + 1; ++len) {
            std::vector<SparseIntMatrix> next;
            for (const auto& w : words)
                for (const auto& u : us) next.push_back(w * u);
            words = std::move(next);
            if (len == d)
                for (const auto& w : words) CHECK((w.is_zero() || w == top || w == top.scaled(-1)));
        }
        for (const auto& w : words) CHECK(w.is_zero());
    }
}

TEST_CASE("class two") {
    auto c3 = class2_check(build_rep(3));
    CHECK(c3.triples_checked == 27);
    CHECK(c3.ok(3));
    auto c4 = class2_check(build_rep(4));
    CHECK(c4.commutator_rank == 6);
    CHECK(c4.ok(4));
    for (int d = 1; d <= 7; ++d) CHECK(class2_check(build_rep(d)).ok(d));
}

TEST_CASE("report") {
    auto j = quadratic_report(5);
    CHECK(j["d"] == 5);
    CHECK(j["relations_ok"] == true);
    CHECK(j["rank"] == 32);
    CHECK(j["nilpotency_degree"] == 6);
    CHECK(j["class2_ok"] == true);
    CHECK_THROWS_AS(quadratic_report(9), std::invalid_argument);
    CHECK(quadratic_report(9, 12)["rank"] == 512);
}
