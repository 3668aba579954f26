#include "unipotent/quadratic.hpp"

#include <map>
#include <numeric>

namespace unipotent {

namespace {

// Integer row echelon form with primitive rows; overflow-checked.
class IntEchelon {
public:
    bool add(IntVector v) {
        reduce(v);
        auto it = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
        if (it == v.end()) return false;
        make_primitive(v);
        rows_.emplace(static_cast<std::size_t>(it - v.begin()), std::move(v));
        return true;
    }
    bool contains(IntVector v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
    }
    std::size_t rank() const { return rows_.size(); }

private:
    void reduce(IntVector& v) const {
        for (const auto& [p, row] : rows_) {
            if (v[p] == 0) continue;
            std::int64_t g = std::gcd(v[p], row[p]);
            std::int64_t fv = row[p] / g, fr = v[p] / g;
            for (std::size_t k = p; k < v.size(); ++k)
                v[k] = checked_add(checked_mul(fv, v[k]), -checked_mul(fr, row[k]));
            make_primitive(v);
        }
    }
    static void make_primitive(IntVector& v) {
        std::int64_t g = 0;
        for (auto x : v) g = std::gcd(g, x);
        if (g > 1)
            for (auto& x : v) x /= g;
    }
    std::map<std::size_t, IntVector> rows_;
};

IntVector first_column(std::size_t n) {
    IntVector v(n, 0);
    v[0] = 1;
    return v;
}

IntVector flatten(const SparseIntMatrix& m) {
    IntVector v(m.size() * m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& [j, x] : m.row(i)) v[i * m.size() + j] = x;
    return v;
}

std::vector<std::vector<mpz_class>> to_mpz(const std::vector<IntVector>& rows) {
    std::vector<std::vector<mpz_class>> out;
    for (const auto& r : rows) {
        std::vector<mpz_class> z;
        z.reserve(r.size());
        for (auto x : r) z.emplace_back(static_cast<long>(x));
        out.push_back(std::move(z));
    }
    return out;
}

SparseIntMatrix two_minus(const SparseIntMatrix& a) { return SparseIntMatrix::identity(a.size()).scaled(2) - a; }

SparseIntMatrix commutator(const SparseIntMatrix& x, const SparseIntMatrix& xinv, const SparseIntMatrix& y,
                           const SparseIntMatrix& yinv) {
    return xinv * yinv * x * y;
}

bool is_faithful_vector(const QuadraticRep& rep, const IntVector& v) {
    std::vector<IntVector> images;
    for (const auto& m : ordered_products(rep)) images.push_back(m.apply(v));
    return rank_fraction_free(to_mpz(images)) == rep.dim();
}

}  // namespace

SparseIntMatrix QuadraticRep::u(int i) const {
    return gens.at(static_cast<std::size_t>(i - 1)) - SparseIntMatrix::identity(dim());
}

QuadraticRep build_rep(int d) {
    if (d < 1 || d > kQuadraticMaxD)
        throw std::invalid_argument("d must lie in [1, " + std::to_string(kQuadraticMaxD) + "]");
    // level[k] holds a_{1,k} .. a_{k,k}
    std::vector<SparseIntMatrix> gens, invs;
    for (int k = 1; k <= d; ++k) {
        const std::size_t half = std::size_t{1} << (k - 1);
        const SparseIntMatrix id = SparseIntMatrix::identity(half);
        std::vector<SparseIntMatrix> next, next_inv;
        next.push_back(SparseIntMatrix::blocks(id, {}, id, id, half));
        next_inv.push_back(SparseIntMatrix::blocks(id, {}, id.scaled(-1), id, half));
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const auto& a = gens[i];
            const auto& ainv = invs[i];
            next.push_back(SparseIntMatrix::blocks(a, {}, a, ainv, half));
            next_inv.push_back(SparseIntMatrix::blocks(ainv, {}, a.scaled(-1), a, half));
        }
        gens = std::move(next);
        invs = std::move(next_inv);
    }
    return {d, std::move(gens), std::move(invs)};
}

QuadraticRelationReport verify_relations(const QuadraticRep& rep) {
    QuadraticRelationReport r;
    const std::size_t n = rep.dim();
    const SparseIntMatrix id = SparseIntMatrix::identity(n);
    for (int i = 1; i <= rep.d; ++i) {
        auto u = rep.u(i);
        if (!(u * u).is_zero()) throw RelationFailed(i, 0);
        ++r.relations_checked;
    }
    for (int i = 1; i <= rep.d; ++i)
        for (int j = i + 1; j <= rep.d; ++j) {
            auto w = rep.gens[static_cast<std::size_t>(i - 1)] * rep.gens[static_cast<std::size_t>(j - 1)] - id;
            if (!(w * w).is_zero()) throw RelationFailed(i, j);
            ++r.relations_checked;
        }

    r.inverse_formula = r.block_inverse = true;
    for (int i = 0; i < rep.d; ++i) {
        const auto& a = rep.gens[static_cast<std::size_t>(i)];
        const auto& inv = rep.inverses[static_cast<std::size_t>(i)];
        r.block_inverse = r.block_inverse && a * inv == id && inv * a == id;
        r.inverse_formula = r.inverse_formula && inv == two_minus(a);
    }

    r.anticommutation = r.reordering = true;
    for (int i = 1; i <= rep.d; ++i)
        for (int j = i + 1; j <= rep.d; ++j) {
            auto ui = rep.u(i), uj = rep.u(j);
            r.anticommutation = r.anticommutation && (uj * ui + ui * uj).is_zero();
            const auto& ai = rep.gens[static_cast<std::size_t>(i - 1)];
            const auto& aj = rep.gens[static_cast<std::size_t>(j - 1)];
            auto rhs = (ai + aj).scaled(2) - ai * aj - id.scaled(2);
            r.reordering = r.reordering && aj * ai == rhs;
        }
    return r;
}

std::vector<SparseIntMatrix> ordered_products(const QuadraticRep& rep) {
    std::vector<SparseIntMatrix> out(rep.dim());
    out[0] = SparseIntMatrix::identity(rep.dim());
    // mask with highest bit k is (mask without k) * a_{k+1}
    for (std::size_t mask = 1; mask < rep.dim(); ++mask) {
        std::size_t top = 63 - static_cast<std::size_t>(__builtin_clzll(mask));
        out[mask] = out[mask ^ (std::size_t{1} << top)] * rep.gens[top];
    }
    return out;
}

RankReport rank_and_basis(const QuadraticRep& rep, bool flat) {
    RankReport r;
    r.expected = rep.dim();
    auto products = ordered_products(rep);
    const IntVector v = first_column(rep.dim());
    std::vector<IntVector> images, lower;
    for (std::size_t mask = 0; mask < products.size(); ++mask) {
        images.push_back(flat ? flatten(products[mask]) : products[mask].apply(v));
        if (!(mask >> (rep.d - 1) & 1)) lower.push_back(images.back());
        r.witness.push_back(mask);
    }
    r.rank = rank_fraction_free(to_mpz(images));
    if (!flat && r.rank < r.expected) return rank_and_basis(rep, true);
    r.lower_rank = rank_fraction_free(to_mpz(lower));
    r.direct_sum = r.lower_rank == r.expected / 2 && r.rank == r.expected;
    return r;
}

QuadraticNilpotency nilpotency_check(const QuadraticRep& rep) {
    QuadraticNilpotency r;
    const std::size_t n = rep.dim();
    // M -> M v is injective on the algebra when the ordered products have independent images.
    const IntVector v = first_column(n);
    const bool faithful = is_faithful_vector(rep, v);
    std::vector<SparseIntMatrix> us;
    for (int i = 1; i <= rep.d; ++i) us.push_back(rep.u(i));

    auto image = [&](const SparseIntMatrix& m) { return faithful ? m.apply(v) : flatten(m); };
    // Left multiplication keeps both representations closed: u (M v) = (u M) v.
    std::vector<SparseIntMatrix> layer_m;
    std::vector<IntVector> layer_v;
    IntEchelon first;
    for (const auto& u : us) {
        if (faithful) {
            auto w = u.apply(v);
            if (first.add(w)) layer_v.push_back(w);
        } else if (first.add(flatten(u))) {
            layer_m.push_back(u);
        }
    }
    r.power_ranks.push_back(first.rank());
    for (int k = 2; first.rank() > 0 && k <= rep.d + 2; ++k) {
        IntEchelon span;
        std::vector<SparseIntMatrix> next_m;
        std::vector<IntVector> next_v;
        for (const auto& u : us) {
            if (faithful) {
                for (const auto& w : layer_v) {
                    auto x = u.apply(w);
                    if (span.add(x)) next_v.push_back(std::move(x));
                }
            } else {
                for (const auto& m : layer_m) {
                    auto x = u * m;
                    if (span.add(flatten(x))) next_m.push_back(std::move(x));
                }
            }
        }
        r.power_ranks.push_back(span.rank());
        layer_v = std::move(next_v);
        layer_m = std::move(next_m);
        if (span.rank() == 0) break;
        if (k == rep.d) {
            SparseIntMatrix top = SparseIntMatrix::identity(n);
            for (const auto& u : us) top = top * u;
            r.top_product_nonzero = !top.is_zero();
            r.top_power_spanned_by_product = span.rank() == 1 && r.top_product_nonzero && span.contains(image(top));
        }
    }
    if (rep.d == 1) {
        r.top_product_nonzero = !us[0].is_zero();
        r.top_power_spanned_by_product = r.power_ranks[0] == 1 && r.top_product_nonzero;
    }
    for (std::size_t k = 0; k < r.power_ranks.size(); ++k)
        if (r.power_ranks[k] == 0) {
            r.degree = static_cast<int>(k) + 1;
            break;
        }
    return r;
}

bool Class2Report::ok(int d) const {
    return triple_commutators_trivial && commutator_formula &&
           commutator_rank == static_cast<std::size_t>(d * (d - 1) / 2);
}

Class2Report class2_check(const QuadraticRep& rep) {
    Class2Report r;
    const std::size_t n = rep.dim();
    const SparseIntMatrix id = SparseIntMatrix::identity(n);
    const auto& a = rep.gens;
    const auto& ainv = rep.inverses;
    const std::size_t d = a.size();
    r.triple_commutators_trivial = r.commutator_formula = true;
    std::vector<IntVector> products;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            SparseIntMatrix c = commutator(a[i], ainv[i], a[j], ainv[j]);
            SparseIntMatrix cinv = commutator(a[j], ainv[j], a[i], ainv[i]);
            SparseIntMatrix uu = rep.u(static_cast<int>(i + 1)) * rep.u(static_cast<int>(j + 1));
            r.commutator_formula = r.commutator_formula && c == id + uu.scaled(2);
            if (i < j) products.push_back(flatten(uu));
            for (std::size_t l = 0; l < d; ++l) {
                r.triple_commutators_trivial = r.triple_commutators_trivial && commutator(c, cinv, a[l], ainv[l]) == id;
                ++r.triples_checked;
            }
        }
    IntEchelon span;
    for (auto& p : products) span.add(std::move(p));
    r.commutator_rank = span.rank();
    return r;
}

nlohmann::json quadratic_report(int d, int max_d, bool flat) {
    if (d < 1 || d > max_d)
        throw std::invalid_argument("d must lie in [1, " + std::to_string(max_d) + "]");
    QuadraticRep rep = build_rep(d);
    nlohmann::json j;
    j["d"] = d;
    try {
        j["relations_ok"] = verify_relations(rep).ok();
    } catch (const RelationFailed& e) {
        j["relations_ok"] = false;
        j["relation_failure"] = e.what();
    }
    auto rank = rank_and_basis(rep, flat);
    j["rank"] = rank.rank;
    j["nilpotency_degree"] = nilpotency_check(rep).degree;
    j["class2_ok"] = class2_check(rep).ok(d);
    return j;
}

}  // namespace unipotent
