#include "unipotent/ringmodel.hpp"

#include <map>
#include <sstream>

namespace unipotent {

namespace {

const char* const kBasis[kRank] = {"1",       "U",         "V",       "U^2",     "U*V",       "V*U",
                                   "V^2",     "U^2*V",     "U*V^2",   "V*U^2",   "V^2*U",     "U^2*V*U",
                                   "U^2*V^2", "V*U^2*V",   "V^2*U^2", "V^2*U*V", "U^2*V^2*U", "V^2*U^2*V"};

const char* const kFirstListing[kRank] = {"1",       "U",       "V",       "U^2",       "V^2",       "U*V",
                                          "V*U",     "U^2*V",   "V*U^2",   "U*V^2",     "V^2*U",     "V^2*U^2",
                                          "U^2*V^2", "V*U*V",   "U^2*V*U", "V^2*U*V",   "U^2*V^2*U", "V^2*U^2*V"};

const char* const kMatrixA[kRank] = {
    "1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 -1 0 -1 0 0 1/2 1/2 1/2 0 0 0",
    "0 0 0 0 0 1 0 0 0 1 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 1 0 0 0 1 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 1 0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 1 0 0 0 0 1 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 1 0 0 0 1 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 1 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 -1 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 -1",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1",
};

const char* const kMatrixB[kRank] = {
    "1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 1 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 1 0 0 0 1 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 1 0 0 0 1 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 1 0 0 -1 0 -1 0 1/2 1/2 1/2 0 0 0",
    "0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 1 0 0 0 0 1 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 1 0 0 0 1 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 1 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 -1 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 -1",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1",
};

QMatrix parse_matrix(const char* const rows[kRank]) {
    QMatrix m(kRank, kRank);
    for (std::size_t i = 0; i < kRank; ++i) {
        std::istringstream in(rows[i]);
        std::string tok;
        for (std::size_t j = 0; j < kRank && in >> tok; ++j) {
            m.at(i, j) = mpq_class(tok);
            m.at(i, j).canonicalize();
        }
    }
    return m;
}

std::vector<mpq_class> as_vector(const RingElement& x) { return {x.coords.begin(), x.coords.end()}; }

}  // namespace

RingElement RingElement::unit() { return basis(0); }

RingElement RingElement::basis(std::size_t i) {
    RingElement x;
    x.coords.at(i) = 1;
    return x;
}

bool RingElement::is_zero() const {
    for (const auto& c : coords)
        if (sgn(c) != 0) return false;
    return true;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    for (std::size_t i = 0; i < kRank; ++i) coords[i] += o.coords[i];
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    for (std::size_t i = 0; i < kRank; ++i) coords[i] -= o.coords[i];
    return *this;
}

RingElement RingElement::scaled(const mpq_class& c) const {
    RingElement x = *this;
    for (auto& v : x.coords) v *= c;
    return x;
}

const RingModel& RingModel::instance() {
    static const RingModel model;
    return model;
}

RingModel::RingModel() {
    for (const char* s : kBasis) basis_.push_back(*parse_monomial(s));
    for (const char* s : kFirstListing) first_listing_.push_back(*parse_monomial(s));
    normal_forms_ = normal_form_closure(table_system(), 2, 7);
    if (normal_forms_.size() != kRank)
        throw std::logic_error("table system has " + std::to_string(normal_forms_.size()) + " normal forms");

    std::map<Monomial, std::size_t, MonomialLess> nf_index;
    for (std::size_t k = 0; k < kRank; ++k) nf_index[normal_forms_[k]] = k;
    QMatrix t(kRank, kRank);  // row i: normal-form coordinates of b_i
    for (std::size_t i = 0; i < kRank; ++i) {
        Polynomial r = reduce(Polynomial(basis_[i]), table_system());
        for (const auto& [m, c] : r.terms()) t.at(i, nf_index.at(m)) = c.value();
    }
    nf_to_basis_ = t.inverse();

    table_.assign(kRank, std::vector<RingElement>(kRank));
    sparse_.assign(kRank * kRank, {});
    for (std::size_t i = 0; i < kRank; ++i)
        for (std::size_t j = 0; j < kRank; ++j) {
            auto prod = ::unipotent::multiply(Polynomial(basis_[i]), Polynomial(basis_[j]));
            table_[i][j] = coordinates(prod);
            for (std::size_t k = 0; k < kRank; ++k)
                if (sgn(table_[i][j].coords[k]) != 0) sparse_[i * kRank + j].push_back({k, table_[i][j].coords[k]});
        }
}

RingElement RingModel::coordinates(const Polynomial& p) const {
    Polynomial r = reduce(p, table_system());
    RingElement x;
    for (const auto& [m, c] : r.terms()) {
        std::size_t k = 0;
        while (k < kRank && !(normal_forms_[k] == m)) ++k;
        if (k == kRank) throw NotInSpan(m.to_string(2));
        for (std::size_t j = 0; j < kRank; ++j)
            if (sgn(nf_to_basis_.at(k, j)) != 0) x.coords[j] += c.value() * nf_to_basis_.at(k, j);
    }
    return x;
}

Polynomial RingModel::to_polynomial(const RingElement& x) const {
    Polynomial p;
    for (std::size_t i = 0; i < kRank; ++i) p.add_term(basis_[i], Coefficient(x.coords[i]));
    return p;
}

RingElement RingModel::multiply(const RingElement& x, const RingElement& y) const {
    RingElement z;
    mpq_class t;
    for (std::size_t i = 0; i < kRank; ++i) {
        if (sgn(x.coords[i]) == 0) continue;
        for (std::size_t j = 0; j < kRank; ++j) {
            if (sgn(y.coords[j]) == 0) continue;
            const auto& entries = sparse_[i * kRank + j];
            if (entries.empty()) continue;
            t = x.coords[i] * y.coords[j];
            for (const auto& [k, v] : entries) z.coords[k] += t * v;
        }
    }
    return z;
}

RingElement RingModel::power(const RingElement& x, int n) const {
    if (n < 0) throw std::invalid_argument("negative power of a ring element");
    RingElement r = RingElement::unit();
    for (int k = 0; k < n; ++k) r = multiply(r, x);
    return r;
}

RingElement RingModel::element_of(const GroupWord& w) const {
    RingElement r = RingElement::unit();
    for (const Letter& l : w.letters()) {
        if (l.gen > 2) throw std::invalid_argument("the two-generator ring has no generator y" + std::to_string(l.gen));
        r = multiply(r, coordinates(Polynomial(Coefficient(1)) + u_of_power(l.exp, Context::Cubic, l.gen)));
    }
    return r;
}

QMatrix RingModel::regular_matrix(const RingElement& x) const {
    QMatrix m(kRank, kRank);
    for (std::size_t i = 0; i < kRank; ++i) {
        RingElement row = multiply(RingElement::basis(i), x);
        for (std::size_t j = 0; j < kRank; ++j) m.at(i, j) = row.coords[j];
    }
    return m;
}

const QMatrix& RingModel::printed_matrix(char which) {
    static const QMatrix a = parse_matrix(kMatrixA);
    static const QMatrix b = parse_matrix(kMatrixB);
    if (which == 'a') return a;
    if (which == 'b') return b;
    throw std::invalid_argument("generator matrix must be 'a' or 'b'");
}

std::pair<QMatrix, QMatrix> RingModel::generator_matrices() const {
    QMatrix a = regular_matrix(element_of(GroupWord::gen(1)));
    QMatrix b = regular_matrix(element_of(GroupWord::gen(2)));
    for (char which : {'a', 'b'}) {
        const QMatrix& got = which == 'a' ? a : b;
        const QMatrix& want = printed_matrix(which);
        for (std::size_t i = 0; i < kRank; ++i)
            for (std::size_t j = 0; j < kRank; ++j)
                if (got.at(i, j) != want.at(i, j)) throw MatrixMismatch(which, i, j);
    }
    return {printed_matrix('a'), printed_matrix('b')};
}

std::size_t RingModel::structure_nonzeros() const {
    std::size_t n = 0;
    for (const auto& e : sparse_) n += e.size();
    return n;
}

QMatrix unipotent_inverse(const QMatrix& a) {
    QMatrix i = QMatrix::identity(a.rows());
    QMatrix three = i + i + i;
    return a * a - (three * a) + three;
}

QMatrix matrix_of_word(const GroupWord& w, const QMatrix& a, const QMatrix& b) {
    QMatrix ainv = unipotent_inverse(a), binv = unipotent_inverse(b);
    QMatrix r = QMatrix::identity(a.rows());
    for (const Letter& l : w.letters()) {
        const QMatrix& m = l.gen == 1 ? (l.exp > 0 ? a : ainv) : (l.exp > 0 ? b : binv);
        if (l.gen > 2) throw std::invalid_argument("only two generators are represented");
        for (int k = 0; k < std::abs(l.exp); ++k) r = r * m;
    }
    return r;
}

QMatrix evaluate(const Polynomial& p, const QMatrix& u, const QMatrix& v) {
    const std::size_t n = u.rows();
    QMatrix out(n, n);
    for (const auto& [m, c] : p.terms()) {
        QMatrix t = QMatrix::identity(n);
        for (const Syllable& s : m.syllables())
            for (int k = 0; k < s.exp; ++k) t = t * (s.gen == 1 ? u : v);
        QMatrix scale = QMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) scale.at(i, i) = c.value();
        out = out + scale * t;
    }
    return out;
}

std::vector<GroupWord> conditioning_words() {
    std::vector<GroupWord> out;
    for (const char* w : {"y1", "y2", "y1*y2", "y1^-1*y2", "y1^2*y2", "y1*y2^2", "[y1,y2]"})
        out.push_back(GroupWord::parse(w));
    return out;
}

std::vector<ConditionResult> verify_defining_conditions(const QMatrix& a, const QMatrix& b) {
    std::vector<ConditionResult> out;
    const QMatrix id = QMatrix::identity(a.rows());
    for (const auto& w : conditioning_words()) {
        QMatrix n = matrix_of_word(w, a, b) - id;
        out.push_back({"(" + w.to_string(true) + " - 1)^3 = 0", (n * n * n).is_zero()});
    }
    QMatrix u = a - id, v = b - id;
    for (const auto& r : lemma_relations())
        out.push_back({r.label + ": " + r.lhs.to_string() + " = " + r.rhs.to_string(), evaluate(r.relation(), u, v).is_zero()});
    return out;
}

NilpotencyReport nilpotency_degree() {
    const RingModel& ring = RingModel::instance();
    NilpotencyReport rep;
    std::vector<RingElement> layer;
    for (std::size_t i = 1; i < kRank; ++i) layer.push_back(RingElement::basis(i));
    std::vector<EchelonBasis> powers;
    for (int k = 1; k <= 12; ++k) {
        EchelonBasis span(kRank);
        std::vector<RingElement> kept;
        for (const auto& x : layer)
            if (span.add(as_vector(x))) kept.push_back(x);
        rep.power_ranks.push_back(span.rank());
        powers.push_back(span);
        if (span.rank() == 0) {
            rep.degree = k;
            break;
        }
        std::vector<RingElement> next;
        for (const auto& x : kept)
            for (std::size_t j = 1; j < kRank; ++j) next.push_back(ring.multiply(x, RingElement::basis(j)));
        layer = std::move(next);
    }
    rep.witness = "U^2*V^2*U";
    if (powers.size() >= 5) {
        RingElement w = ring.coordinates(Polynomial::parse(rep.witness));
        rep.witness_in_fifth_power = !w.is_zero() && powers[4].contains(as_vector(w));
    }
    return rep;
}

bool CommutatorReport::ok() const {
    for (const auto& it : items)
        if (!it.matches) return false;
    return weight5_trivial && independent;
}

CommutatorReport basic_commutators() {
    const RingModel& ring = RingModel::instance();
    const RewriteSystem& sys = table_system();
    struct Spec {
        const char* word;
        const char* printed;
        int weight;
    };
    const Spec specs[] = {
        {"[a,b]",
         "U*V - V*U - 6*U^2*V + U*V^2 - 5*V*U^2 + 2*V^2*U - 4*U*V*U + U^2*V^2 + 2*V^2*U^2 - U^2*V*U - V*U*V^2 + "
         "2*U^2*V^2*U - V*U^2*V^2",
         2},
        {"[a,b,a]", "-3*U^2*V - 3*V*U^2 + 3*V^2*U^2 - 6*U^2*V*U + 3*U^2*V^2*U", 3},
        {"[a,b,b]", "3*U*V^2 + 3*V^2*U - 3*U^2*V^2 + 6*V^2*U*V - 3*V^2*U^2*V", 3},
        {"[a,b,a,a]", "-6*U^2*V*U + 3*U^2*V^2*U", 4},
        {"[a,b,b,a]", "-3*U^2*V^2 + 3*V^2*U^2", 4},
        {"[a,b,a,b]", "-3*U^2*V^2 + 3*V^2*U^2", 4},
        {"[a,b,b,b]", "6*V^2*U*V - 3*V^2*U^2*V", 4},
    };
    CommutatorReport rep;
    std::map<int, std::vector<RingElement>> by_weight;
    for (const auto& s : specs) {
        GroupWord w = GroupWord::parse(s.word);
        Polynomial computed = reduce(expand_word(w, Context::Cubic, &sys), sys);
        bool match = computed == reduce(Polynomial::parse(s.printed), sys);
        rep.items.push_back({s.word, s.printed, computed, match});
        if (std::string(s.word) != "[a,b,a,b]") by_weight[s.weight].push_back(ring.coordinates(computed));
    }

    // left-normed commutators of weight 5 in a, b
    for (unsigned mask = 0; mask < 32; ++mask) {
        std::vector<GroupWord> parts;
        for (int k = 0; k < 5; ++k) parts.push_back(GroupWord::gen((mask >> k) & 1 ? 2 : 1));
        if (!expand_word(commutator(parts), Context::Cubic, &sys).is_zero()) {
            rep.weight5_trivial = false;
            rep.weight5_count = mask;
            break;
        }
        rep.weight5_count = mask + 1;
        rep.weight5_trivial = true;
    }

    // independence modulo the next power of the augmentation ideal
    std::vector<EchelonBasis> powers;
    {
        std::vector<RingElement> layer;
        for (std::size_t i = 1; i < kRank; ++i) layer.push_back(RingElement::basis(i));
        for (int k = 1; k <= 6; ++k) {
            EchelonBasis span(kRank);
            std::vector<RingElement> kept;
            for (const auto& x : layer)
                if (span.add(as_vector(x))) kept.push_back(x);
            powers.push_back(span);
            std::vector<RingElement> next;
            for (const auto& x : kept)
                for (std::size_t j = 1; j < kRank; ++j) next.push_back(ring.multiply(x, RingElement::basis(j)));
            layer = std::move(next);
        }
    }
    rep.independent = true;
    for (int w = 2; w <= 4; ++w) {
        EchelonBasis span = powers[static_cast<std::size_t>(w)];  // B^(w+1)
        const std::size_t base = span.rank();
        for (const auto& x : by_weight[w]) {
            if (!powers[static_cast<std::size_t>(w - 1)].contains(as_vector(x))) rep.independent = false;
            span.add(as_vector(x));
        }
        rep.weight_ranks.push_back(span.rank() - base);
        if (span.rank() - base != by_weight[w].size()) rep.independent = false;
    }
    return rep;
}

bool CubeReport::ok() const {
    return truncated_matches_expected && reduced_cube.is_zero() && statement_form_vanishes && proof_form_vanishes;
}

CubeReport cube_of_commutator() {
    const RewriteSystem& sys = table_system();
    CubeReport rep;
    Polynomial c2 = Polynomial::parse("U^2 - U + 1") * Polynomial::parse("V^2 - V + 1") *
                        Polynomial::parse("U + 1") * Polynomial::parse("V + 1") -
                    Polynomial(Coefficient(1));
    Polynomial cube = ::unipotent::power(c2, 3);
    rep.truncated_cube = cube.truncated(6);
    rep.truncated_matches_expected =
        rep.truncated_cube == Polynomial::parse(
                                  "U*V*U*V*U*V - V*U*V*U*V*U + U*V^2*U*V*U - U*V*U*V^2*U + V*U*V*U^2*V - V*U^2*V*U*V + "
                                  "V*U^2*V^2*U - U*V^2*U^2*V");
    rep.reduced_cube = reduce(cube, sys);
    rep.statement_form_vanishes = reduce(Polynomial::parse("6*U*V^2*U^2*V"), sys).is_zero();
    rep.proof_form_vanishes = reduce(Polynomial::parse("6*U^2*V^2*U*V"), sys).is_zero();
    return rep;
}

nlohmann::json ring_report() {
    const RingModel& ring = RingModel::instance();
    nlohmann::json j;
    j["rank"] = ring.normal_forms().size();
    auto nil = nilpotency_degree();
    j["nilpotency_degree"] = nil.degree;
    j["power_ranks"] = nil.power_ranks;

    nlohmann::json rels = nlohmann::json::array();
    for (const auto* group : {&printed_table(), &lemma_relations(), &supplementary_relations()})
        for (const auto& r : *group)
            rels.push_back({{"label", r.label}, {"ok", reduce(r.relation(), table_system()).is_zero()}});
    j["relations_verified"] = rels;

    auto com = basic_commutators();
    nlohmann::json coms = nlohmann::json::array();
    for (const auto& it : com.items)
        coms.push_back({{"word", it.label}, {"ok", it.matches}, {"reduced", it.computed.to_string()}});
    coms.push_back({{"word", "[a,b,*,*,*]"}, {"ok", com.weight5_trivial}, {"count", com.weight5_count}});
    coms.push_back({{"word", "independence"}, {"ok", com.independent}, {"ranks", com.weight_ranks}});
    j["commutators_verified"] = coms;

    nlohmann::json mats = nlohmann::json::array();
    try {
        auto [a, b] = ring.generator_matrices();
        mats.push_back({{"check", "printed matrices equal regular representation"}, {"ok", true}});
        for (const auto& c : verify_defining_conditions(a, b)) mats.push_back({{"check", c.name}, {"ok", c.ok}});
    } catch (const MatrixMismatch& e) {
        mats.push_back({{"check", "printed matrices equal regular representation"}, {"ok", false}, {"error", e.what()}});
    }
    j["matrix_checks"] = mats;
    auto cube = cube_of_commutator();
    j["commutator_cube"] = {{"ok", cube.ok()}, {"truncated", cube.truncated_cube.to_string()}};
    return j;
}

}  // namespace unipotent
