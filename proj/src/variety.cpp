#include "unipotent/variety.hpp"

#include <sstream>

namespace unipotent {

namespace {

const RingElement& cube_direction() {
    static const RingElement e = RingModel::instance().coordinates(Polynomial::parse("U*V*U + U^2*V + V*U^2"));
    return e;
}

bool on_locus(const RingElement& x) {
    VarietyPoint p = VarietyPoint::from_element(x);
    return sgn(variety_equation(p)) == 0 && cube_in_B(p).is_zero();
}

}  // namespace

VarietyPoint VarietyPoint::from_element(const RingElement& e) {
    VarietyPoint p;
    for (std::size_t k = 0; k < kVarietySlots.size(); ++k) p.x[k] = e.coords[kVarietySlots[k]];
    for (std::size_t k = 0; k < kTailSlots.size(); ++k) p.tail[k] = e.coords[kTailSlots[k]];
    return p;
}

RingElement VarietyPoint::element() const {
    RingElement e;
    for (std::size_t k = 0; k < kVarietySlots.size(); ++k) e.coords[kVarietySlots[k]] = x[k];
    for (std::size_t k = 0; k < kTailSlots.size(); ++k) e.coords[kTailSlots[k]] = tail[k];
    return e;
}

std::string VarietyPoint::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t k = 0; k < x.size(); ++k) out << (k ? ", " : "") << x[k].get_str();
    out << ")";
    return out.str();
}

mpq_class variety_equation(const VarietyPoint& p) {
    const auto& x = p.x;
    mpq_class v = x[0] * x[1] * (x[0] + x[1]) / 2 - x[0] * x[1] * x[2] - x[0] * x[1] * x[3] + x[1] * x[1] * x[4] +
                  x[0] * x[0] * x[5];
    return v;
}

mpq_class cube_scalar(const VarietyPoint& p) {
    const auto& x = p.x;
    mpq_class v = x[0] * x[0] * x[1] + x[0] * x[1] * x[1] - 2 * x[0] * x[1] * x[3] - 2 * x[0] * x[1] * x[2] +
                  2 * x[0] * x[0] * x[5] + 2 * x[1] * x[1] * x[4];
    return v;
}

RingElement cube_in_B(const VarietyPoint& p) {
    const RingModel& ring = RingModel::instance();
    RingElement x = p.element();
    RingElement direct = ring.multiply(ring.multiply(x, x), x);
    if (!(direct == cube_direction().scaled(cube_scalar(p)))) throw CubeMismatch(p.to_string());
    return direct;
}

RingElement circle(const RingElement& x, const RingElement& y) {
    return x + y + RingModel::instance().multiply(x, y);
}

std::vector<std::pair<std::string, GroupWord>> commutator_words() {
    const char* basic[] = {"[a,b]", "[a,b,a]", "[a,b,b]", "[a,b,a,a]", "[a,b,b,a]", "[a,b,b,b]"};
    std::vector<std::pair<std::string, GroupWord>> out{{"e", GroupWord()}};
    for (const char* c : basic) {
        GroupWord w = GroupWord::parse(c);
        std::vector<std::pair<std::string, GroupWord>> next;
        for (const auto& [label, word] : out)
            for (int e : {-1, 0, 1}) {
                if (e == 0) {
                    next.push_back({label, word});
                    continue;
                }
                std::string l = std::string(c) + (e < 0 ? "^-1" : "");
                next.push_back({label == "e" ? l : label + "*" + l, word * w.power(e)});
            }
        out = std::move(next);
    }
    return out;
}

std::vector<GroupSample> enumerate_group_elements(int n_min, int n_max, int m_min, int m_max,
                                                  const std::vector<std::pair<std::string, GroupWord>>& words) {
    const RingModel& ring = RingModel::instance();
    std::vector<RingElement> cs;
    for (const auto& [label, w] : words) cs.push_back(ring.element_of(w));
    std::vector<GroupSample> out;
    for (int n = n_min; n <= n_max; ++n) {
        RingElement an = ring.element_of(GroupWord::gen(1).power(n));
        for (int m = m_min; m <= m_max; ++m) {
            RingElement g = ring.multiply(an, ring.element_of(GroupWord::gen(2).power(m)));
            for (std::size_t k = 0; k < cs.size(); ++k)
                out.push_back({n, m, words[k].first, ring.multiply(g, cs[k]) - RingElement::unit()});
        }
    }
    return out;
}

std::vector<GroupWord> reduced_words(int max_len) {
    std::vector<GroupWord> out{GroupWord()};
    std::vector<GroupWord> layer{GroupWord()};
    const GroupWord letters[] = {GroupWord::gen(1), GroupWord::gen(1, -1), GroupWord::gen(2), GroupWord::gen(2, -1)};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<GroupWord> next;
        for (const auto& w : layer)
            for (const auto& l : letters) {
                GroupWord v = w * l;
                if (v.length() == len) next.push_back(v);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

void require_in_variety(const RingElement& x, const std::string& label) {
    if (!on_locus(x)) throw VarietyViolation(label);
}

VarietyReport check_group_in_variety(const VarietyOptions& opts) {
    const RingModel& ring = RingModel::instance();
    VarietyReport rep;
    auto words = commutator_words();
    rep.commutator_words = words.size();

    rep.commutator_shape_ok = true;
    std::vector<RingElement> cs;
    for (const auto& [label, w] : words) {
        RingElement c = ring.element_of(w) - RingElement::unit();
        VarietyPoint p = VarietyPoint::from_element(c);
        bool shape = sgn(p.x[0]) == 0 && sgn(p.x[1]) == 0 && sgn(p.x[4]) == 0 && sgn(p.x[5]) == 0 &&
                     p.x[2] == -p.x[3] && sgn(c.coords[0]) == 0;
        rep.commutator_shape_ok = rep.commutator_shape_ok && shape;
        cs.push_back(c);
    }

    for (const auto& s : enumerate_group_elements(opts.n_min, opts.n_max, opts.m_min, opts.m_max, words)) {
        ++rep.normal_form_elements;
        if (!on_locus(s.element))
            rep.violations.push_back("a^" + std::to_string(s.n) + "*b^" + std::to_string(s.m) + "*" + s.commutator);
    }
    for (const auto& w : reduced_words(opts.word_length)) {
        ++rep.raw_words;
        if (!on_locus(ring.element_of(w) - RingElement::unit())) rep.violations.push_back(w.to_string(true));
    }

    // X o C for X = u(a^n b^m), C = u(c): only x3, x4 move, by (y, -y)
    rep.circle_shift_ok = true;
    for (int n = -2; n <= 2; ++n)
        for (int m = -2; m <= 2; ++m) {
            RingElement x = ring.element_of(GroupWord::gen(1).power(n) * GroupWord::gen(2).power(m)) - RingElement::unit();
            VarietyPoint px = VarietyPoint::from_element(x);
            for (const auto& c : cs) {
                VarietyPoint pc = VarietyPoint::from_element(c);
                VarietyPoint q = VarietyPoint::from_element(circle(x, c));
                const mpq_class& y = pc.x[2];
                bool shifted = q.x[2] == px.x[2] + y && q.x[3] == px.x[3] - y;
                for (std::size_t k : {0, 1, 4, 5}) shifted = shifted && q.x[k] == px.x[k];
                rep.circle_shift_ok = rep.circle_shift_ok && shifted && variety_equation(q) == variety_equation(px);
            }
        }
    return rep;
}

nlohmann::json VarietyReport::to_json() const {
    return {{"normal_form_elements", normal_form_elements},
            {"raw_words", raw_words},
            {"commutator_words", commutator_words},
            {"commutator_shape_ok", commutator_shape_ok},
            {"circle_shift_ok", circle_shift_ok},
            {"violations", violations},
            {"ok", ok()}};
}

std::optional<CircleCounterexample> circle_counterexample() {
    std::vector<VarietyPoint> points;
    for (int code = 0; code < 729; ++code) {
        VarietyPoint p;
        int c = code;
        for (std::size_t k = 0; k < 6; ++k, c /= 3) p.x[k] = c % 3 - 1;
        if (sgn(variety_equation(p)) == 0 && (sgn(p.x[0]) != 0 || sgn(p.x[1]) != 0)) points.push_back(p);
    }
    for (const auto& p : points)
        for (const auto& q : points) {
            VarietyPoint r = VarietyPoint::from_element(circle(p.element(), q.element()));
            mpq_class v = variety_equation(r);
            if (sgn(v) != 0) return CircleCounterexample{p, q, v};
        }
    return std::nullopt;
}

}  // namespace unipotent
