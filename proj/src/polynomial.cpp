#include "unipotent/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace unipotent {

Polynomial::Polynomial(const Coefficient& c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Polynomial::Polynomial(const Monomial& m, const Coefficient& c) {
    if (!c.is_zero()) terms_.emplace(m, c);
}

Coefficient Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient() : it->second;
}

const Monomial& Polynomial::leading() const {
    if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

int Polynomial::max_gen() const noexcept {
    int g = 0;
    for (const auto& [m, c] : terms_) g = std::max(g, m.max_gen());
    return g;
}

int Polynomial::max_total_length() const noexcept {
    int n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.total_length());
    return n;
}

void Polynomial::add_term(const Monomial& m, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
    Polynomial out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c);
    return out;
}

Polynomial Polynomial::truncated(int max_len) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.total_length() <= max_len) out.terms_.emplace(m, c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b, int max_exp) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            if (auto m = multiply(ma, mb, max_exp)) out.add_term(*m, ca * cb);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b, 2); }

Polynomial power(const Polynomial& p, int n, int max_exp) {
    if (n < 0) throw std::invalid_argument("negative power");
    Polynomial out(Coefficient(1));
    for (int i = 0; i < n; ++i) out = multiply(out, p, max_exp);
    return out;
}

Polynomial substitute(const Polynomial& p, const std::map<int, Polynomial>& images,
                      const std::map<int, Polynomial>& square_images, int max_exp) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Polynomial t(c);
        for (const Syllable& s : m.syllables()) {
            auto img = images.find(s.gen);
            Polynomial x = img == images.end() ? Polynomial::gen(s.gen) : img->second;
            if (s.exp == 2) {
                auto sq = square_images.find(s.gen);
                t = multiply(t, sq == square_images.end() ? multiply(x, x, max_exp) : sq->second, max_exp);
            } else {
                for (int k = 0; k < s.exp; ++k) t = multiply(t, x, max_exp);
            }
            if (t.is_zero()) break;
        }
        out += t;
    }
    return out;
}

std::string Polynomial::to_string(int d) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Coefficient mag = c.sign() < 0 ? -c : c;
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;
        if (m.empty()) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) out += mag.to_string() + "*";
            out += m.to_string(d);
        }
    }
    return out;
}

Polynomial Polynomial::parse(std::string_view text, int max_exp) {
    Polynomial out;
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw std::invalid_argument("malformed polynomial '" + std::string(text) + "'");
        }
        std::size_t j = i;
        // a term ends at the next '+'/'-' that is not part of an exponent
        while (j < s.size() && !((s[j] == '+' || s[j] == '-') && j > i && s[j - 1] != '^')) ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw std::invalid_argument("malformed polynomial '" + std::string(text) + "'");
        Coefficient c(sign);
        std::string mono = term;
        if (std::isdigit(static_cast<unsigned char>(term[0]))) {
            std::size_t k = 0;
            while (k < term.size() && (std::isdigit(static_cast<unsigned char>(term[k])) || term[k] == '/')) ++k;
            c *= Coefficient::parse(term.substr(0, k));
            if (k == term.size()) {
                mono = "1";
            } else {
                if (term[k] != '*') throw std::invalid_argument("malformed term '" + term + "'");
                mono = term.substr(k + 1);
            }
        }
        if (auto m = parse_monomial(mono, max_exp)) out.add_term(*m, c);
        i = j;
    }
    return out;
}

}  // namespace unipotent
