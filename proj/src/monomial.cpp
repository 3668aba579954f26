#include "unipotent/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace unipotent {

std::optional<Monomial> Monomial::from_syllables(const std::vector<Syllable>& syl, int max_exp) {
    std::vector<Syllable> out;
    out.reserve(syl.size());
    for (const Syllable& s : syl) {
        if (s.gen < 1) throw std::invalid_argument("generator index must be positive");
        if (s.exp < 0) throw std::invalid_argument("negative exponent in monomial");
        if (s.exp == 0) continue;
        if (!out.empty() && out.back().gen == s.gen)
            out.back().exp += s.exp;
        else
            out.push_back(s);
        if (out.back().exp > max_exp) return std::nullopt;
    }
    return Monomial(std::move(out));
}

Monomial Monomial::letter(int gen, int exp) {
    if (gen < 1 || exp < 1) throw std::invalid_argument("bad letter");
    return Monomial({{gen, exp}});
}

int Monomial::total_length() const noexcept {
    int n = 0;
    for (const auto& s : syl_) n += s.exp;
    return n;
}

int Monomial::gen_length(int gen) const noexcept {
    int n = 0;
    for (const auto& s : syl_)
        if (s.gen == gen) n += s.exp;
    return n;
}

int Monomial::max_gen() const noexcept {
    int g = 0;
    for (const auto& s : syl_) g = std::max(g, s.gen);
    return g;
}

Monomial Monomial::slice(std::size_t pos, std::size_t len) const {
    return Monomial(std::vector<Syllable>(syl_.begin() + static_cast<std::ptrdiff_t>(pos),
                                          syl_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::string Monomial::to_string(int d) const {
    if (syl_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < syl_.size(); ++i) {
        if (i) out += '*';
        if (d == 2 && syl_[i].gen <= 2)
            out += syl_[i].gen == 1 ? "U" : "V";
        else
            out += "U" + std::to_string(syl_[i].gen);
        if (syl_[i].exp != 1) out += "^" + std::to_string(syl_[i].exp);
    }
    return out;
}

std::optional<Monomial> multiply(const Monomial& a, const Monomial& b, int max_exp) {
    std::vector<Syllable> syl = a.syllables();
    syl.insert(syl.end(), b.syllables().begin(), b.syllables().end());
    return Monomial::from_syllables(syl, max_exp);
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
    if (auto c = a.syllable_length() <=> b.syllable_length(); c != 0) return c;
    if (auto c = a.total_length() <=> b.total_length(); c != 0) return c;
    for (int g = std::max(a.max_gen(), b.max_gen()); g >= 1; --g)
        if (auto c = a.gen_length(g) <=> b.gen_length(g); c != 0) return c;
    const auto& x = a.syllables();
    const auto& y = b.syllables();
    for (std::size_t i = x.size(); i-- > 0;)
        if (auto c = x[i] <=> y[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::optional<Occurrence> find_exact(const Monomial& word, const Monomial& pattern, std::size_t from) {
    const auto& w = word.syllables();
    const auto& p = pattern.syllables();
    if (p.empty() || p.size() > w.size()) return std::nullopt;
    for (std::size_t i = from; i + p.size() <= w.size(); ++i) {
        if (std::equal(p.begin(), p.end(), w.begin() + static_cast<std::ptrdiff_t>(i)))
            return Occurrence{i, word.slice(0, i), word.slice(i + p.size(), w.size() - i - p.size())};
    }
    return std::nullopt;
}

std::vector<Occurrence> find_factor(const Monomial& word, const Monomial& pattern) {
    const auto& w = word.syllables();
    const auto& p = pattern.syllables();
    std::vector<Occurrence> out;
    if (p.empty() || p.size() > w.size()) return out;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            const Syllable& ws = w[i + j];
            const Syllable& ps = p[j];
            if (ws.gen != ps.gen) ok = false;
            else if (j == 0 || j == n - 1) ok = ws.exp >= ps.exp;
            else ok = ws.exp == ps.exp;
        }
        if (!ok) continue;
        std::vector<Syllable> left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        std::vector<Syllable> right(w.begin() + static_cast<std::ptrdiff_t>(i + n), w.end());
        if (w[i].exp > p[0].exp) left.push_back({w[i].gen, w[i].exp - p[0].exp});
        // a single-syllable pattern leaves its remainder on the left
        if (n > 1 && w[i + n - 1].exp > p[n - 1].exp)
            right.insert(right.begin(), {w[i + n - 1].gen, w[i + n - 1].exp - p[n - 1].exp});
        out.push_back({i, *Monomial::from_syllables(left, 1 << 20), *Monomial::from_syllables(right, 1 << 20)});
    }
    return out;
}

std::optional<Monomial> parse_monomial(std::string_view text, int max_exp) {
    std::vector<Syllable> syl;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto number = [&]() -> int {
        skip();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw std::invalid_argument("expected a number in monomial '" + std::string(text) + "'");
        return std::stoi(std::string(text.substr(start, i - start)));
    };
    skip();
    if (i < text.size() && text[i] == '1') {
        ++i;
        skip();
        if (i == text.size()) return Monomial();
        throw std::invalid_argument("malformed monomial '" + std::string(text) + "'");
    }
    while (true) {
        skip();
        if (i >= text.size()) throw std::invalid_argument("malformed monomial '" + std::string(text) + "'");
        char c = text[i++];
        int gen;
        if (c == 'U') {
            gen = (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ? number() : 1;
        } else if (c == 'V') {
            gen = 2;
        } else {
            throw std::invalid_argument("unexpected '" + std::string(1, c) + "' in monomial '" + std::string(text) + "'");
        }
        if (gen < 1) throw std::invalid_argument("generator index must be positive");
        int exp = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
            ++i;
            exp = number();
        }
        syl.push_back({gen, exp});
        skip();
        if (i == text.size()) break;
        if (text[i] == '*') ++i;
    }
    for (const auto& s : syl)
        if (s.exp > max_exp) return std::nullopt;
    return Monomial::from_syllables(syl, max_exp);
}

namespace {

void extend(std::vector<Syllable>& cur, int len, int d, int max_len, int max_exp, std::vector<Monomial>& out) {
    out.push_back(*Monomial::from_syllables(cur, max_exp));
    for (int g = 1; g <= d; ++g) {
        if (!cur.empty() && cur.back().gen == g) continue;
        for (int e = 1; e <= max_exp && len + e <= max_len; ++e) {
            cur.push_back({g, e});
            extend(cur, len + e, d, max_len, max_exp, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<Monomial> all_monomials(int d, int max_len, int max_exp) {
    std::vector<Monomial> out;
    std::vector<Syllable> cur;
    extend(cur, 0, d, max_len, max_exp, out);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

std::size_t hash_value(const Monomial& m) noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& s : m.syllables()) {
        h ^= static_cast<std::size_t>(s.gen * 4 + s.exp);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace unipotent
