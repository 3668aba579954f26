#include "unipotent/grouprel.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace unipotent {

GroupWord::GroupWord(const std::vector<Letter>& letters) {
    for (const Letter& l : letters) {
        if (l.gen < 1) throw std::invalid_argument("generator index must be positive");
        if (l.exp == 0) continue;
        if (!letters_.empty() && letters_.back().gen == l.gen) {
            letters_.back().exp += l.exp;
            if (letters_.back().exp == 0) letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }
}

int GroupWord::length() const noexcept {
    int n = 0;
    for (const auto& l : letters_) n += std::abs(l.exp);
    return n;
}

int GroupWord::max_gen() const noexcept {
    int g = 0;
    for (const auto& l : letters_) g = std::max(g, l.gen);
    return g;
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l.exp = -l.exp;
    return GroupWord(out);
}

GroupWord GroupWord::power(int n) const {
    GroupWord base = n < 0 ? inverse() : *this;
    GroupWord out;
    for (int k = 0; k < std::abs(n); ++k) out = out * base;
    return out;
}

std::vector<int> GroupWord::exponent_sums(int d) const {
    std::vector<int> out(static_cast<std::size_t>(std::max(d, max_gen())), 0);
    for (const auto& l : letters_) out[static_cast<std::size_t>(l.gen - 1)] += l.exp;
    return out;
}

std::string GroupWord::to_string(bool aliases) const {
    if (letters_.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += '*';
        const Letter& l = letters_[i];
        if (aliases && l.gen <= 2)
            out += l.gen == 1 ? "a" : "b";
        else
            out += "y" + std::to_string(l.gen);
        if (l.exp != 1) out += "^" + std::to_string(l.exp);
    }
    return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    std::vector<Letter> all = a.letters_;
    all.insert(all.end(), b.letters_.begin(), b.letters_.end());
    return GroupWord(all);
}

GroupWord commutator(const GroupWord& x, const GroupWord& y) { return x.inverse() * y.inverse() * x * y; }

GroupWord commutator(const std::vector<GroupWord>& xs) {
    if (xs.empty()) return {};
    GroupWord acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = commutator(acc, xs[i]);
    return acc;
}

namespace {

class WordParser {
public:
    explicit WordParser(std::string_view t) : text_(t) {}

    GroupWord parse() {
        GroupWord w = product();
        skip();
        if (pos_ != text_.size()) fail("trailing input");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("bad group word '" + std::string(text_) + "': " + what);
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    int integer() {
        skip();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string s(text_.substr(start, pos_ - start));
        if (s.empty() || s == "-" || s == "+") fail("expected an integer");
        return std::stoi(s);
    }
    GroupWord product() {
        GroupWord w = factor();
        while (eat('*')) w = w * factor();
        return w;
    }
    GroupWord factor() {
        GroupWord base = atom();
        if (eat('^')) base = base.power(integer());
        return base;
    }
    GroupWord atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            GroupWord w = product();
            if (!eat(')')) fail("missing ')'");
            return w;
        }
        if (c == '[') {
            ++pos_;
            std::vector<GroupWord> parts{product()};
            while (eat(',')) parts.push_back(product());
            if (!eat(']')) fail("missing ']'");
            if (parts.size() < 2) fail("commutator needs two entries");
            return commutator(parts);
        }
        ++pos_;
        if (c == 'a') return GroupWord::gen(1);
        if (c == 'b') return GroupWord::gen(2);
        if (c == 'e' || c == '1') return {};
        if (c == 'y') {
            int g = integer();
            if (g < 1) fail("generator index must be positive");
            return GroupWord::gen(g);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GroupWord GroupWord::parse(std::string_view text) { return WordParser(text).parse(); }

Polynomial u_of_power(int m, Context ctx, int gen) {
    Polynomial p = Polynomial::gen(gen).scaled(m);
    if (ctx == Context::Cubic) p += Polynomial::gen(gen, 2).scaled(Coefficient(static_cast<long>(m) * (m - 1), 2));
    return p;
}

Polynomial expand_word(const GroupWord& w, Context ctx, const RewriteSystem* system) {
    const int cap = ctx == Context::Cubic ? 2 : 1;
    Polynomial acc;
    for (const Letter& l : w.letters()) {
        Polynomial u = u_of_power(l.exp, ctx, l.gen);
        if (ctx == Context::Quadratic) u = quadratic_normal_form(u);
        acc = acc + u + multiply(acc, u, cap);
        if (ctx == Context::Quadratic) acc = quadratic_normal_form(acc);
        if (system) acc = reduce(acc, *system);
    }
    return acc;
}

Polynomial quadratic_normal_form(const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> gens;
        bool zero = false;
        for (const auto& s : m.syllables()) {
            if (s.exp > 1) zero = true;
            gens.push_back(s.gen);
        }
        if (zero) continue;
        int sign = 1;
        // bubble sort counts transpositions
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j + 1 < gens.size() - i; ++j)
                if (gens[j] > gens[j + 1]) {
                    std::swap(gens[j], gens[j + 1]);
                    sign = -sign;
                }
        if (std::adjacent_find(gens.begin(), gens.end()) != gens.end()) continue;
        std::vector<Syllable> syl;
        for (int g : gens) syl.push_back({g, 1});
        out.add_term(*Monomial::from_syllables(syl, 1), c * Coefficient(sign));
    }
    return out;
}

Polynomial quadratic_commutator(int i, int j) {
    return quadratic_normal_form(multiply(Polynomial::gen(i), Polynomial::gen(j), 1).scaled(2));
}

}  // namespace unipotent
