// Sparse noncommutative polynomials with exact coefficients.
#pragma once

#include "unipotent/coeff.hpp"
#include "unipotent/monomial.hpp"

#include <map>
#include <string>
#include <string_view>

namespace unipotent {

class Polynomial {
public:
    using Terms = std::map<Monomial, Coefficient, MonomialGreater>;

    Polynomial() = default;
    Polynomial(const Coefficient& c);  // NOLINT(google-explicit-constructor)
    Polynomial(const Monomial& m, const Coefficient& c = 1);  // NOLINT(google-explicit-constructor)

    static Polynomial gen(int g, int exp = 1) { return Polynomial(Monomial::letter(g, exp)); }
    /// Parses the text format; exponents above max_exp vanish.
    static Polynomial parse(std::string_view text, int max_exp = 2);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Coefficient coeff(const Monomial& m) const;
    /// Largest monomial; the polynomial must be nonzero.
    const Monomial& leading() const;
    int max_gen() const noexcept;
    int max_total_length() const noexcept;

    void add_term(const Monomial& m, const Coefficient& c);
    Polynomial scaled(const Coefficient& c) const;
    /// Drops every term whose total length exceeds max_len.
    Polynomial truncated(int max_len) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return a.scaled(-1); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Text format: terms descending, e.g. "U1*U2^2*U1 - 2*U2*U1"; d == 2 uses U, V.
    std::string to_string(int d = 2) const;

private:
    Terms terms_;
};

Polynomial multiply(const Polynomial& a, const Polynomial& b, int max_exp = 2);
Polynomial power(const Polynomial& p, int n, int max_exp = 2);

/// Ring homomorphism fixed by generator images. A generator without an image maps to itself.
/// When square_images holds an entry for g it replaces image(g)^2 on g^2 syllables.
Polynomial substitute(const Polynomial& p, const std::map<int, Polynomial>& images,
                      const std::map<int, Polynomial>& square_images = {}, int max_exp = 2);

}  // namespace unipotent
