// Exact coefficients over Z, a localization Z[1/S], or Q.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unipotent {

class Coefficient;

/// Raised when an operation needs the inverse of a prime the ring does not contain.
class InversionRequired : public std::runtime_error {
public:
    explicit InversionRequired(long prime);
    long prime() const noexcept { return prime_; }

private:
    long prime_;
};

class CoefficientRing {
public:
    enum class Kind { Integers, Localized, Rationals };

    static CoefficientRing integers();
    static CoefficientRing rationals();
    /// Z[1/p : p in primes]. Throws std::invalid_argument on an empty set or a non-prime.
    static CoefficientRing localized(std::vector<long> primes);
    /// Z[1/6], the default ring.
    static CoefficientRing z16();
    /// Accepts the CLI selectors "z", "z16", "q".
    static CoefficientRing from_flag(std::string_view flag);

    Kind kind() const noexcept { return kind_; }
    const std::vector<long>& inverted_primes() const noexcept { return primes_; }

    bool admits(const Coefficient& c) const;
    /// Throws InversionRequired with the smallest offending prime when !admits(c).
    void require(const Coefficient& c) const;

    std::string name() const;
    std::string flag() const;

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

private:
    CoefficientRing(Kind kind, std::vector<long> primes) : kind_(kind), primes_(std::move(primes)) {}

    Kind kind_;
    std::vector<long> primes_;
};

/// Reduced fraction with positive denominator. Arithmetic is exact over Q;
/// ring membership is checked by CoefficientRing.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Coefficient(long num, long den);
    explicit Coefficient(mpq_class q);

    static Coefficient parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& value() const noexcept { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string to_string() const;

    Coefficient& operator+=(const Coefficient& o) { value_ += o.value_; return *this; }
    Coefficient& operator-=(const Coefficient& o) { value_ -= o.value_; return *this; }
    Coefficient& operator*=(const Coefficient& o) { value_ *= o.value_; return *this; }

    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
    friend Coefficient operator-(const Coefficient& a) { return Coefficient(mpq_class(-a.value_)); }

    friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

Coefficient coeff_add(const Coefficient& a, const Coefficient& b, const CoefficientRing& ring);
Coefficient coeff_mul(const Coefficient& a, const Coefficient& b, const CoefficientRing& ring);
/// a / n, failing with InversionRequired when the quotient leaves the ring.
Coefficient coeff_div(const Coefficient& a, long n, const CoefficientRing& ring);
Coefficient coeff_div(const Coefficient& a, const Coefficient& b, const CoefficientRing& ring);

/// Primes dividing n (n > 0), ascending.
std::vector<long> prime_factors(const mpz_class& n);

}  // namespace unipotent
