#include "unipotent/coeff.hpp"

#include <algorithm>
#include <cctype>

namespace unipotent {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

InversionRequired::InversionRequired(long prime)
    : std::runtime_error("inversion of " + std::to_string(prime) + " required but not available in ring"),
      prime_(prime) {}

std::vector<long> prime_factors(const mpz_class& n) {
    if (n <= 0) throw std::invalid_argument("prime_factors: argument must be positive");
    std::vector<long> out;
    mpz_class rest = n;
    for (long d = 2; rest > 1; ++d) {
        if (mpz_class(d) * d > rest) {
            if (!rest.fits_slong_p()) throw std::overflow_error("prime_factors: residual prime too large");
            out.push_back(rest.get_si());
            break;
        }
        if (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(d))) {
            out.push_back(d);
            while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(d))) rest /= d;
        }
    }
    return out;
}

CoefficientRing CoefficientRing::integers() { return {Kind::Integers, {}}; }
CoefficientRing CoefficientRing::rationals() { return {Kind::Rationals, {}}; }

CoefficientRing CoefficientRing::localized(std::vector<long> primes) {
    if (primes.empty()) throw std::invalid_argument("localized ring needs at least one inverted prime");
    for (long p : primes)
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return {Kind::Localized, std::move(primes)};
}

CoefficientRing CoefficientRing::z16() { return localized({2, 3}); }

CoefficientRing CoefficientRing::from_flag(std::string_view flag) {
    if (flag == "z") return integers();
    if (flag == "z16") return z16();
    if (flag == "q") return rationals();
    throw std::invalid_argument("unknown ring '" + std::string(flag) + "' (expected z, z16 or q)");
}

bool CoefficientRing::admits(const Coefficient& c) const {
    switch (kind_) {
    case Kind::Rationals: return true;
    case Kind::Integers: return c.is_integer();
    case Kind::Localized: {
        mpz_class den = c.denominator();
        for (long p : primes_)
            while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) den /= p;
        return den == 1;
    }
    }
    return false;
}

void CoefficientRing::require(const Coefficient& c) const {
    if (admits(c)) return;
    for (long p : prime_factors(c.denominator()))
        if (std::find(primes_.begin(), primes_.end(), p) == primes_.end()) throw InversionRequired(p);
    throw InversionRequired(0);  // unreachable for a consistent ring
}

std::string CoefficientRing::name() const {
    switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::Localized: {
        long s = 1;
        for (long p : primes_) s *= p;
        return "Z[1/" + std::to_string(s) + "]";
    }
    }
    return "?";
}

std::string CoefficientRing::flag() const {
    if (kind_ == Kind::Integers) return "z";
    if (kind_ == Kind::Rationals) return "q";
    if (primes_ == std::vector<long>{2, 3}) return "z16";
    return name();
}

Coefficient::Coefficient(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Coefficient::Coefficient(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

Coefficient Coefficient::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    auto valid_int = [](std::string_view t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class d(den);
    if (d == 0) throw std::domain_error("zero denominator");
    return Coefficient(mpq_class(mpz_class(num), d));
}

std::string Coefficient::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Coefficient coeff_add(const Coefficient& a, const Coefficient& b, const CoefficientRing& ring) {
    Coefficient r = a + b;
    ring.require(r);
    return r;
}

Coefficient coeff_mul(const Coefficient& a, const Coefficient& b, const CoefficientRing& ring) {
    Coefficient r = a * b;
    ring.require(r);
    return r;
}

Coefficient coeff_div(const Coefficient& a, long n, const CoefficientRing& ring) {
    if (n == 0) throw std::domain_error("division by zero");
    Coefficient r(mpq_class(a.value() / mpq_class(n)));
    ring.require(r);
    return r;
}

Coefficient coeff_div(const Coefficient& a, const Coefficient& b, const CoefficientRing& ring) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    Coefficient r(mpq_class(a.value() / b.value()));
    ring.require(r);
    return r;
}

}  // namespace unipotent
