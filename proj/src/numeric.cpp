#include "rrsing/numeric.hpp"

#include <cctype>

namespace rrsing {

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool is_prime_u64(std::uint64_t n) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(n), 0, 0, &n);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 63))
        throw std::invalid_argument("prime field modulus must be < 2^63");
    if (!is_prime_u64(p))
        throw std::invalid_argument("prime field modulus " + std::to_string(p) + " is not prime");
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p_;
    std::uint64_t base = a % p_;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const Int& n) const {
    Int m = n % Int(static_cast<unsigned long>(p_));
    if (sgn(m) < 0) m += Int(static_cast<unsigned long>(p_));
    return m.get_ui();
}

std::uint64_t PrimeField::reduce(const Rational& q) const {
    std::uint64_t den = reduce(q.denominator());
    if (den == 0)
        throw std::domain_error("rational with denominator divisible by the characteristic");
    return mul(reduce(q.numerator()), inv(den));
}

PrimeFieldElement::PrimeFieldElement(std::uint64_t residue, const PrimeField& field)
    : residue_(residue % field.modulus()), p_(field.modulus()) {}

namespace {
void check_same_modulus(std::uint64_t a, std::uint64_t b) {
    if (a != b) throw std::invalid_argument("prime field elements with different moduli");
}
}  // namespace

namespace {
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}
}  // namespace

PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same_modulus(a.p_, b.p_);
    std::uint64_t s = a.residue_ + b.residue_;
    return {s >= a.p_ ? s - a.p_ : s, a.p_};
}

PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same_modulus(a.p_, b.p_);
    return {a.residue_ >= b.residue_ ? a.residue_ - b.residue_ : a.residue_ + a.p_ - b.residue_,
            a.p_};
}

PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same_modulus(a.p_, b.p_);
    return {mulmod(a.residue_, b.residue_, a.p_), a.p_};
}

PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same_modulus(a.p_, b.p_);
    return a * b.inverse();
}

PrimeFieldElement PrimeFieldElement::inverse() const {
    if (residue_ == 0) throw std::domain_error("inverse of zero in F_p");
    return {powmod(residue_, p_ - 2, p_), p_};
}

PrimeFieldElement field_inverse(const PrimeFieldElement& a) { return a.inverse(); }

Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(const Int& n, unsigned k) {
    Int num = 1;
    for (unsigned i = 0; i < k; ++i) num *= n - static_cast<long>(i);
    Int den = factorial(k);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // falling factorial of k consecutive integers is always divisible by k!
    if (sgn(r) != 0) throw std::logic_error("binomial: non-exact division");
    return q;
}

Rational binomial_poly(const Rational& x, unsigned k) {
    Rational num = 1;
    for (unsigned i = 0; i < k; ++i) num *= x - Rational(Int(static_cast<long>(i)));
    return num / Rational(factorial(k));
}

}  // namespace rrsing
