#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace rrsing {

using Int = mpz_class;

/// Exact rational number, always stored normalized: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. Equality is structural.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);

    static Rational parse(const std::string& text);

    Int numerator() const { return Int(v_.get_num()); }
    Int denominator() const { return Int(v_.get_den()); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Serialized form: "n" for integers, "a/b" otherwise (b > 0).
    std::string str() const;

private:
    mpq_class v_;
};

/// The field F_p for a word-sized prime p. Construction checks primality.
/// p = 2 is a legal field for raw polynomial arithmetic; geometric scenario
/// code rejects it separately (2 must be invertible there).
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t reduce(const Int& n) const;
    /// Image of an exact rational; denominator must be coprime to p.
    std::uint64_t reduce(const Rational& q) const;

private:
    std::uint64_t p_;
};

/// A residue with its modulus attached; arithmetic requires equal moduli.
class PrimeFieldElement {
public:
    PrimeFieldElement(std::uint64_t residue, const PrimeField& field);

    std::uint64_t residue() const { return residue_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return residue_ == 0; }

    friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b);
    friend PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b);
    friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b);
    friend PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b);
    friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        return a.p_ == b.p_ && a.residue_ == b.residue_;
    }

    PrimeFieldElement inverse() const;

private:
    PrimeFieldElement(std::uint64_t r, std::uint64_t p) : residue_(r), p_(p) {}
    std::uint64_t residue_;
    std::uint64_t p_;
};

PrimeFieldElement field_inverse(const PrimeFieldElement& a);

bool is_prime_u64(std::uint64_t n);

Int factorial(unsigned n);

/// C(n, k) for any integer n (negative allowed) and k >= 0, via the falling
/// factorial n(n-1)...(n-k+1)/k!.
Int binomial(const Int& n, unsigned k);

/// The binomial polynomial x(x-1)...(x-k+1)/k! evaluated at an arbitrary
/// rational point. Agrees with binomial() at integer points and extends the
/// Hilbert polynomial to arguments outside the Serre range.
Rational binomial_poly(const Rational& x, unsigned k);

}  // namespace rrsing
