#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "rrsing/numeric.hpp"

namespace rrsing {

enum class OrderKind { grevlex, lex };

std::string order_name(OrderKind k);
OrderKind order_from_name(const std::string& name);

/// Immutable descriptor of a polynomial ring: named variables, coefficient
/// domain (Q when characteristic == 0, F_p otherwise) and the monomial order
/// under which polynomials of this ring are kept canonical.
class RingDesc {
public:
    RingDesc(std::vector<std::string> vars, std::uint64_t characteristic, OrderKind order);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    std::uint64_t characteristic() const { return char_; }
    OrderKind order() const { return order_; }
    int var_index(const std::string& name) const;  // -1 when absent

    /// Reduce an exact rational into the coefficient domain. For F_p the
    /// result is the integer residue in [0, p) as a Rational.
    Rational normalize_coeff(const Rational& c) const;
    Rational coeff_inverse(const Rational& c) const;

    bool same_domain(const RingDesc& o) const {
        return vars_ == o.vars_ && char_ == o.char_;
    }

private:
    std::vector<std::string> vars_;
    std::uint64_t char_;
    OrderKind order_;
};

using Ring = std::shared_ptr<const RingDesc>;

Ring make_ring(std::vector<std::string> vars, std::uint64_t characteristic,
               OrderKind order = OrderKind::grevlex);
/// Same variables and domain, different canonical order.
Ring with_order(const Ring& ring, OrderKind order);

/// Exponent vector with cached total degree. Value semantics.
class Monomial {
public:
    Monomial() : deg_(0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);
    static Monomial one(std::size_t nvars);

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exponent(std::size_t i) const { return e_[i]; }
    std::uint64_t total_degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide_exact(const Monomial& o) const;  // *this / o
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg_ == b.deg_ && a.e_ == b.e_;
    }

private:
    boost::container::small_vector<std::uint32_t, 10> e_;
    std::uint64_t deg_;
};

/// Three-way comparison under a monomial order: negative when a < b.
int mono_compare(const Monomial& a, const Monomial& b, OrderKind k);

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse multivariate polynomial in canonical form: nonzero coefficients
/// reduced into the ring's domain, monomials strictly descending in the
/// ring's order. The zero polynomial has an empty term list.
class Polynomial {
public:
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
    static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(Ring ring, const Rational& c);
    static Polynomial variable(Ring ring, std::size_t i);
    static Polynomial from_terms(Ring ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
    std::uint64_t degree() const;  // of the zero polynomial: 0

    const Term& leading_term() const;  // throws on zero

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    Polynomial mono_multiple(const Monomial& m, const Rational& c) const;
    Polynomial pow(std::uint32_t n) const;
    Polynomial monic() const;  // throws on zero
    bool homogeneous() const;

    /// Re-canonicalize into a ring with the same variables/domain but a
    /// possibly different order.
    Polynomial to_ring(const Ring& other) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string str() const;

private:
    Ring ring_;
    std::vector<Term> terms_;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := variable | integer | '(' expr ')'
/// Multiplication is always explicit; "2x" is rejected.
Polynomial parse_polynomial(const std::string& text, const Ring& ring);

/// Leading term of f under an arbitrary order (re-sorting when it differs
/// from the ring's canonical one). Throws on the zero polynomial.
Term leading_term(const Polynomial& f, OrderKind order);

/// S(f,g) = (lcm/lt(f))*f - (lcm/lt(g))*g, normalized so that both leading
/// terms cancel. Throws on zero input or ring mismatch.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

std::string mono_str(const Monomial& m, const RingDesc& ring);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Contents of a `.ideal` file: `char <p|0>`, `vars <name>...`, then one
/// generator expression per nonempty non-# line.
struct IdealFile {
    Ring ring;
    std::vector<Polynomial> generators;
    // optional [scenario] header
    bool has_scenario = false;
    std::string scenario_type;
};

IdealFile read_ideal_file(std::istream& in, OrderKind order = OrderKind::grevlex);
IdealFile read_ideal_file(const std::string& path, OrderKind order = OrderKind::grevlex);

}  // namespace rrsing
