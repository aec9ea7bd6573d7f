#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rrsing/numeric.hpp"

namespace rrsing {

/// Q[eps_1..eps_r] / (monomials of total degree > N): the split-bundle
/// truncation model in which every (line - 1) is nilpotent.
class TruncRing {
public:
    TruncRing(int nvars, int order);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    std::size_t size() const { return monos_.size(); }  // monomials of degree <= N
    const std::vector<std::uint8_t>& exponents(std::size_t idx) const { return monos_[idx]; }
    /// Index of the product monomial, or -1 when it falls out of the truncation.
    int mul_index(std::size_t a, std::size_t b) const { return mul_[a * monos_.size() + b]; }
    std::string mono_name(std::size_t idx) const;

private:
    int nvars_;
    int order_;
    std::vector<std::vector<std::uint8_t>> monos_;  // graded, index 0 = 1
    std::vector<int> mul_;
};

using TruncRingPtr = std::shared_ptr<const TruncRing>;

TruncRingPtr make_trunc_ring(int nvars, int order);

/// Element of the truncation, dense over the ring's monomial basis.
class TruncElem {
public:
    explicit TruncElem(TruncRingPtr ring);
    static TruncElem scalar(TruncRingPtr ring, const Rational& c);
    static TruncElem one(TruncRingPtr ring) { return scalar(std::move(ring), Rational(1)); }
    static TruncElem generator(TruncRingPtr ring, int i);  // eps_i

    const TruncRingPtr& ring() const { return ring_; }
    const Rational& coeff(std::size_t idx) const { return c_[idx]; }
    Rational& coeff(std::size_t idx) { return c_[idx]; }
    const Rational& augmentation() const { return c_[0]; }
    bool is_zero() const;

    TruncElem operator-() const;
    friend TruncElem operator+(const TruncElem& a, const TruncElem& b);
    friend TruncElem operator-(const TruncElem& a, const TruncElem& b);
    friend TruncElem operator*(const TruncElem& a, const TruncElem& b);
    TruncElem scaled(const Rational& c) const;
    TruncElem pow(unsigned n) const;
    friend bool operator==(const TruncElem& a, const TruncElem& b);

    /// Multiplicative inverse via the geometric series around the
    /// augmentation; requires augmentation != 0.
    TruncElem invert() const;

    std::string str() const;

private:
    TruncRingPtr ring_;
    std::vector<Rational> c_;
};

/// Formal difference of multisets of line elements (each a unit of the
/// truncation). rank = |plus| - |minus|.
struct VirtualBundle {
    TruncRingPtr ring;
    std::vector<TruncElem> plus;
    std::vector<TruncElem> minus;

    int rank() const { return static_cast<int>(plus.size()) - static_cast<int>(minus.size()); }
};

VirtualBundle make_bundle(TruncRingPtr ring, std::vector<TruncElem> plus,
                          std::vector<TruncElem> minus = {});

/// Coefficient of t^k in Sym_t(V) = prod_plus (1 - l_i t)^{-1} * prod_minus (1 - m_j t).
TruncElem sym(const VirtualBundle& v, unsigned k);
/// Coefficient of t^k in Lambda_t(V) = prod_plus (1 + l_i t) * prod_minus (1 + m_j t)^{-1}.
TruncElem lam(const VirtualBundle& v, unsigned k);
/// psi^2 = Sym^2 - Lambda^2.
TruncElem adams2(const VirtualBundle& v);
/// Theta^2 = prod over plus lines of (1 + l_i); rejects properly virtual input.
TruncElem theta2(const VirtualBundle& v);

struct IdentityReport {
    bool pass = true;
    std::string detail;
};

/// r^n == TT(n, r-1) through the Stirling coefficient table, for n = 0..n_max.
IdentityReport tt_identity_check(const TruncElem& unit, int n_max);

/// Smallest delta for which the theta2-inversion identity is quoted: the
/// degree bound N + rank - 1 on n -> Sym^n(V), i.e. the nilpotency order of
/// (O(1) - 1) on the projectivization, minus 1.
int rde_min_delta(const VirtualBundle& v);

/// invert(theta2(V)) == sum_u c_u(delta) sym(V, u), exactly. Requires
/// effective V with augmentation-1 lines and delta >= rde_min_delta(v).
IdentityReport verify_rde(const VirtualBundle& v, int delta);

/// Sym_t(V) * Lambda_{-t}(V) == 1 coefficientwise up to t^order.
IdentityReport verify_sym_lambda_duality(const VirtualBundle& v, int order);

}  // namespace rrsing
