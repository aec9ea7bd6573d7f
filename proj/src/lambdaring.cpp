#include "rrsing/lambdaring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rrsing/combinatorics.hpp"

namespace rrsing {

TruncRing::TruncRing(int nvars, int order) : nvars_(nvars), order_(order) {
    if (nvars < 1 || nvars > 8) throw std::invalid_argument("truncation ring: 1..8 generators");
    if (order < 0 || order > 16) throw std::invalid_argument("truncation ring: order 0..16");
    // graded enumeration of monomials of total degree <= order
    std::vector<std::uint8_t> e(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int var, int rest) -> void {
        if (var + 1 == nvars) {
            e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(rest);
            monos_.push_back(e);
            return;
        }
        for (int k = 0; k <= rest; ++k) {
            e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(k);
            self(self, var + 1, rest - k);
        }
    };
    for (int d = 0; d <= order; ++d) rec(rec, 0, d);

    std::map<std::vector<std::uint8_t>, int> index;
    for (std::size_t i = 0; i < monos_.size(); ++i) index[monos_[i]] = static_cast<int>(i);

    const std::size_t n = monos_.size();
    mul_.assign(n * n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            int deg = 0;
            std::vector<std::uint8_t> prod(static_cast<std::size_t>(nvars));
            for (int v = 0; v < nvars; ++v) {
                prod[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(
                    monos_[a][static_cast<std::size_t>(v)] + monos_[b][static_cast<std::size_t>(v)]);
                deg += prod[static_cast<std::size_t>(v)];
            }
            if (deg <= order) mul_[a * n + b] = index.at(prod);
        }
    }
}

std::string TruncRing::mono_name(std::size_t idx) const {
    const auto& e = monos_[idx];
    std::string s;
    for (int v = 0; v < nvars_; ++v) {
        if (e[static_cast<std::size_t>(v)] == 0) continue;
        if (!s.empty()) s += "*";
        s += "e" + std::to_string(v + 1);
        if (e[static_cast<std::size_t>(v)] > 1)
            s += "^" + std::to_string(e[static_cast<std::size_t>(v)]);
    }
    return s.empty() ? "1" : s;
}

TruncRingPtr make_trunc_ring(int nvars, int order) {
    return std::make_shared<const TruncRing>(nvars, order);
}

TruncElem::TruncElem(TruncRingPtr ring) : ring_(std::move(ring)), c_(ring_->size(), Rational(0)) {}

TruncElem TruncElem::scalar(TruncRingPtr ring, const Rational& c) {
    TruncElem e(std::move(ring));
    e.c_[0] = c;
    return e;
}

TruncElem TruncElem::generator(TruncRingPtr ring, int i) {
    if (i < 0 || i >= ring->nvars())
        throw std::out_of_range("truncation ring generator index out of range");
    TruncElem e(ring);
    if (ring->order() == 0) return e;  // eps is already truncated away
    // the degree-1 monomials follow the constant block in graded order
    for (std::size_t idx = 0; idx < ring->size(); ++idx) {
        const auto& exp = ring->exponents(idx);
        int deg = 0;
        for (auto x : exp) deg += x;
        if (deg == 1 && exp[static_cast<std::size_t>(i)] == 1) {
            e.c_[idx] = Rational(1);
            return e;
        }
    }
    throw std::logic_error("generator monomial not found");
}

bool TruncElem::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

namespace {
void check_same_ring(const TruncElem& a, const TruncElem& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("truncated elements from different rings");
}
}  // namespace

TruncElem TruncElem::operator-() const { return scaled(Rational(-1)); }

TruncElem operator+(const TruncElem& a, const TruncElem& b) {
    check_same_ring(a, b);
    TruncElem r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

TruncElem operator-(const TruncElem& a, const TruncElem& b) {
    check_same_ring(a, b);
    TruncElem r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

TruncElem operator*(const TruncElem& a, const TruncElem& b) {
    check_same_ring(a, b);
    TruncElem r(a.ring_);
    const std::size_t n = r.c_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.c_[j].is_zero()) continue;
            int k = a.ring_->mul_index(i, j);
            if (k >= 0) r.c_[static_cast<std::size_t>(k)] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncElem TruncElem::scaled(const Rational& c) const {
    TruncElem r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

TruncElem TruncElem::pow(unsigned n) const {
    TruncElem r = TruncElem::one(ring_);
    TruncElem base = *this;
    while (n) {
        if (n & 1) r = r * base;
        if (n >>= 1) base = base * base;
    }
    return r;
}

bool operator==(const TruncElem& a, const TruncElem& b) {
    if (a.ring_ != b.ring_) return false;
    return a.c_ == b.c_;
}

TruncElem TruncElem::invert() const {
    const Rational& aug = augmentation();
    if (aug.is_zero()) throw std::domain_error("not a unit: zero augmentation");
    // u = aug (1 - m) with m nilpotent of order <= N+1
    TruncElem m = TruncElem::one(ring_) - scaled(Rational(1) / aug);
    TruncElem acc = TruncElem::one(ring_);
    TruncElem p = TruncElem::one(ring_);
    for (int k = 1; k <= ring_->order(); ++k) {
        p = p * m;
        acc = acc + p;
    }
    return acc.scaled(Rational(1) / aug);
}

std::string TruncElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        os << (first ? "" : " + ") << c_[i].str();
        if (i != 0) os << "*" << ring_->mono_name(i);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

VirtualBundle make_bundle(TruncRingPtr ring, std::vector<TruncElem> plus,
                          std::vector<TruncElem> minus) {
    for (const auto& l : plus)
        if (l.ring() != ring || l.augmentation().is_zero())
            throw std::invalid_argument("bundle line must be a unit of the given ring");
    for (const auto& l : minus)
        if (l.ring() != ring || l.augmentation().is_zero())
            throw std::invalid_argument("bundle line must be a unit of the given ring");
    return VirtualBundle{std::move(ring), std::move(plus), std::move(minus)};
}

namespace {

// truncated t-series with TruncElem coefficients
using Series = std::vector<TruncElem>;

Series series_one(const TruncRingPtr& ring, unsigned order) {
    Series s(order + 1, TruncElem(ring));
    s[0] = TruncElem::one(ring);
    return s;
}

Series series_mul(const Series& a, const Series& b, const TruncRingPtr& ring) {
    Series out(a.size(), TruncElem(ring));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

Series series_inv(const Series& a, const TruncRingPtr& ring) {
    Series out(a.size(), TruncElem(ring));
    TruncElem c0 = a[0].invert();
    out[0] = c0;
    for (std::size_t k = 1; k < a.size(); ++k) {
        TruncElem acc(ring);
        for (std::size_t i = 1; i <= k; ++i) acc = acc + a[i] * out[k - i];
        out[k] = -(c0 * acc);
    }
    return out;
}

// 1 + c * l * t  (c = +-1)
Series series_linear(const TruncElem& line, int sign, unsigned order, const TruncRingPtr& ring) {
    Series s = series_one(ring, order);
    if (order >= 1) s[1] = sign > 0 ? line : -line;
    return s;
}

Series sym_series(const VirtualBundle& v, unsigned order) {
    Series s = series_one(v.ring, order);
    for (const auto& l : v.plus)
        s = series_mul(s, series_inv(series_linear(l, -1, order, v.ring), v.ring), v.ring);
    for (const auto& l : v.minus)
        s = series_mul(s, series_linear(l, -1, order, v.ring), v.ring);
    return s;
}

Series lam_series(const VirtualBundle& v, unsigned order) {
    Series s = series_one(v.ring, order);
    for (const auto& l : v.plus) s = series_mul(s, series_linear(l, +1, order, v.ring), v.ring);
    for (const auto& l : v.minus)
        s = series_mul(s, series_inv(series_linear(l, +1, order, v.ring), v.ring), v.ring);
    return s;
}

}  // namespace

TruncElem sym(const VirtualBundle& v, unsigned k) { return sym_series(v, k)[k]; }

TruncElem lam(const VirtualBundle& v, unsigned k) { return lam_series(v, k)[k]; }

TruncElem adams2(const VirtualBundle& v) { return sym(v, 2) - lam(v, 2); }

TruncElem theta2(const VirtualBundle& v) {
    if (!v.minus.empty())
        throw std::invalid_argument("theta2 is only defined for effective bundles");
    TruncElem r = TruncElem::one(v.ring);
    for (const auto& l : v.plus) r = r * (TruncElem::one(v.ring) + l);
    return r;
}

IdentityReport tt_identity_check(const TruncElem& unit, int n_max) {
    if (unit.augmentation().is_zero())
        throw std::invalid_argument("tt_identity_check needs a unit");
    const int delta = unit.ring()->order();
    TTCoefficients tt = tt_coefficients(delta);

    // powers of the unit, reused across the x^j contraction
    std::vector<TruncElem> upow;
    upow.push_back(TruncElem::one(unit.ring()));
    for (int u = 1; u <= delta; ++u) upow.push_back(upow.back() * unit);

    for (int n = 0; n <= n_max; ++n) {
        TruncElem direct = unit.pow(static_cast<unsigned>(n));
        TruncElem via_tt(unit.ring());
        Rational npow = 1;
        for (int j = 0; j <= delta; ++j) {
            TruncElem row(unit.ring());
            for (int u = 0; u <= delta; ++u)
                row = row + upow[static_cast<std::size_t>(u)].scaled(
                                tt.t[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)]);
            via_tt = via_tt + row.scaled(npow);
            npow *= Rational(Int(n));
        }
        if (!(direct == via_tt)) {
            IdentityReport rep;
            rep.pass = false;
            rep.detail = "TT identity fails at n = " + std::to_string(n) + ": " + direct.str() +
                         " vs " + via_tt.str();
            return rep;
        }
    }
    return {true, "r^n = TT(n, r-1) for n = 0.." + std::to_string(n_max)};
}

int rde_min_delta(const VirtualBundle& v) {
    if (!v.minus.empty())
        throw std::invalid_argument("the theta2 inversion identity needs an effective bundle");
    // Sym^n(V) is polynomial in n of degree at most N + rank - 1: the
    // nilpotency order of (O(1) - 1) on the projectivization picks up the
    // fiber dimension rank - 1 on top of the truncation order.
    return v.ring->order() + static_cast<int>(v.plus.size()) - 1;
}

IdentityReport verify_rde(const VirtualBundle& v, int delta) {
    for (const auto& l : v.plus)
        if (!(l.augmentation() == Rational(1)))
            throw std::invalid_argument("verify_rde needs lines of augmentation 1");
    if (delta < rde_min_delta(v))
        throw std::invalid_argument("verify_rde needs delta >= " +
                                    std::to_string(rde_min_delta(v)) +
                                    " (truncation order + rank - 1) for this bundle");
    TruncElem lhs = theta2(v).invert();
    GtiCoefficients g = gti_coefficients(delta, 0);
    TruncElem rhs(v.ring);
    for (int u = 0; u <= delta; ++u)
        rhs = rhs + sym(v, static_cast<unsigned>(u)).scaled(g.tail[static_cast<std::size_t>(u)]);
    if (lhs == rhs) return {true, "theta2(V)^{-1} matches the Sym^u combination"};
    IdentityReport rep;
    rep.pass = false;
    rep.detail = "lhs = " + lhs.str() + "\nrhs = " + rhs.str();
    return rep;
}

IdentityReport verify_sym_lambda_duality(const VirtualBundle& v, int order) {
    if (order < 0) throw std::invalid_argument("verify_sym_lambda_duality: order must be >= 0");
    Series s = sym_series(v, static_cast<unsigned>(order));
    Series l = lam_series(v, static_cast<unsigned>(order));
    // Lambda_{-t}: alternate coefficient signs
    for (std::size_t k = 1; k < l.size(); k += 2) l[k] = -l[k];
    Series prod = series_mul(s, l, v.ring);
    for (std::size_t k = 0; k < prod.size(); ++k) {
        TruncElem expect = k == 0 ? TruncElem::one(v.ring) : TruncElem(v.ring);
        if (!(prod[k] == expect)) {
            IdentityReport rep;
            rep.pass = false;
            rep.detail = "Sym_t * Lambda_{-t} differs from 1 first at t^" + std::to_string(k);
            return rep;
        }
    }
    return {true, "Sym_t(V) Lambda_{-t}(V) = 1 up to t^" + std::to_string(order)};
}

}  // namespace rrsing
