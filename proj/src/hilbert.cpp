#include "rrsing/hilbert.hpp"

#include <algorithm>
#include <numeric>

namespace rrsing {

namespace {

// dense ascending integer polynomials
using ZPoly = std::vector<Int>;

void zp_trim(ZPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void zp_add_shifted(ZPoly& acc, const ZPoly& p, std::size_t shift, int sign) {
    if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, Int(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (sign > 0)
            acc[i + shift] += p[i];
        else
            acc[i + shift] -= p[i];
    }
}

// multiply by (1 - t^e)
ZPoly zp_mul_one_minus(const ZPoly& p, std::size_t e) {
    ZPoly out = p;
    zp_add_shifted(out, p, e, -1);
    zp_trim(out);
    return out;
}

bool mono_lt(const Monomial& a, const Monomial& b) {
    return mono_compare(a, b, OrderKind::grevlex) < 0;
}

}  // namespace

MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> generators) {
    for (const auto& g : generators)
        if (g.nvars() != nvars) throw std::invalid_argument("minimalize: wrong variable count");
    std::sort(generators.begin(), generators.end(), mono_lt);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::vector<Monomial> keep;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (const auto& k : keep) {
            // keep is sorted ascending; dividers have smaller or equal degree
            if (k.divides(generators[i])) {
                redundant = true;
                break;
            }
        }
        if (!redundant) keep.push_back(generators[i]);
    }
    return MonomialIdeal{nvars, std::move(keep)};
}

namespace {

// generators assumed minimal; recursion keeps them minimal
ZPoly numerator_rec(std::size_t nvars, std::vector<Monomial> gens) {
    if (gens.empty()) return {Int(1)};
    if (gens.front().is_one()) return {};  // unit ideal: N = 0
    if (gens.size() == 1)
        return zp_mul_one_minus({Int(1)}, gens.front().total_degree());

    // per-variable occurrence counts; pairwise coprime iff every variable
    // occurs in at most one generator
    std::vector<std::uint32_t> count(nvars, 0);
    bool coprime = true;
    for (const auto& g : gens)
        for (std::size_t v = 0; v < nvars; ++v)
            if (g.exponent(v) > 0) {
                if (++count[v] > 1) coprime = false;
            }
    if (coprime) {
        ZPoly out{Int(1)};
        for (const auto& g : gens) out = zp_mul_one_minus(out, g.total_degree());
        return out;
    }

    std::size_t pivot = static_cast<std::size_t>(
        std::max_element(count.begin(), count.end()) - count.begin());

    // I + (x_pivot): generators free of the pivot, plus the pivot itself
    std::vector<Monomial> plus;
    std::vector<std::uint32_t> e(nvars, 0);
    e[pivot] = 1;
    plus.emplace_back(e);
    // I : x_pivot: pivot exponents reduced by one
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.exponent(pivot) == 0) {
            plus.push_back(g);
            colon.push_back(g);
        } else {
            std::vector<std::uint32_t> ge(nvars);
            for (std::size_t v = 0; v < nvars; ++v) ge[v] = g.exponent(v);
            --ge[pivot];
            colon.emplace_back(std::move(ge));
        }
    }
    MonomialIdeal colon_min = minimalize(nvars, std::move(colon));

    ZPoly out = numerator_rec(nvars, std::move(plus));
    ZPoly colon_part = numerator_rec(nvars, std::move(colon_min.generators));
    zp_add_shifted(out, colon_part, 1, +1);
    zp_trim(out);
    return out;
}

}  // namespace

std::vector<Int> hilbert_numerator(const MonomialIdeal& ideal) {
    return numerator_rec(ideal.nvars, ideal.generators);
}

HilbertData hilbert_data(const MonomialIdeal& ideal) {
    return hilbert_data_from_numerator(hilbert_numerator(ideal), ideal.nvars);
}

HilbertData hilbert_data_from_numerator(std::vector<Int> numerator, std::size_t nvars) {
    HilbertData h;
    h.nvars = nvars;
    h.numerator = std::move(numerator);
    h.chi = 0;
    if (h.numerator.empty()) return h;  // unit ideal: empty scheme

    // cancel (1-t) factors: d = nvars - multiplicity of the root t=1
    ZPoly q = h.numerator;
    std::size_t cancelled = 0;
    auto value_at_one = [](const ZPoly& p) {
        Int s = 0;
        for (const auto& c : p) s += c;
        return s;
    };
    while (cancelled < nvars && sgn(value_at_one(q)) == 0) {
        // divide by (1 - t): r_i = sum_{k<=i} q_k
        ZPoly r(q.size() > 0 ? q.size() - 1 : 0, Int(0));
        Int acc = 0;
        for (std::size_t i = 0; i + 1 < q.size(); ++i) {
            acc += q[i];
            r[i] = acc;
        }
        zp_trim(r);
        q = std::move(r);
        ++cancelled;
    }
    h.dim = static_cast<int>(nvars - cancelled);

    if (h.dim == 0) return h;  // finite length: HP = 0, chi = 0

    // HP(m) = sum_i q_i * C(m - i + d - 1, d - 1), expanded symbolically
    const int d = h.dim;
    std::vector<Rational> hp(static_cast<std::size_t>(d), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (sgn(q[i]) == 0) continue;
        // product over j of (m - i + d - 1 - j), ascending coefficients in m
        std::vector<Rational> prod{Rational(1)};
        for (int j = 0; j < d - 1; ++j) {
            Rational c(Int(static_cast<long>(d) - 1 - static_cast<long>(j) -
                           static_cast<long>(i)));
            std::vector<Rational> next(prod.size() + 1, Rational(0));
            for (std::size_t k = 0; k < prod.size(); ++k) {
                next[k] += prod[k] * c;
                next[k + 1] += prod[k];
            }
            prod = std::move(next);
        }
        Rational scale = Rational(q[i]) / Rational(factorial(static_cast<unsigned>(d - 1)));
        for (std::size_t k = 0; k < prod.size(); ++k) hp[k] += prod[k] * scale;
    }
    while (!hp.empty() && hp.back().is_zero()) hp.pop_back();
    h.hp = std::move(hp);

    Rational chi0 = hp_eval(h, Rational(0));
    if (!chi0.is_integer()) throw std::logic_error("HP(0) is not an integer");
    h.chi = chi0.numerator();
    return h;
}

Rational hp_eval(const HilbertData& h, const Rational& m) {
    Rational acc = 0;
    Rational mp = 1;
    for (const auto& c : h.hp) {
        acc += c * mp;
        mp *= m;
    }
    return acc;
}

Int hilbert_function_bruteforce(const MonomialIdeal& ideal, unsigned m) {
    for (const auto& g : ideal.generators)
        if (g.is_one()) return 0;
    // enumerate exponent vectors of total degree m
    Int count = 0;
    std::vector<std::uint32_t> e(ideal.nvars, 0);
    std::size_t n = ideal.nvars;
    // recursive enumeration without heap churn
    auto rec = [&](auto&& self, std::size_t var, unsigned rest) -> void {
        if (var + 1 == n) {
            e[var] = rest;
            Monomial mono(std::vector<std::uint32_t>(e.begin(), e.end()));
            for (const auto& g : ideal.generators)
                if (g.divides(mono)) return;
            ++count;
            return;
        }
        for (unsigned k = 0; k <= rest; ++k) {
            e[var] = k;
            self(self, var + 1, rest - k);
        }
    };
    if (n == 0) return m == 0 ? Int(1) : Int(0);
    rec(rec, 0, m);
    return count;
}

MonomialIdeal leading_term_ideal(const GroebnerBasis& gb) {
    std::vector<Monomial> lms;
    lms.reserve(gb.elements.size());
    for (const auto& g : gb.elements) lms.push_back(g.leading_term().mono);
    return minimalize(gb.ring->nvars(), std::move(lms));
}

ChiComputation euler_characteristic_full(const Ideal& ideal, OrderKind order,
                                         const GbBudget& budget) {
    ChiComputation out;
    if (ideal.generators.empty()) {
        out.lead_terms = MonomialIdeal{ideal.ring->nvars(), {}};
    } else {
        GroebnerBasis gb = buchberger(ideal, order, budget);
        out.lead_terms = leading_term_ideal(gb);
        out.stats = gb.stats;
    }
    out.data = hilbert_data(out.lead_terms);
    return out;
}

HilbertData euler_characteristic_data(const Ideal& ideal, OrderKind order,
                                      const GbBudget& budget) {
    return euler_characteristic_full(ideal, order, budget).data;
}

Int euler_characteristic(const Ideal& ideal, OrderKind order, const GbBudget& budget) {
    return euler_characteristic_data(ideal, order, budget).chi;
}

}  // namespace rrsing
