#include "rrsing/groebner.hpp"

#include <unordered_set>

#include "gb_engine.hpp"

namespace rrsing {

Ideal make_ideal(Ring ring, std::vector<Polynomial> generators) {
    for (auto& g : generators) {
        if (!g.ring()->same_domain(*ring))
            throw std::invalid_argument("ideal generator from a different ring");
        if (g.is_zero()) throw std::invalid_argument("ideal generator must be nonzero");
        if (g.ring() != ring) g = g.to_ring(ring);
    }
    return Ideal{std::move(ring), std::move(generators)};
}

namespace {

using detail::EMono;
using detail::EPoly;
using detail::ETerm;

template <class Ops>
EPoly<Ops> to_engine(const Polynomial& p, const Ops& ops);

template <>
EPoly<detail::FpOps> to_engine(const Polynomial& p, const detail::FpOps&) {
    EPoly<detail::FpOps> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        EMono m = EMono::one();
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) m.e[i] = t.mono.exponent(i);
        m.deg = t.mono.total_degree();
        out.push_back({m, t.coeff.numerator().get_ui()});
    }
    return out;
}

template <>
EPoly<detail::QOps> to_engine(const Polynomial& p, const detail::QOps&) {
    EPoly<detail::QOps> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        EMono m = EMono::one();
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) m.e[i] = t.mono.exponent(i);
        m.deg = t.mono.total_degree();
        out.push_back({m, t.coeff});
    }
    return out;
}

template <class Ops>
Rational coeff_back(const typename Ops::C& c);

template <>
Rational coeff_back<detail::FpOps>(const std::uint64_t& c) {
    return Rational(Int(static_cast<unsigned long>(c)));
}

template <>
Rational coeff_back<detail::QOps>(const Rational& c) {
    return c;
}

template <class Ops>
Polynomial from_engine(const EPoly<Ops>& p, const Ring& ring) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    const std::size_t n = ring->nvars();
    for (const auto& t : p) {
        std::vector<std::uint32_t> e(t.m.e.begin(), t.m.e.begin() + n);
        terms.push_back({Monomial(std::move(e)), coeff_back<Ops>(t.c)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

void check_engine_ring(const Ring& ring) {
    if (ring->nvars() > detail::kMaxEngineVars)
        throw std::invalid_argument("the Groebner engine supports at most " +
                                    std::to_string(detail::kMaxEngineVars) + " variables");
}

template <class Ops>
GroebnerBasis run_buchberger(const Ideal& ideal, const Ring& oring, const Ops& ops,
                             const GbBudget& budget) {
    detail::Engine<Ops> engine(ops, oring->nvars(), oring->order(), budget);
    std::vector<EPoly<Ops>> input;
    input.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators) input.push_back(to_engine(g.to_ring(oring), ops));
    std::vector<EPoly<Ops>> basis = engine.reduced_basis(std::move(input));
    GroebnerBasis out{oring, oring->order(), {}, engine.stats()};
    out.elements.reserve(basis.size());
    for (const auto& b : basis) out.elements.push_back(from_engine<Ops>(b, oring));
    return out;
}

template <class Ops>
Polynomial run_normal_form(const Polynomial& f, const GroebnerBasis& gb, const Ops& ops) {
    GbBudget unlimited;
    unlimited.max_degree = UINT32_MAX;
    detail::Engine<Ops> engine(ops, gb.ring->nvars(), gb.order, unlimited);
    std::vector<EPoly<Ops>> basis;
    basis.reserve(gb.elements.size());
    for (const auto& g : gb.elements) basis.push_back(to_engine(g, ops));
    EPoly<Ops> r = engine.normal_form(to_engine(f.to_ring(gb.ring), ops), basis);
    return from_engine<Ops>(r, gb.ring);
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, OrderKind order, const GbBudget& budget) {
    check_engine_ring(ideal.ring);
    Ring oring = with_order(ideal.ring, order);
    if (ideal.ring->characteristic() == 0) {
        return run_buchberger(ideal, oring, detail::QOps{}, budget);
    }
    detail::FpOps ops{ideal.ring->characteristic()};
    return run_buchberger(ideal, oring, ops, budget);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!f.ring()->same_domain(*gb.ring))
        throw std::invalid_argument("normal_form: polynomial from a different ring");
    check_engine_ring(gb.ring);
    if (gb.elements.empty()) return f.to_ring(gb.ring);
    if (gb.ring->characteristic() == 0)
        return run_normal_form(f, gb, detail::QOps{});
    detail::FpOps ops{gb.ring->characteristic()};
    return run_normal_form(f, gb, ops);
}

Ideal ideal_power(const Ideal& ideal, unsigned n) {
    if (n == 0)
        throw std::invalid_argument(
            "ideal_power: n must be >= 1 (represent the unit ideal explicitly)");
    const std::size_t g = ideal.generators.size();
    std::vector<Polynomial> out;
    std::unordered_set<std::string> seen;
    // multisets of size n over g generators
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
        Polynomial prod = ideal.generators[pick[0]];
        for (std::size_t i = 1; i < n; ++i) prod = prod * ideal.generators[pick[i]];
        if (!prod.is_zero() && seen.insert(prod.str()).second) out.push_back(std::move(prod));
        // next nondecreasing index vector
        bool advanced = false;
        for (std::size_t i = n; i-- > 0;) {
            if (pick[i] + 1 < g) {
                ++pick[i];
                for (std::size_t j = i + 1; j < n; ++j) pick[j] = pick[i];
                advanced = true;
                break;
            }
        }
        if (!advanced) return make_ideal(ideal.ring, std::move(out));
    }
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!a.ring->same_domain(*b.ring))
        throw std::invalid_argument("ideal_sum: ideals from different rings");
    std::vector<Polynomial> out;
    std::unordered_set<std::string> seen;
    for (const auto& g : a.generators)
        if (seen.insert(g.str()).second) out.push_back(g);
    for (const auto& g : b.generators) {
        Polynomial h = g.to_ring(a.ring);
        if (seen.insert(h.str()).second) out.push_back(std::move(h));
    }
    return make_ideal(a.ring, std::move(out));
}

}  // namespace rrsing
