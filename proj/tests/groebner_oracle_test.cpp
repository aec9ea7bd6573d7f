#include <doctest.h>

#include <algorithm>
#include <random>

#include "rrsing/groebner.hpp"

// Cross-checks the engine against a textbook Buchberger written entirely on
// the public polyring surface: no pair criteria, no basis retirement, plain
// division. The reduced basis is unique, so both routes must agree exactly.

using namespace rrsing;

namespace {

std::mt19937_64 rng(31415926);

Polynomial naive_normal_form(Polynomial f, const std::vector<Polynomial>& basis) {
    const Ring& ring = f.ring();
    Polynomial remainder = Polynomial::zero(ring);
    while (!f.is_zero()) {
        const Term& lt = f.leading_term();
        bool divided = false;
        for (const auto& g : basis) {
            const Term& gt = g.leading_term();
            if (!gt.mono.divides(lt.mono)) continue;
            Rational c = ring->normalize_coeff(lt.coeff * ring->coeff_inverse(gt.coeff));
            f = f - g.mono_multiple(lt.mono.divide_exact(gt.mono), c);
            divided = true;
            break;
        }
        if (!divided) {
            Polynomial head = Polynomial::from_terms(ring, {lt});
            remainder = remainder + head;
            f = f - head;
        }
    }
    return remainder;
}

std::vector<Polynomial> naive_reduced_basis(const Ideal& ideal, OrderKind order) {
    Ring ring = with_order(ideal.ring, order);
    std::vector<Polynomial> basis;
    for (const auto& g : ideal.generators) basis.push_back(g.to_ring(ring).monic());

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        Polynomial s = s_polynomial(basis[i], basis[j]);
        if (s.is_zero()) continue;
        Polynomial r = naive_normal_form(s, basis);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        for (std::size_t k = 0; k + 1 < basis.size(); ++k)
            pairs.emplace_back(k, basis.size() - 1);
    }

    // minimal set: drop any element whose leading monomial another divides
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < basis.size() && keep; ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_term().mono;
            const Monomial& mj = basis[j].leading_term().mono;
            if (mj == mi) {
                keep = j > i;  // one representative per repeated leading monomial
            } else if (mj.divides(mi)) {
                keep = false;
            }
        }
        if (keep) minimal.push_back(basis[i]);
    }
    // tail-reduce
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(naive_normal_form(minimal[i], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mono_compare(a.leading_term().mono, b.leading_term().mono, order) < 0;
    });
    return reduced;
}

Polynomial random_poly(const Ring& ring, int nterms, std::uint32_t max_exp) {
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<std::uint32_t> e(0, max_exp);
    std::vector<Term> terms;
    for (int i = 0; i < nterms; ++i) {
        std::vector<std::uint32_t> exps(ring->nvars());
        for (auto& x : exps) x = e(rng);
        terms.push_back({Monomial(std::move(exps)), Rational(coeff(rng))});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

void check_engine_matches_oracle(const Ideal& ideal, OrderKind order) {
    std::vector<Polynomial> expected = naive_reduced_basis(ideal, order);
    GroebnerBasis got = buchberger(ideal, order);
    REQUIRE(got.elements.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(got.elements[k] == expected[k]);
}

}  // namespace

TEST_CASE("engine output equals the textbook reduced basis on random ideals") {
    for (std::uint64_t chr : {std::uint64_t{0}, std::uint64_t{5}}) {
        Ring ring = make_ring({"x", "y", "z"}, chr);
        int done = 0;
        while (done < 25) {
            std::vector<Polynomial> gens;
            std::uniform_int_distribution<int> ngens(2, 3), nterms(1, 3);
            int g = ngens(rng);
            for (int k = 0; k < g; ++k) {
                Polynomial p = random_poly(ring, nterms(rng), 2);
                if (!p.is_zero()) gens.push_back(p);
            }
            if (gens.empty()) continue;
            Ideal ideal = make_ideal(ring, gens);
            for (OrderKind order : {OrderKind::grevlex, OrderKind::lex})
                check_engine_matches_oracle(ideal, order);
            ++done;
        }
    }
}

TEST_CASE("engine output equals the textbook reduced basis on the fixtures") {
    Ring ring = make_ring({"x", "y", "z"}, 0);
    std::vector<std::vector<std::string>> fixtures = {
        {"x + y", "x - y"},
        {"x^2", "x*y"},
        {"x^2 - y", "x*y - 1"},
        {"x^2 - y*z", "y^2 - x*z"},
        {"x*z - y^2", "x^2 - y*z", "z^2 - x*y"},
        {"x^2*y - 1", "x*y^2 - x"},
    };
    for (const auto& texts : fixtures) {
        std::vector<Polynomial> gens;
        for (const auto& t : texts) gens.push_back(parse_polynomial(t, ring));
        Ideal ideal = make_ideal(ring, gens);
        for (OrderKind order : {OrderKind::grevlex, OrderKind::lex})
            check_engine_matches_oracle(ideal, order);
    }
}

TEST_CASE("repeated runs are bitwise identical") {
    Ring ring = make_ring({"x", "y", "z"}, 5);
    Ideal ideal = make_ideal(ring, {parse_polynomial("x^2 - y*z", ring),
                                    parse_polynomial("y^3 - x*z^2", ring),
                                    parse_polynomial("x*y - z^2", ring)});
    GroebnerBasis a = buchberger(ideal, OrderKind::grevlex);
    GroebnerBasis b = buchberger(ideal, OrderKind::grevlex);
    REQUIRE(a.elements.size() == b.elements.size());
    for (std::size_t k = 0; k < a.elements.size(); ++k)
        CHECK(a.elements[k].str() == b.elements[k].str());
}
