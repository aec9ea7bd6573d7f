#include <doctest.h>

#include <random>
#include <sstream>

#include "rrsing/polyring.hpp"

using namespace rrsing;

namespace {

std::mt19937_64 rng(987654321);

Monomial random_mono(std::size_t nvars, std::uint32_t max_exp) {
    std::uniform_int_distribution<std::uint32_t> d(0, max_exp);
    std::vector<std::uint32_t> e(nvars);
    for (auto& x : e) x = d(rng);
    return Monomial(e);
}

Polynomial random_poly(const Ring& ring, int nterms) {
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<Term> terms;
    for (int i = 0; i < nterms; ++i)
        terms.push_back({random_mono(ring->nvars(), 4), Rational(coeff(rng))});
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

TEST_CASE("parsing the curve generator over F5") {
    Ring ring = make_ring({"x", "y", "z"}, 5);
    Polynomial p = parse_polynomial("x*z", ring);
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms()[0].mono.exponent(0) == 1);
    CHECK(p.terms()[0].mono.exponent(1) == 0);
    CHECK(p.terms()[0].mono.exponent(2) == 1);
    CHECK(p.terms()[0].coeff == Rational(1));
}

TEST_CASE("parsing expands powers and cancels") {
    Ring ring = make_ring({"x", "y"}, 0);
    CHECK(parse_polynomial("(x+y)^2", ring) == parse_polynomial("x^2 + 2*x*y + y^2", ring));
    CHECK(parse_polynomial("x - x", ring).is_zero());
    CHECK(parse_polynomial("x - x", ring).terms().empty());
}

TEST_CASE("parser rejects bad input with positions") {
    Ring ring = make_ring({"x", "y"}, 0);
    CHECK_THROWS_AS(parse_polynomial("x + w", ring), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2x", ring), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^", ring), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^99999999999", ring), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x+y", ring), ParseError);
    try {
        parse_polynomial("x + w", ring);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
        CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
    }
}

TEST_CASE("grevlex picks the right leading term") {
    Ring ring = make_ring({"x", "y"}, 0);
    Polynomial p = parse_polynomial("x^2*y + x*y^2", ring);
    CHECK(mono_str(p.leading_term().mono, *ring) == "x^2*y");
    // lex agrees here
    Ring lexr = with_order(ring, OrderKind::lex);
    CHECK(mono_str(p.to_ring(lexr).leading_term().mono, *lexr) == "x^2*y");
}

TEST_CASE("leading_term under an explicit order") {
    Ring ring = make_ring({"x", "y"}, 0);
    // grevlex ranks y^3 above x^2, lex the other way around
    Polynomial p = parse_polynomial("x^2 + y^3", ring);
    CHECK(mono_str(leading_term(p, OrderKind::grevlex).mono, *ring) == "y^3");
    CHECK(mono_str(leading_term(p, OrderKind::lex).mono, *ring) == "x^2");
    CHECK(leading_term(p, OrderKind::lex).coeff == Rational(1));
    CHECK_THROWS_AS(leading_term(Polynomial::zero(ring), OrderKind::lex), std::domain_error);
}

TEST_CASE("polynomial arithmetic") {
    Ring ring = make_ring({"x"}, 0);
    CHECK(parse_polynomial("(x+1)*(x-1)", ring) == parse_polynomial("x^2 - 1", ring));

    Ring f5 = make_ring({"x", "y"}, 5);
    Polynomial xy = parse_polynomial("x*y", f5);
    CHECK(xy.scaled(Rational(3)).scaled(Rational(2)) == xy);  // 6 = 1 mod 5

    CHECK_THROWS_AS(parse_polynomial("x", ring) + parse_polynomial("x", f5),
                    std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::zero(ring).leading_term(), std::domain_error);
}

TEST_CASE("s-polynomials") {
    Ring ring = make_ring({"x", "y"}, 0);
    SUBCASE("monomial pair cancels completely") {
        Polynomial f = parse_polynomial("x^2", ring);
        Polynomial g = parse_polynomial("x*y", ring);
        CHECK(s_polynomial(f, g).is_zero());
    }
    SUBCASE("the classic textbook pair") {
        Polynomial f = parse_polynomial("x^2 - y", ring);
        Polynomial g = parse_polynomial("x*y - 1", ring);
        CHECK(s_polynomial(f, g) == parse_polynomial("x - y^2", ring));
    }
    SUBCASE("equal inputs") {
        Polynomial f = parse_polynomial("x^2 - y", ring);
        CHECK(s_polynomial(f, f).is_zero());
    }
    CHECK_THROWS_AS(s_polynomial(Polynomial::zero(ring), parse_polynomial("x", ring)),
                    std::domain_error);
}

TEST_CASE("print/parse round trip on random polynomials") {
    for (std::uint64_t chr : {std::uint64_t{0}, std::uint64_t{5}}) {
        Ring ring = make_ring({"x", "y", "z"}, chr);
        for (int i = 0; i < 100; ++i) {
            Polynomial p = random_poly(ring, 6);
            CHECK(parse_polynomial(p.str(), ring) == p);
        }
    }
}

TEST_CASE("multiplication is commutative and distributive") {
    Ring ring = make_ring({"x", "y"}, 0);
    for (int i = 0; i < 60; ++i) {
        Polynomial a = random_poly(ring, 4), b = random_poly(ring, 4), c = random_poly(ring, 4);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("monomial orders are multiplicative") {
    for (OrderKind k : {OrderKind::grevlex, OrderKind::lex}) {
        for (int i = 0; i < 200; ++i) {
            Monomial a = random_mono(3, 5), b = random_mono(3, 5), c = random_mono(3, 5);
            int ab = mono_compare(a, b, k);
            if (ab == 0) continue;
            CHECK(mono_compare(a * c, b * c, k) == ab);
        }
    }
}

TEST_CASE("monomial total degree stays consistent") {
    for (int i = 0; i < 100; ++i) {
        Monomial a = random_mono(4, 6), b = random_mono(4, 6);
        std::uint64_t d = 0;
        Monomial ab = a * b;
        for (std::size_t v = 0; v < ab.nvars(); ++v) d += ab.exponent(v);
        CHECK(ab.total_degree() == d);
        CHECK(Monomial::lcm(a, b).divides(a * b));
        if (a.divides(b)) CHECK(b.divide_exact(a) * a == b);
    }
}

TEST_CASE("ideal files parse with scenario headers and report line numbers") {
    SUBCASE("plain file") {
        std::istringstream in(
            "# the squared curve\n"
            "char 5\n"
            "vars x y z\n"
            "x*z\n"
            "z^3\n");
        IdealFile f = read_ideal_file(in);
        CHECK(f.ring->characteristic() == 5);
        CHECK(f.ring->vars() == std::vector<std::string>{"x", "y", "z"});
        REQUIRE(f.generators.size() == 2);
        CHECK(f.generators[1] == parse_polynomial("z^3", f.ring));
        CHECK_FALSE(f.has_scenario);
    }
    SUBCASE("scenario header") {
        std::istringstream in(
            "[scenario]\n"
            "type segre-square\n"
            "char 5\n"
            "vars x0 x1 x2\n"
            "x0*x2\n"
            "x2^3\n");
        IdealFile f = read_ideal_file(in);
        CHECK(f.has_scenario);
        CHECK(f.scenario_type == "segre-square");
        CHECK(f.generators.size() == 2);
    }
    SUBCASE("parse errors carry the line number") {
        std::istringstream in("char 0\nvars x\nx + w\n");
        try {
            read_ideal_file(in);
            FAIL("expected an error");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
    SUBCASE("missing header") {
        std::istringstream in("vars x\nx\n");
        CHECK_THROWS_AS(read_ideal_file(in), std::runtime_error);
    }
}
