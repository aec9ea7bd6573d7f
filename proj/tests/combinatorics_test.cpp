#include <doctest.h>

#include "rrsing/combinatorics.hpp"

using namespace rrsing;

namespace {
Rational q(long num, long den) { return Rational(Int(num), Int(den)); }

// independent oracle: solve (e^t + 1)/2 * sum E_j t^j/j! = 1 degree by degree,
// with the left factor written out as literal factorial fractions
std::vector<Rational> euler_oracle(int j_max) {
    std::vector<Rational> e(static_cast<std::size_t>(j_max) + 1);
    for (int n = 0; n <= j_max; ++n) {
        // coefficient of t^n in the product (ordinary power series):
        //   sum_{k=0}^{n} c_{n-k} * E_k / k!   with c_0 = 1, c_m = 1/(2 m!)
        Rational acc = n == 0 ? Rational(1) : Rational(0);
        for (int k = 0; k < n; ++k) {
            Rational c = q(1, 2) / Rational(factorial(static_cast<unsigned>(n - k)));
            acc -= c * e[static_cast<std::size_t>(k)] /
                   Rational(factorial(static_cast<unsigned>(k)));
        }
        e[static_cast<std::size_t>(n)] =
            acc * Rational(factorial(static_cast<unsigned>(n)));
    }
    return e;
}

// independent oracle for the delta = 2 tail: expand (1+x)^{-1} around x = 1,
// truncate at order 2, convert to the monomial basis
std::vector<Rational> inverse_series_tail_delta2() {
    // 1/(1+x) = 1/(2 + (x-1)) = 1/2 - (x-1)/4 + (x-1)^2/8 - ...
    Rational c0 = q(1, 2), c1 = q(-1, 4), c2 = q(1, 8);
    // expand c0 + c1 (x-1) + c2 (x-1)^2
    std::vector<Rational> m(3, Rational(0));
    m[0] = c0 - c1 + c2;
    m[1] = c1 - Rational(2) * c2;
    m[2] = c2;
    return m;
}
}  // namespace

TEST_CASE("stirling numbers of the first kind") {
    StirlingTable t = stirling_first(6);
    CHECK(t(0, 0) == Int(1));
    CHECK(t(3, 1) == Int(2));
    CHECK(t(3, 2) == Int(-3));
    CHECK(t(3, 3) == Int(1));
    for (int l = 0; l <= 6; ++l) CHECK(t(l, l) == Int(1));
    CHECK(t(4, 1) == Int(-6));  // t(t-1)(t-2)(t-3) = t^4 - 6t^3 + 11t^2 - 6t
    CHECK(t(4, 2) == Int(11));
    CHECK(t(5, 0) == Int(0));
}

TEST_CASE("euler numbers from the generating function") {
    EulerNumbers e = euler_numbers(12);
    CHECK(e[0] == Rational(1));
    CHECK(e[1] == q(-1, 2));
    CHECK(e[3] == q(1, 4));
    CHECK(e[5] == q(-1, 2));
    CHECK(e[7] == q(17, 8));
    CHECK(e[2] == Rational(0));
    CHECK(e[4] == Rational(0));
    CHECK(e[6] == Rational(0));

    std::vector<Rational> oracle = euler_oracle(12);
    for (int j = 0; j <= 12; ++j) CHECK(e[j] == oracle[static_cast<std::size_t>(j)]);
}

TEST_CASE("bernoulli numbers") {
    BernoulliNumbers b = bernoulli_numbers(12);
    CHECK(b[0] == Rational(1));
    CHECK(b[1] == q(-1, 2));
    CHECK(b[2] == q(1, 6));
    CHECK(b[3] == Rational(0));
    CHECK(b[4] == q(-1, 30));
    CHECK(b[8] == q(-1, 30));
    CHECK(b[12] == q(-691, 2730));
}

TEST_CASE("euler vs bernoulli cross-check") {
    CheckReport rep = euler_vs_bernoulli_check(20);
    CHECK(rep.pass);

    // j = 1: 2(-1)(2^2-1) B_2/2 = -1/2
    EulerNumbers e = euler_numbers(7);
    CHECK(e[1] == q(-1, 2));
    // j = 7 by hand: 2(-1)^7 (2^8 - 1) B_8 / 8 = -2 * 255 * (-1/30) / 8 = 17/8
    CHECK(e[7] == q(17, 8));

    // a corrupted table is caught and names the first bad index
    e.e[3] = -e.e[3];
    CheckReport bad = euler_vs_bernoulli_check(7, e);
    CHECK_FALSE(bad.pass);
    CHECK(bad.first_bad == 3);
}

TEST_CASE("TT coefficient matrix") {
    SUBCASE("delta 0") {
        TTCoefficients t = tt_coefficients(0);
        CHECK(t.t[0][0] == Rational(1));
    }
    SUBCASE("delta 1 by hand") {
        TTCoefficients t = tt_coefficients(1);
        CHECK(t.t[0][0] == Rational(1));
        CHECK(t.t[1][0] == Rational(-1));
        CHECK(t.t[1][1] == Rational(1));
        CHECK(t.t[0][1] == Rational(0));
    }
    SUBCASE("row sums collapse at r = 1") {
        for (int delta = 0; delta <= 6; ++delta) {
            TTCoefficients t = tt_coefficients(delta);
            for (int j = 0; j <= delta; ++j) {
                Rational sum = 0;
                for (int u = 0; u <= delta; ++u)
                    sum += t.t[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)];
                CHECK(sum == (j == 0 ? Rational(1) : Rational(0)));
            }
        }
    }
}

TEST_CASE("GTI coefficient tables match the dimension 1 and 2 corollaries") {
    GtiCoefficients g1 = gti_coefficients(1, 0);
    REQUIRE(g1.tail.size() == 2);
    CHECK(g1.tail[0] == q(3, 4));
    CHECK(g1.tail[1] == q(-1, 4));

    GtiCoefficients g3 = gti_coefficients(3, 0);
    REQUIRE(g3.tail.size() == 4);
    CHECK(g3.tail[0] == q(15, 16));
    CHECK(g3.tail[1] == q(-11, 16));
    CHECK(g3.tail[2] == q(5, 16));
    CHECK(g3.tail[3] == q(-1, 16));
}

TEST_CASE("GTI delta 2 tail against the shifted-series oracle") {
    GtiCoefficients g2 = gti_coefficients(2, 0);
    std::vector<Rational> oracle = inverse_series_tail_delta2();
    REQUIRE(g2.tail.size() == 3);
    CHECK(g2.tail[0] == oracle[0]);
    CHECK(g2.tail[1] == oracle[1]);
    CHECK(g2.tail[2] == oracle[2]);
    CHECK(g2.tail[0] == q(7, 8));
    CHECK(g2.tail[1] == q(-1, 2));
    CHECK(g2.tail[2] == q(1, 8));
}

TEST_CASE("GTI tails are lambda-independent and normalized") {
    for (int delta = 0; delta <= 10; ++delta) {
        GtiCoefficients g = gti_coefficients(delta, 0);
        Rational sum = 0;
        for (const auto& c : g.tail) sum += c;
        CHECK(sum == q(1, 2));
        GtiCoefficients shifted = gti_coefficients(delta, 4);
        CHECK(shifted.tail == g.tail);
        CHECK(shifted.tail_sign() == 1);
        CHECK(gti_coefficients(delta, 3).tail_sign() == -1);
    }
}

TEST_CASE("GTI congruence: (1+x) c(x) = 1 mod (x-1)^{delta+1}") {
    for (int delta = 0; delta <= 8; ++delta) {
        GtiCoefficients g = gti_coefficients(delta, 0);
        // p(x) = (1+x) c(x) - 1, then Taylor coefficients around 1 up to order delta
        std::vector<Rational> p(g.tail.size() + 1, Rational(0));
        for (std::size_t u = 0; u < g.tail.size(); ++u) {
            p[u] += g.tail[u];
            p[u + 1] += g.tail[u];
        }
        p[0] -= Rational(1);
        for (int k = 0; k <= delta; ++k) {
            Rational taylor = 0;
            for (std::size_t i = 0; i < p.size(); ++i)
                taylor += p[i] * binomial_poly(Rational(Int(static_cast<long>(i))),
                                               static_cast<unsigned>(k));
            CHECK(taylor == Rational(0));
        }
    }
}

TEST_CASE("kim alternating power sums") {
    EulerNumbers e = euler_numbers(10);
    SUBCASE("hand examples") {
        CHECK(alternating_power_sum(3, 2) == Int(3));
        CHECK(kim_formula(3, 2, e) == Rational(3));
        CHECK(alternating_power_sum(2, 0) == Int(0));  // 0^0 = 1: 1 - 1
        CHECK(kim_formula(2, 0, e) == Rational(0));
        for (int j = 1; j <= 10; ++j) {
            CHECK(alternating_power_sum(1, j) == Int(0));
            CHECK(kim_formula(1, j, e) == Rational(0));
        }
        CHECK(alternating_power_sum(1, 0) == Int(1));  // single 0^0 term
        CHECK(kim_formula(1, 0, e) == Rational(1));
    }
    SUBCASE("full range") {
        for (long n = 1; n <= 40; ++n)
            for (int j = 0; j <= 10; ++j)
                CHECK(kim_formula(n, j, e) == Rational(alternating_power_sum(n, j)));
    }
}

TEST_CASE("surface polynomial identity") {
    CHECK(surface_identity_check());

    // spot evaluations of both sides
    auto lhs = [](const Rational& x, const Rational& y) {
        return q(15, 16) - q(11, 16) * (x + y) + q(5, 16) * (x * x + x * y + y * y) -
               q(1, 16) * (x * x * x + x * x * y + y * y * x + y * y * y);
    };
    auto rhs = [](const Rational& x, const Rational& y) {
        Rational s = x + y - Rational(2);
        Rational xm = x - Rational(1), ym = y - Rational(1);
        return q(1, 4) - q(1, 8) * s - q(1, 16) * xm * ym + q(1, 8) * xm * ym * s +
               q(1, 16) * s * s - q(1, 16) * s * s * s;
    };
    CHECK(lhs(Rational(1), Rational(1)) == q(1, 4));
    CHECK(rhs(Rational(1), Rational(1)) == q(1, 4));
    CHECK(lhs(Rational(0), Rational(0)) == q(15, 16));
    CHECK(rhs(Rational(0), Rational(0)) == q(15, 16));
}

TEST_CASE("divisibility check") {
    CHECK_FALSE(divisibility_check({Int(1), Int(1), Int(1), Int(1)}, 0));
    CHECK(divisibility_check({Int(16), Int(16), Int(16), Int(16)}, 0));
    CHECK_THROWS_AS(divisibility_check({Int(1), Int(2)}, 0), std::out_of_range);
}
