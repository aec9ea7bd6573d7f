#pragma once

#include <string>
#include <vector>

#include "rrsing/numeric.hpp"

namespace rrsing {

/// Signed Stirling numbers of the first kind:
///   t(t-1)...(t-l+1) = sum_j s(l,j) t^j,  with the empty product = 1 at l=0.
struct StirlingTable {
    int l_max;
    std::vector<std::vector<Int>> s;  // s[l][j], 0 <= j <= l <= l_max

    const Int& operator()(int l, int j) const;
};

StirlingTable stirling_first(int l_max);

/// Coefficients of 2/(e^t + 1) = sum_j E_j t^j / j!. E_0 = 1, E_1 = -1/2,
/// and E_j = 0 for even j >= 2.
struct EulerNumbers {
    std::vector<Rational> e;  // e[j]
    const Rational& operator[](int j) const { return e.at(static_cast<std::size_t>(j)); }
    int j_max() const { return static_cast<int>(e.size()) - 1; }
};

EulerNumbers euler_numbers(int j_max);

/// Coefficients of t/(e^t - 1) = sum_n B_n t^n / n! (so B_1 = -1/2).
struct BernoulliNumbers {
    std::vector<Rational> b;
    const Rational& operator[](int n) const { return b.at(static_cast<std::size_t>(n)); }
};

BernoulliNumbers bernoulli_numbers(int n_max);

struct CheckReport {
    bool pass = true;
    int first_bad = -1;
    std::string detail;
};

/// Asserts E_j == 2 (-1)^j (2^{1+j} - 1) B_{j+1} / (j+1) exactly for
/// 1 <= j <= j_max; a mismatch names the first bad j.
CheckReport euler_vs_bernoulli_check(int j_max);
CheckReport euler_vs_bernoulli_check(int j_max, const EulerNumbers& series);

/// T[j][u] = sum_{k=u}^{delta} (-1)^{k-u} s(k,j) / (u! (k-u)!): the expansion
/// of the binomial series TT(x, r-1) = sum_j ( sum_u T[j][u] r^u ) x^j valid
/// once (r-1)^{delta+1} = 0.
struct TTCoefficients {
    int delta;
    std::vector<std::vector<Rational>> t;  // t[j][u], 0 <= j,u <= delta
};

TTCoefficients tt_coefficients(int delta);

/// The correction-term coefficient table: tail c_u(delta) weighting the
/// graded pieces a_{u+lambda}, the alternating prefix signs, and the overall
/// (-1)^lambda tail sign.
struct GtiCoefficients {
    int delta;
    int lambda;
    std::vector<Rational> tail;  // c_u(delta), u = 0..delta

    int prefix_sign(int k) const { return k % 2 == 0 ? 1 : -1; }  // k < lambda
    int tail_sign() const { return lambda % 2 == 0 ? 1 : -1; }
};

GtiCoefficients gti_coefficients(int delta, int lambda);

/// sum_{k=0}^{n-1} (-1)^k k^j by direct summation, with 0^0 = 1.
Int alternating_power_sum(long n, int j);

/// The closed form for the same sum:
///   ((-1)^{n+1}/2) sum_{l=0}^{j-1} C(j,l) E_l n^{j-l} + (E_j/2)(1 + (-1)^{n+1}).
Rational kim_formula(long n, int j, const EulerNumbers& euler);

/// Coefficientwise equality over Q of the degree-3 two-variable identity that
/// turns the dim<=2 correction coefficients 15/16, -11/16, 5/16, -1/16 into
/// the classical surface Riemann-Roch combination.
bool surface_identity_check();

/// 15 a_l - 11 a_{l+1} + 5 a_{l+2} - a_{l+3} == 0 (mod 16).
bool divisibility_check(const std::vector<Int>& a, int lambda);

}  // namespace rrsing
