#include "rrsing/combinatorics.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "rrsing/polyring.hpp"

namespace rrsing {

const Int& StirlingTable::operator()(int l, int j) const {
    static const Int zero = 0;
    if (l < 0 || l > l_max) throw std::out_of_range("stirling: l out of range");
    if (j < 0 || j > l) return zero;
    return s[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
}

StirlingTable stirling_first(int l_max) {
    if (l_max < 0) throw std::invalid_argument("stirling_first: l_max must be >= 0");
    StirlingTable t;
    t.l_max = l_max;
    t.s.resize(static_cast<std::size_t>(l_max) + 1);
    t.s[0] = {Int(1)};
    // t(t-1)...(t-l+1) = (t - (l-1)) * [previous row]
    for (int l = 1; l <= l_max; ++l) {
        auto& row = t.s[static_cast<std::size_t>(l)];
        const auto& prev = t.s[static_cast<std::size_t>(l) - 1];
        row.assign(static_cast<std::size_t>(l) + 1, Int(0));
        for (int j = 0; j < l; ++j) {
            row[static_cast<std::size_t>(j) + 1] += prev[static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(j)] -= Int(l - 1) * prev[static_cast<std::size_t>(j)];
        }
    }
    return t;
}

EulerNumbers euler_numbers(int j_max) {
    if (j_max < 0) throw std::invalid_argument("euler_numbers: j_max must be >= 0");
    // Invert (e^t + 1)/2 as an exponential generating function:
    // with c_0 = 1 and c_k = 1/2 for k >= 1,
    //   sum_{k=0}^{n} C(n,k) c_{n-k} E_k = [n = 0].
    EulerNumbers out;
    out.e.resize(static_cast<std::size_t>(j_max) + 1);
    out.e[0] = Rational(1);
    const Rational half(Int(1), Int(2));
    for (int n = 1; n <= j_max; ++n) {
        Rational acc = 0;
        for (int k = 0; k < n; ++k)
            acc += Rational(binomial(Int(n), static_cast<unsigned>(k))) * out.e[static_cast<std::size_t>(k)];
        out.e[static_cast<std::size_t>(n)] = -half * acc;
    }
    return out;
}

BernoulliNumbers bernoulli_numbers(int n_max) {
    if (n_max < 0) throw std::invalid_argument("bernoulli_numbers: n_max must be >= 0");
    // sum_{k=0}^{n} C(n+1,k) B_k = [n = 0]
    BernoulliNumbers out;
    out.b.resize(static_cast<std::size_t>(n_max) + 1);
    out.b[0] = Rational(1);
    for (int n = 1; n <= n_max; ++n) {
        Rational acc = 0;
        for (int k = 0; k < n; ++k)
            acc += Rational(binomial(Int(n + 1), static_cast<unsigned>(k))) *
                   out.b[static_cast<std::size_t>(k)];
        out.b[static_cast<std::size_t>(n)] = -acc / Rational(Int(n + 1));
    }
    return out;
}

CheckReport euler_vs_bernoulli_check(int j_max) {
    return euler_vs_bernoulli_check(j_max, euler_numbers(j_max));
}

CheckReport euler_vs_bernoulli_check(int j_max, const EulerNumbers& series) {
    if (j_max < 1) throw std::invalid_argument("euler_vs_bernoulli_check: j_max must be >= 1");
    BernoulliNumbers b = bernoulli_numbers(j_max + 1);
    CheckReport rep;
    for (int j = 1; j <= j_max; ++j) {
        Int two_pow = 1;
        two_pow <<= (1 + j);
        Rational expr = Rational(Int(2)) * Rational(two_pow - 1) * b[j + 1] / Rational(Int(j + 1));
        if (j % 2 != 0) expr = -expr;
        if (!(expr == series[j])) {
            rep.pass = false;
            rep.first_bad = j;
            std::ostringstream os;
            os << "E_" << j << " = " << series[j].str() << " but the Bernoulli expression gives "
               << expr.str();
            rep.detail = os.str();
            return rep;
        }
    }
    rep.detail = "series and Bernoulli values agree for 1 <= j <= " + std::to_string(j_max);
    return rep;
}

TTCoefficients tt_coefficients(int delta) {
    if (delta < 0) throw std::invalid_argument("tt_coefficients: delta must be >= 0");
    StirlingTable s = stirling_first(delta);
    TTCoefficients out;
    out.delta = delta;
    out.t.assign(static_cast<std::size_t>(delta) + 1,
                 std::vector<Rational>(static_cast<std::size_t>(delta) + 1, Rational(0)));
    for (int j = 0; j <= delta; ++j) {
        for (int u = 0; u <= delta; ++u) {
            Rational acc = 0;
            for (int k = u; k <= delta; ++k) {
                Rational term = Rational(s(k, j)) /
                                Rational(factorial(static_cast<unsigned>(u)) *
                                         factorial(static_cast<unsigned>(k - u)));
                if ((k - u) % 2 != 0) term = -term;
                acc += term;
            }
            out.t[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)] = acc;
        }
    }
    return out;
}

GtiCoefficients gti_coefficients(int delta, int lambda) {
    if (delta < 0 || lambda < 0)
        throw std::invalid_argument("gti_coefficients: delta and lambda must be >= 0");
    static std::mutex memo_mutex;
    static std::map<int, std::vector<Rational>> tail_memo;
    std::vector<Rational> tail;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = tail_memo.find(delta);
        if (it != tail_memo.end()) tail = it->second;
    }
    if (tail.empty()) {
        TTCoefficients tt = tt_coefficients(delta);
        EulerNumbers e = euler_numbers(delta);
        const Rational half(Int(1), Int(2));
        tail.resize(static_cast<std::size_t>(delta) + 1);
        for (int u = 0; u <= delta; ++u) {
            Rational acc = 0;
            for (int j = 0; j <= delta; ++j)
                acc += e[j] * tt.t[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)];
            tail[static_cast<std::size_t>(u)] = half * acc;
        }
        std::lock_guard<std::mutex> lock(memo_mutex);
        tail_memo.emplace(delta, tail);
    }
    GtiCoefficients out;
    out.delta = delta;
    out.lambda = lambda;
    out.tail = std::move(tail);
    return out;
}

Int alternating_power_sum(long n, int j) {
    if (n < 1 || j < 0) throw std::invalid_argument("alternating_power_sum: need n >= 1, j >= 0");
    Int acc = 0;
    for (long k = 0; k < n; ++k) {
        Int p;  // k^j with 0^0 = 1
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
        if (k % 2 == 0)
            acc += p;
        else
            acc -= p;
    }
    return acc;
}

Rational kim_formula(long n, int j, const EulerNumbers& euler) {
    if (n < 1 || j < 0) throw std::invalid_argument("kim_formula: need n >= 1, j >= 0");
    if (euler.j_max() < j) throw std::invalid_argument("kim_formula: Euler table too short");
    const int sign_np1 = (n + 1) % 2 == 0 ? 1 : -1;
    Rational acc = 0;
    for (int l = 0; l < j; ++l) {
        Int npow;
        mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(j - l));
        acc += Rational(binomial(Int(j), static_cast<unsigned>(l))) * euler[l] * Rational(npow);
    }
    const Rational half(Int(1), Int(2));
    Rational result = half * Rational(sign_np1) * acc;
    result += euler[j] * half * Rational(Int(1 + sign_np1));
    return result;
}

bool surface_identity_check() {
    Ring ring = make_ring({"x", "y"}, 0);
    auto P = [&](const std::string& s) { return parse_polynomial(s, ring); };
    auto C = [&](long num, long den) {
        return Polynomial::constant(ring, Rational(Int(num), Int(den)));
    };

    Polynomial lhs = C(15, 16) - C(11, 16) * P("x + y") + C(5, 16) * P("x^2 + x*y + y^2") -
                     C(1, 16) * P("x^3 + x^2*y + y^2*x + y^3");

    Polynomial xm1 = P("x - 1");
    Polynomial ym1 = P("y - 1");
    Polynomial s2 = P("x + y - 2");
    Polynomial rhs = C(1, 4) - C(1, 8) * s2 - C(1, 16) * xm1 * ym1 +
                     C(1, 8) * (xm1 * ym1 * s2) + C(1, 16) * s2 * s2 - C(1, 16) * s2.pow(3);

    return lhs == rhs;
}

bool divisibility_check(const std::vector<Int>& a, int lambda) {
    if (lambda < 0 || a.size() < static_cast<std::size_t>(lambda) + 4)
        throw std::out_of_range("divisibility_check: table too short for lambda");
    const auto at = [&](int k) { return a[static_cast<std::size_t>(k)]; };
    Int v = 15 * at(lambda) - 11 * at(lambda + 1) + 5 * at(lambda + 2) - at(lambda + 3);
    return mpz_divisible_ui_p(v.get_mpz_t(), 16) != 0;
}

}  // namespace rrsing
