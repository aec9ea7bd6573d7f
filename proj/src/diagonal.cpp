#include "rrsing/diagonal.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "rrsing/cache.hpp"
#include "rrsing/combinatorics.hpp"

namespace rrsing {

namespace {

std::vector<std::string> segre_vars(int rows) {
    std::vector<std::string> vars;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j)
            vars.push_back("z" + std::to_string(i) + std::to_string(j));
    return vars;
}

std::size_t z_index(int rows, int i, int j) {
    return static_cast<std::size_t>(i * rows + j);
}

Polynomial z_var(const Ring& ring, int rows, int i, int j) {
    return Polynomial::variable(ring, z_index(rows, i, j));
}

std::vector<Polynomial> segre_minors(const Ring& ring, int rows) {
    std::vector<Polynomial> out;
    for (int i1 = 0; i1 < rows; ++i1)
        for (int i2 = i1 + 1; i2 < rows; ++i2)
            for (int j1 = 0; j1 < rows; ++j1)
                for (int j2 = j1 + 1; j2 < rows; ++j2)
                    out.push_back(z_var(ring, rows, i1, j1) * z_var(ring, rows, i2, j2) -
                                  z_var(ring, rows, i1, j2) * z_var(ring, rows, i2, j1));
    return out;
}

std::vector<Polynomial> symmetry_forms(const Ring& ring, int rows) {
    std::vector<Polynomial> out;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < rows; ++j)
            out.push_back(z_var(ring, rows, i, j) - z_var(ring, rows, j, i));
    return out;
}

// sorted index multiset of an exponent vector, e.g. x0*x2^2 -> {0, 2, 2}
std::vector<int> index_multiset(const Monomial& m) {
    std::vector<int> out;
    for (std::size_t v = 0; v < m.nvars(); ++v)
        for (std::uint32_t k = 0; k < m.exponent(v); ++k) out.push_back(static_cast<int>(v));
    return out;
}

// all index multisets of total degree d over {0, 1, 2}
std::vector<std::vector<int>> degree_multisets(int d) {
    std::vector<std::vector<int>> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) {
            std::vector<int> ms;
            for (int k = 0; k < a; ++k) ms.push_back(0);
            for (int k = 0; k < b; ++k) ms.push_back(1);
            for (int k = 0; k < d - a - b; ++k) ms.push_back(2);
            out.push_back(std::move(ms));
        }
    return out;
}

// one coherent substitution of g(x) * m(y) (or mirrored): for every term of
// g, pair its sorted x-indices positionwise against the arrangement of the
// other factor's indices
Polynomial translate(const Ring& ring, int rows, const Polynomial& g,
                     const std::vector<int>& other_arrangement, bool gen_is_x_side) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
        std::vector<int> own = index_multiset(t.mono);
        std::vector<std::uint32_t> e(ring->nvars(), 0);
        for (std::size_t k = 0; k < own.size(); ++k) {
            int i = gen_is_x_side ? own[k] : other_arrangement[k];
            int j = gen_is_x_side ? other_arrangement[k] : own[k];
            ++e[z_index(rows, i, j)];
        }
        terms.push_back({Monomial(e), t.coeff});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

void append_unique(std::vector<Polynomial>& out, std::unordered_set<std::string>& seen,
                   Polynomial p) {
    if (p.is_zero()) return;
    if (seen.insert(p.str()).second) out.push_back(std::move(p));
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hash_scenario(const std::string& kind, std::uint64_t chr,
                          const std::vector<Polynomial>& curve_gens) {
    std::string acc = "rrsing-scenario-1|" + kind + "|char=" + std::to_string(chr) + "|";
    std::vector<std::string> gens;
    for (const auto& g : curve_gens) gens.push_back(g.str());
    std::sort(gens.begin(), gens.end());
    for (const auto& g : gens) acc += g + ";";
    static const char* digits = "0123456789abcdef";
    std::uint64_t v = fnv1a64(acc);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace

DiagonalScenario build_segre_square(const std::vector<Polynomial>& curve_gens,
                                    std::uint64_t characteristic) {
    if (characteristic == 2)
        throw std::invalid_argument("the squared-curve scenario needs 2 invertible (char != 2)");
    const int rows = 3;
    DiagonalScenario s;
    s.kind = "segre-square";
    s.characteristic = characteristic;
    s.ring = make_ring(segre_vars(rows), characteristic);
    s.curve_ring = curve_gens.empty()
                       ? make_ring({"x0", "x1", "x2"}, characteristic)
                       : curve_gens.front().ring();
    if (s.curve_ring->nvars() != 3)
        throw std::invalid_argument("curve generators must live in a 3-variable ring");
    if (s.curve_ring->characteristic() != characteristic)
        throw std::invalid_argument("curve ring characteristic mismatch");

    std::unordered_set<std::string> seen;
    for (const auto& g : curve_gens) {
        if (g.is_zero() || g.degree() == 0)
            throw std::invalid_argument("curve generator must be homogeneous of degree >= 1");
        if (!g.homogeneous())
            throw std::invalid_argument("curve generator must be homogeneous: " + g.str());
        s.curve_generators.push_back(g);
        const int d = static_cast<int>(g.degree());
        for (auto& other : degree_multisets(d)) {
            std::vector<int> arr = other;  // sorted ascending
            do {
                append_unique(s.ambient, seen, translate(s.ring, rows, g, arr, true));
                append_unique(s.ambient, seen, translate(s.ring, rows, g, arr, false));
            } while (std::next_permutation(arr.begin(), arr.end()));
        }
    }
    for (auto& m : segre_minors(s.ring, rows)) append_unique(s.ambient, seen, std::move(m));
    s.diagonal_forms = symmetry_forms(s.ring, rows);
    s.scenario_hash = hash_scenario(s.kind, characteristic, s.curve_generators);
    return s;
}

DiagonalScenario build_p1p1_square(std::uint64_t characteristic) {
    if (characteristic == 2)
        throw std::invalid_argument("the squared-curve scenario needs 2 invertible (char != 2)");
    const int rows = 2;
    DiagonalScenario s;
    s.kind = "p1p1";
    s.characteristic = characteristic;
    s.ring = make_ring(segre_vars(rows), characteristic);
    s.ambient = segre_minors(s.ring, rows);
    s.diagonal_forms = symmetry_forms(s.ring, rows);
    s.scenario_hash = hash_scenario(s.kind, characteristic, {});
    return s;
}

ChiSequence import_chi(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n_start") || !j.contains("chi"))
        throw std::invalid_argument("chi table JSON must be {\"n_start\":1,\"chi\":[...]}");
    if (!j.at("n_start").is_number_integer() || j.at("n_start").get<int>() != 1)
        throw std::invalid_argument("chi table must start at n_start = 1");
    if (!j.at("chi").is_array() || j.at("chi").empty())
        throw std::invalid_argument("chi table must be a nonempty array");
    ChiSequence out;
    for (const auto& v : j.at("chi")) {
        if (!v.is_number_integer())
            throw std::invalid_argument("chi table entries must be integers");
        out.chi.push_back(v.get<long long>());
        out.provenance.push_back(Provenance::imported);
    }
    return out;
}

namespace {

long long to_ll(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("chi does not fit a machine integer");
    return v.get_si();
}

}  // namespace

ChiResult chi_sequence(const DiagonalScenario& s, const ChiOptions& opts) {
    if (opts.n_max < 1) throw std::invalid_argument("chi_sequence: n_max must be >= 1");
    ChiResult result;
    Ideal forms = make_ideal(s.ring, s.diagonal_forms);
    for (int n = 1; n <= opts.n_max; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        Ideal power_n = ideal_power(forms, static_cast<unsigned>(n));
        std::vector<Polynomial> gens = s.ambient;
        for (auto& g : power_n.generators) gens.push_back(std::move(g));
        Ideal full = make_ideal(s.ring, std::move(gens));
        const std::string hash = stable_ideal_hash(full, OrderKind::grevlex);

        if (opts.cache_dir) {
            if (auto entry = cache_load(*opts.cache_dir, hash, n)) {
                std::vector<Int> num;
                for (long long c : entry->hilbert_numerator) num.emplace_back(static_cast<long>(c));
                HilbertData h = hilbert_data_from_numerator(std::move(num), s.ring->nvars());
                result.seq.chi.push_back(to_ll(h.chi));
                result.seq.provenance.push_back(Provenance::computed);
                result.meta.push_back({true, 0.0});
                continue;
            }
        }

        ChiComputation comp;
        try {
            comp = euler_characteristic_full(full, OrderKind::grevlex, opts.per_n_budget);
        } catch (const BudgetExhausted& e) {
            result.complete = false;
            result.incomplete_reason = "budget exhausted at n = " + std::to_string(n) + ": " +
                                       e.what();
            return result;
        }
        double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        result.seq.chi.push_back(to_ll(comp.data.chi));
        result.seq.provenance.push_back(Provenance::computed);
        result.meta.push_back({false, wall});

        if (opts.cache_dir) {
            GbCacheEntry entry;
            entry.input_hash = hash;
            entry.order = order_name(OrderKind::grevlex);
            entry.characteristic = s.characteristic;
            entry.vars = s.ring->vars();
            for (const auto& m : comp.lead_terms.generators)
                entry.lead_monomials.push_back(mono_str(m, *s.ring));
            for (const auto& c : comp.data.numerator)
                entry.hilbert_numerator.push_back(to_ll(c));
            entry.wall_time_ms = static_cast<std::int64_t>(wall * 1000.0);
            entry.n = n;
            cache_store(*opts.cache_dir, entry);
        }
    }
    return result;
}

Int curve_euler_characteristic(const DiagonalScenario& s, const GbBudget& budget) {
    if (s.kind != "segre-square")
        throw std::invalid_argument("curve chi is only defined for the segre-square scenario");
    Ideal curve = make_ideal(s.curve_ring, s.curve_generators);
    return euler_characteristic(curve, OrderKind::grevlex, budget);
}

GradedPieces graded_pieces(const ChiSequence& chi) {
    GradedPieces out;
    long long prev = 0;
    for (long long c : chi.chi) {
        out.a.push_back(c - prev);
        prev = c;
    }
    return out;
}

int max_lambda_for(const GradedPieces& a, int delta) {
    return static_cast<int>(a.a.size()) - delta - 1;
}

Rational chi_gti(const GradedPieces& a, int delta, int lambda) {
    if (delta < 0 || lambda < 0)
        throw std::invalid_argument("chi_gti: delta and lambda must be >= 0");
    if (static_cast<int>(a.a.size()) < lambda + delta + 1)
        throw std::out_of_range("chi_gti: table too short, need chi up to n = " +
                                std::to_string(lambda + delta + 1));
    GtiCoefficients g = gti_coefficients(delta, lambda);
    Rational tail = 0;
    for (int u = 0; u <= delta; ++u)
        tail += g.tail[static_cast<std::size_t>(u)] *
                Rational(Int(static_cast<long>(a.a[static_cast<std::size_t>(u + lambda)])));
    if (g.tail_sign() < 0) tail = -tail;
    Rational prefix = 0;
    for (int k = 0; k < lambda; ++k) {
        Rational term(Int(static_cast<long>(a.a[static_cast<std::size_t>(k)])));
        if (g.prefix_sign(k) < 0) term = -term;
        prefix += term;
    }
    return tail + prefix;
}

std::optional<int> detect_stabilization(const std::vector<Rational>& values) {
    if (values.empty()) return std::nullopt;
    if (values.size() == 1) return 0;
    std::size_t i = values.size() - 1;
    if (!(values[i] == values[i - 1])) return std::nullopt;
    while (i > 0 && values[i - 1] == values.back()) --i;
    return static_cast<int>(i);
}

GtiChiReport gti_report(const GradedPieces& a, int delta, int lambda_max,
                        const Rational& reference) {
    GtiChiReport rep;
    rep.delta = delta;
    rep.lambda_max = lambda_max;
    rep.reference = reference;
    for (int l = 0; l <= lambda_max; ++l) rep.values.push_back(chi_gti(a, delta, l));
    rep.lambda_star = detect_stabilization(rep.values);
    rep.stable_matches_reference =
        rep.lambda_star.has_value() && rep.values.back() == reference;
    return rep;
}

}  // namespace rrsing
