#include "rrsing/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rrsing/combinatorics.hpp"
#include "rrsing/diagonal.hpp"
#include "rrsing/groebner.hpp"
#include "rrsing/hilbert.hpp"
#include "rrsing/lambdaring.hpp"
#include "rrsing/numeric.hpp"
#include "rrsing/polyring.hpp"

namespace rrsing {

namespace {

using nlohmann::json;

enum class Format { pretty, json, tsv };

Format parse_format(const std::string& s) {
    if (s == "pretty") return Format::pretty;
    if (s == "json") return Format::json;
    if (s == "tsv") return Format::tsv;
    throw CLI::ValidationError("--format must be one of pretty|json|tsv");
}

// ---------------------------------------------------------------------------
// verify

struct SuiteResult {
    std::string name;
    bool pass;
    std::string detail;
};

SuiteResult suite_stirling() {
    const int l_max = 12;
    StirlingTable t = stirling_first(l_max);
    // independent expansion of the falling factorial
    for (int l = 0; l <= l_max; ++l) {
        std::vector<Int> poly{Int(1)};  // ascending coefficients
        for (int i = 0; i < l; ++i) {
            std::vector<Int> next(poly.size() + 1, Int(0));
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] += poly[k];
                next[k] -= Int(i) * poly[k];
            }
            poly = std::move(next);
        }
        for (int j = 0; j <= l; ++j) {
            if (poly[static_cast<std::size_t>(j)] != t(l, j))
                return {"stirling_falling_factorial", false,
                        "mismatch at (l,j) = (" + std::to_string(l) + "," + std::to_string(j) + ")"};
        }
    }
    return {"stirling_falling_factorial", true, ""};
}

SuiteResult suite_euler_vs_bernoulli() {
    EulerNumbers e = euler_numbers(20);
    const char* fault = std::getenv("RRSING_FAULT");
    if (fault && std::string(fault) == "flip-e3") e.e[3] = -e.e[3];
    CheckReport rep = euler_vs_bernoulli_check(20, e);
    return {"euler_vs_bernoulli", rep.pass, rep.detail};
}

SuiteResult suite_kim() {
    EulerNumbers e = euler_numbers(10);
    for (long n = 1; n <= 40; ++n)
        for (int j = 0; j <= 10; ++j) {
            if (!(kim_formula(n, j, e) == Rational(alternating_power_sum(n, j))))
                return {"kim_alternating_power_sum", false,
                        "mismatch at n = " + std::to_string(n) + ", j = " + std::to_string(j)};
        }
    return {"kim_alternating_power_sum", true, ""};
}

SuiteResult suite_gti_tail_sum() {
    const Rational half(Int(1), Int(2));
    for (int d = 0; d <= 10; ++d) {
        GtiCoefficients g = gti_coefficients(d, 0);
        Rational sum = 0;
        for (const auto& c : g.tail) sum += c;
        if (!(sum == half))
            return {"gti_tail_normalization", false, "sum != 1/2 at delta = " + std::to_string(d)};
    }
    return {"gti_tail_normalization", true, ""};
}

SuiteResult suite_gti_congruence() {
    // (1+x) * sum_u c_u x^u == 1 modulo (x-1)^{delta+1}
    for (int d = 0; d <= 8; ++d) {
        GtiCoefficients g = gti_coefficients(d, 0);
        std::vector<Rational> p(g.tail.size() + 1, Rational(0));
        for (std::size_t u = 0; u < g.tail.size(); ++u) {
            p[u] += g.tail[u];
            p[u + 1] += g.tail[u];
        }
        p[0] -= Rational(1);
        // expand around x = 1: q_k = sum_i p_i C(i, k) must vanish for k <= delta
        for (int k = 0; k <= d; ++k) {
            Rational q = 0;
            for (std::size_t i = 0; i < p.size(); ++i)
                q += p[i] * Rational(binomial(Int(static_cast<long>(i)), static_cast<unsigned>(k)));
            if (!q.is_zero())
                return {"gti_geometric_congruence", false,
                        "(1+x)c(x) - 1 not divisible by (x-1)^" + std::to_string(d + 1) +
                            " at delta = " + std::to_string(d)};
        }
    }
    return {"gti_geometric_congruence", true, ""};
}

SuiteResult suite_surface_identity() {
    return {"surface_polynomial_identity", surface_identity_check(), ""};
}

SuiteResult suite_tt_identity() {
    for (int order = 1; order <= 5; ++order) {
        TruncRingPtr ring = make_trunc_ring(1, order);
        TruncElem u = TruncElem::one(ring) + TruncElem::generator(ring, 0);
        IdentityReport rep = tt_identity_check(u, 12);
        if (!rep.pass) return {"tt_identity", false, rep.detail};
    }
    {
        TruncRingPtr ring = make_trunc_ring(2, 3);
        TruncElem u = TruncElem::one(ring) + TruncElem::generator(ring, 0) +
                      TruncElem::generator(ring, 1).scaled(Rational(Int(2)));
        IdentityReport rep = tt_identity_check(u, 12);
        if (!rep.pass) return {"tt_identity", false, rep.detail};
    }
    return {"tt_identity", true, ""};
}

VirtualBundle sample_bundle(int rank, int order) {
    TruncRingPtr ring = make_trunc_ring(rank, order);
    std::vector<TruncElem> lines;
    for (int i = 0; i < rank; ++i)
        lines.push_back(TruncElem::one(ring) + TruncElem::generator(ring, i));
    return make_bundle(ring, std::move(lines));
}

SuiteResult suite_sym_lambda_duality() {
    for (int rank = 1; rank <= 3; ++rank) {
        IdentityReport rep = verify_sym_lambda_duality(sample_bundle(rank, 3), 6);
        if (!rep.pass) return {"sym_lambda_duality", false, rep.detail};
    }
    // a properly virtual bundle as well
    TruncRingPtr ring = make_trunc_ring(2, 3);
    VirtualBundle v = make_bundle(
        ring, {TruncElem::one(ring) + TruncElem::generator(ring, 0)},
        {TruncElem::one(ring) + TruncElem::generator(ring, 1)});
    IdentityReport rep = verify_sym_lambda_duality(v, 4);
    if (!rep.pass) return {"sym_lambda_duality", false, rep.detail};
    return {"sym_lambda_duality", true, ""};
}

SuiteResult suite_rde() {
    for (int rank = 1; rank <= 3; ++rank) {
        for (int order = 1; order <= 4; ++order) {
            VirtualBundle v = sample_bundle(rank, order);
            const int d0 = rde_min_delta(v);
            for (int delta : {d0, d0 + 2}) {
                IdentityReport rep = verify_rde(v, delta);
                if (!rep.pass)
                    return {"rde", false,
                            "rank " + std::to_string(rank) + ", order " + std::to_string(order) +
                                ", delta " + std::to_string(delta) + ":\n" + rep.detail};
            }
        }
    }
    return {"rde", true, ""};
}

int cmd_verify(Format format, std::ostream& out) {
    std::vector<SuiteResult> suites;
    suites.push_back(suite_stirling());
    suites.push_back(suite_euler_vs_bernoulli());
    suites.push_back(suite_kim());
    suites.push_back(suite_gti_tail_sum());
    suites.push_back(suite_gti_congruence());
    suites.push_back(suite_surface_identity());
    suites.push_back(suite_tt_identity());
    suites.push_back(suite_sym_lambda_duality());
    suites.push_back(suite_rde());

    const SuiteResult* first_fail = nullptr;
    for (const auto& s : suites)
        if (!s.pass && !first_fail) first_fail = &s;

    if (format == Format::json) {
        json j;
        j["suites"] = json::array();
        for (const auto& s : suites) j["suites"].push_back({{"name", s.name}, {"pass", s.pass}});
        j["pass"] = first_fail == nullptr;
        if (first_fail) j["first_failure"] = first_fail->name;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& s : suites) {
            out << (s.pass ? "ok   " : "FAIL ") << s.name;
            if (!s.pass && !s.detail.empty()) out << ": " << s.detail;
            out << "\n";
        }
        if (first_fail)
            out << "verify: FAILED (first failure: " << first_fail->name << ")\n";
        else
            out << "verify: all " << suites.size() << " suites passed\n";
    }
    return first_fail ? 1 : 0;
}

// ---------------------------------------------------------------------------
// gti / stirling / euler-numbers

int cmd_gti(int delta, int lambda, Format format, std::ostream& out) {
    GtiCoefficients g = gti_coefficients(delta, lambda);
    if (format == Format::json) {
        json j;
        j["delta"] = g.delta;
        j["lambda"] = g.lambda;
        j["tail"] = json::array();
        for (const auto& c : g.tail) j["tail"].push_back(c.str());
        j["prefix_signs"] = json::array();
        for (int k = 0; k < g.lambda; ++k) j["prefix_signs"].push_back(g.prefix_sign(k));
        j["tail_sign"] = g.tail_sign();
        out << j.dump(2) << "\n";
    } else if (format == Format::tsv) {
        for (int k = 0; k < g.lambda; ++k)
            out << "prefix\t" << k << "\t" << g.prefix_sign(k) << "\n";
        for (std::size_t u = 0; u < g.tail.size(); ++u)
            out << "tail\t" << u << "\t" << g.tail[u].str() << "\n";
    } else {
        out << "GTI(f, delta=" << delta << ", lambda=" << lambda << ")\n";
        if (lambda > 0) {
            out << "prefix signs:";
            for (int k = 0; k < lambda; ++k) out << " " << (g.prefix_sign(k) > 0 ? "+1" : "-1");
            out << "\n";
        }
        out << "tail sign: " << (g.tail_sign() > 0 ? "+1" : "-1") << "\n";
        out << "tail coefficients c_u(" << delta << "):";
        for (const auto& c : g.tail) out << " " << c.str();
        out << "\n";
    }
    return 0;
}

int cmd_stirling(int l_max, Format format, std::ostream& out) {
    StirlingTable t = stirling_first(l_max);
    if (format == Format::json) {
        json rows = json::array();
        for (int l = 0; l <= l_max; ++l) {
            json row = json::array();
            for (int j = 0; j <= l; ++j) row.push_back(t(l, j).get_str());
            rows.push_back(row);
        }
        out << json{{"l_max", l_max}, {"rows", rows}}.dump(2) << "\n";
    } else if (format == Format::tsv) {
        for (int l = 0; l <= l_max; ++l)
            for (int j = 0; j <= l; ++j)
                out << l << "\t" << j << "\t" << t(l, j).get_str() << "\n";
    } else {
        for (int l = 0; l <= l_max; ++l) {
            out << "s(" << l << ", 0.." << l << "):";
            for (int j = 0; j <= l; ++j) out << " " << t(l, j).get_str();
            out << "\n";
        }
    }
    return 0;
}

int cmd_euler_numbers(int j_max, Format format, std::ostream& out) {
    EulerNumbers e = euler_numbers(j_max);
    if (format == Format::json) {
        json vals = json::array();
        for (const auto& v : e.e) vals.push_back(v.str());
        out << json{{"j_max", j_max}, {"values", vals}}.dump(2) << "\n";
    } else if (format == Format::tsv) {
        for (int j = 0; j <= j_max; ++j) out << j << "\t" << e[j].str() << "\n";
    } else {
        for (int j = 0; j <= j_max; ++j) out << "E_" << j << " = " << e[j].str() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// hilbert

long long json_int(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("value does not fit a JSON integer");
    return v.get_si();
}

json hilbert_json(const HilbertData& h) {
    json j;
    j["numerator"] = json::array();
    for (const auto& c : h.numerator) j["numerator"].push_back(json_int(c));
    j["dim"] = h.dim;
    j["hp"] = json::array();
    for (const auto& c : h.hp) j["hp"].push_back(c.str());
    j["chi"] = json_int(h.chi);
    return j;
}

void hilbert_pretty(const HilbertData& h, std::ostream& out) {
    out << "Hilbert series numerator N(t):";
    for (const auto& c : h.numerator) out << " " << c.get_str();
    out << "\n";
    out << "pole order d = " << h.dim << "\n";
    out << "Hilbert polynomial HP(m) coefficients (ascending):";
    if (h.hp.empty()) out << " 0";
    for (const auto& c : h.hp) out << " " << c.str();
    out << "\n";
    out << "chi = HP(0) = " << h.chi.get_str() << "\n";
}

int cmd_hilbert(const std::string& path, const std::string& order, double budget_seconds,
                Format format, std::ostream& out) {
    IdealFile f = read_ideal_file(path, order_from_name(order));
    Ideal ideal = make_ideal(f.ring, f.generators);
    GbBudget budget;
    if (budget_seconds > 0) budget.wall_seconds = budget_seconds;
    HilbertData h = euler_characteristic_data(ideal, order_from_name(order), budget);
    if (format == Format::json) {
        out << hilbert_json(h).dump(2) << "\n";
    } else if (format == Format::tsv) {
        out << "chi\t" << h.chi.get_str() << "\n";
        out << "dim\t" << h.dim << "\n";
        for (std::size_t i = 0; i < h.numerator.size(); ++i)
            out << "numerator\t" << i << "\t" << h.numerator[i].get_str() << "\n";
        for (std::size_t i = 0; i < h.hp.size(); ++i)
            out << "hp\t" << i << "\t" << h.hp[i].str() << "\n";
    } else {
        hilbert_pretty(h, out);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// diagonal-example / chi-pipeline

struct PipelineOutput {
    std::string kind;
    std::uint64_t characteristic = 0;
    int delta = 1;
    ChiResult chi;
    GradedPieces a;
    std::optional<GtiChiReport> report;  // absent when the table is too short
    Rational reference;
};

void render_pipeline(const PipelineOutput& p, Format format, std::ostream& out) {
    if (format == Format::json) {
        json j;
        j["kind"] = p.kind;
        j["char"] = p.characteristic;
        j["delta"] = p.delta;
        j["n_start"] = 1;
        j["chi"] = p.chi.seq.chi;
        json prov = json::array();
        for (auto pr : p.chi.seq.provenance)
            prov.push_back(pr == Provenance::imported ? "imported" : "computed");
        j["chi_provenance"] = prov;
        j["a"] = p.a.a;
        j["complete"] = p.chi.complete;
        if (!p.chi.complete) j["incomplete_reason"] = p.chi.incomplete_reason;
        if (p.report) {
            json g = json::array();
            for (const auto& v : p.report->values) g.push_back(v.str());
            j["gti"] = g;
            j["stabilization"] = json::object();
            j["stabilization"]["status"] = "empirical";
            if (p.report->lambda_star) {
                j["stabilization"]["lambda_star"] = *p.report->lambda_star;
                j["stabilization"]["stable_value"] = p.report->values.back().str();
            } else {
                j["stabilization"]["lambda_star"] = nullptr;
            }
            j["stabilization"]["reference"] = p.report->reference.str();
            j["stabilization"]["matches_reference"] = p.report->stable_matches_reference;
        }
        json meta;
        json wall = json::array(), cached = json::array();
        for (const auto& m : p.chi.meta) {
            wall.push_back(static_cast<std::int64_t>(m.wall_seconds * 1000));
            cached.push_back(m.from_cache);
        }
        meta["wall_ms"] = wall;
        meta["from_cache"] = cached;
        j["meta"] = meta;
        out << j.dump(2) << "\n";
        return;
    }
    if (format == Format::tsv) {
        for (std::size_t i = 0; i < p.chi.seq.chi.size(); ++i)
            out << "chi\t" << (i + 1) << "\t" << p.chi.seq.chi[i] << "\n";
        for (std::size_t k = 0; k < p.a.a.size(); ++k)
            out << "a\t" << k << "\t" << p.a.a[k] << "\n";
        if (p.report) {
            for (std::size_t l = 0; l < p.report->values.size(); ++l)
                out << "gti\t" << l << "\t" << p.report->values[l].str() << "\n";
            if (p.report->lambda_star)
                out << "lambda_star\t" << *p.report->lambda_star << "\tempirical\n";
            else
                out << "lambda_star\tnone\tempirical\n";
        }
        if (!p.chi.complete) out << "incomplete\t" << p.chi.incomplete_reason << "\n";
        return;
    }
    out << "scenario: " << p.kind << " (char " << p.characteristic << ")\n";
    out << "chi(O/I_Delta^n), n = 1.." << p.chi.seq.chi.size() << ":";
    for (auto c : p.chi.seq.chi) out << " " << c;
    out << "\n";
    out << "graded pieces a_k = chi(I^k/I^{k+1}), k = 0.." << (p.a.a.size() - 1) << ":";
    for (auto c : p.a.a) out << " " << c;
    out << "\n";
    if (p.report) {
        out << "chi(GTI(f," << p.delta << ",lambda)), lambda = 0.." << p.report->lambda_max << ":";
        for (const auto& v : p.report->values) out << " " << v.str();
        out << "\n";
        if (p.report->lambda_star) {
            out << "stabilization (empirical): lambda* = " << *p.report->lambda_star
                << ", stable value " << p.report->values.back().str() << ", reference chi(Y,O_Y) = "
                << p.report->reference.str()
                << (p.report->stable_matches_reference ? " (matches)" : " (DIFFERS)") << "\n";
        } else {
            out << "stabilization (empirical): none within the computed range\n";
        }
    } else {
        out << "chi table too short for the GTI pipeline at delta = " << p.delta
            << " (need at least delta + 2 entries)\n";
    }
    if (!p.chi.complete) out << "INCOMPLETE: " << p.chi.incomplete_reason << "\n";
}

std::vector<Polynomial> parse_curve_list(const std::string& text, const Ring& ring) {
    std::vector<Polynomial> gens;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        // drop blanks
        bool blank = true;
        for (char c : cur)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        gens.push_back(parse_polynomial(cur, ring));
    }
    return gens;
}

int run_pipeline(PipelineOutput& p, Format format, bool require_gti, std::ostream& out,
                 std::ostream& err) {
    p.a = graded_pieces(p.chi.seq);
    const int lambda_max = max_lambda_for(p.a, p.delta);
    if (lambda_max >= 0) {
        p.report = gti_report(p.a, p.delta, lambda_max, p.reference);
    } else if (require_gti) {
        err << "error: chi table too short for delta = " << p.delta << ", need chi up to n = "
            << (p.delta + 1) << "\n";
        return 1;
    }
    render_pipeline(p, format, out);
    return p.chi.complete ? 0 : 3;
}

// ---------------------------------------------------------------------------

std::optional<std::string> resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("RR_CACHE_DIR"); env && *env) return std::string(env);
    return std::nullopt;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Riemann-Roch correction-term toolkit"};
    app.require_subcommand(1);

    std::string format_name = "pretty";
    bool json_flag = false;
    app.add_option("--format", format_name, "output format: pretty|json|tsv")
        ->capture_default_str()
        ->check(CLI::IsMember({"pretty", "json", "tsv"}));
    app.add_flag("--json", json_flag, "shorthand for --format json");

    auto* verify = app.add_subcommand("verify", "run the full identity suite");
    verify->fallthrough();

    auto* gti = app.add_subcommand("gti", "print GTI coefficient tables");
    gti->fallthrough();
    int gti_delta = 1, gti_lambda = 0;
    gti->add_option("--delta", gti_delta, "delta >= 0")->check(CLI::NonNegativeNumber);
    gti->add_option("--lambda", gti_lambda, "lambda >= 0")->check(CLI::NonNegativeNumber);

    auto* stirling =
        app.add_subcommand("stirling", "print Stirling numbers of the first kind");
    stirling->fallthrough();
    int stirling_max = 8;
    stirling->add_option("--max", stirling_max, "largest l")->check(CLI::NonNegativeNumber);

    auto* euler = app.add_subcommand("euler-numbers", "print the Euler numbers E_j");
    euler->fallthrough();
    int euler_max = 10;
    euler->add_option("--max", euler_max, "largest j")->check(CLI::NonNegativeNumber);

    auto* hilbert =
        app.add_subcommand("hilbert", "Hilbert polynomial and chi of an .ideal file");
    hilbert->fallthrough();
    std::string hilbert_path, hilbert_order = "grevlex";
    double hilbert_budget = 0;
    hilbert->add_option("file", hilbert_path, ".ideal input file")->required();
    hilbert->add_option("--order", hilbert_order, "monomial order: grevlex|lex")
        ->capture_default_str();
    hilbert->add_option("--budget", hilbert_budget, "Groebner wall-clock budget in seconds");

    auto* diag = app.add_subcommand("diagonal-example",
                                    "the squared-curve experiment: chi table, graded pieces, "
                                    "GTI values, stabilization");
    diag->fallthrough();
    std::string diag_curve, diag_scenario, diag_import, diag_cache_dir;
    bool diag_p1p1 = false, diag_full = false;
    int diag_maxn = 10, diag_delta = 1;
    std::uint64_t diag_char = 5;
    double diag_budget = 900;
    diag->add_option("--curve", diag_curve, "comma-separated curve generators in x,y,z");
    diag->add_option("--scenario", diag_scenario, "scenario file (.ideal with [scenario] header)");
    diag->add_flag("--p1p1", diag_p1p1, "use the smooth P^1 x P^1 scenario");
    diag->add_option("--import", diag_import, "skip Groebner runs, import a chi table JSON");
    diag->add_option("--char", diag_char, "field characteristic (prime, not 2; 0 = Q)");
    diag->add_option("--max-n", diag_maxn, "compute chi(O/I^n) for n = 1..max-n")
        ->check(CLI::PositiveNumber);
    diag->add_option("--delta", diag_delta, "delta for the GTI pipeline")
        ->check(CLI::NonNegativeNumber);
    diag->add_option("--budget", diag_budget, "per-n Groebner budget in seconds (default 900)");
    diag->add_flag("--full", diag_full, "remove the per-n time budget");
    std::uint32_t diag_degree_cap = 40;
    diag->add_option("--degree-cap", diag_degree_cap, "hard Groebner degree cap (default 40)");
    diag->add_option("--cache-dir", diag_cache_dir, "cache directory (RR_CACHE_DIR as fallback)");

    auto* pipeline =
        app.add_subcommand("chi-pipeline", "GTI pipeline on an imported chi table");
    pipeline->fallthrough();
    std::string pipe_import;
    int pipe_delta = 1;
    pipeline->add_option("--import", pipe_import, "chi table JSON file")->required();
    pipeline->add_option("--delta", pipe_delta, "delta for the GTI pipeline")
        ->check(CLI::NonNegativeNumber);

    std::vector<const char*> argv;
    std::string prog = "rrsing";
    argv.push_back(prog.c_str());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    Format format = json_flag ? Format::json : parse_format(format_name);

    try {
        if (verify->parsed()) return cmd_verify(format, out);
        if (gti->parsed()) return cmd_gti(gti_delta, gti_lambda, format, out);
        if (stirling->parsed()) return cmd_stirling(stirling_max, format, out);
        if (euler->parsed()) return cmd_euler_numbers(euler_max, format, out);
        if (hilbert->parsed())
            return cmd_hilbert(hilbert_path, hilbert_order, hilbert_budget, format, out);

        if (pipeline->parsed()) {
            std::ifstream in(pipe_import);
            if (!in) throw std::runtime_error("cannot open chi table: " + pipe_import);
            json j;
            in >> j;
            PipelineOutput p;
            p.kind = "imported";
            p.delta = pipe_delta;
            p.chi.seq = import_chi(j);
            p.chi.meta.assign(p.chi.seq.chi.size(), {false, 0.0});
            p.reference = Rational(Int(static_cast<long>(p.chi.seq.chi.front())));
            return run_pipeline(p, format, true, out, err);
        }

        if (diag->parsed()) {
            const int sources = (!diag_curve.empty() ? 1 : 0) + (!diag_scenario.empty() ? 1 : 0) +
                                (diag_p1p1 ? 1 : 0) + (!diag_import.empty() ? 1 : 0);
            if (sources != 1) {
                err << "usage error: give exactly one of --curve, --scenario, --p1p1, --import\n";
                return 2;
            }

            PipelineOutput p;
            p.delta = diag_delta;

            if (!diag_import.empty()) {
                std::ifstream in(diag_import);
                if (!in) throw std::runtime_error("cannot open chi table: " + diag_import);
                json j;
                in >> j;
                p.kind = "imported";
                p.chi.seq = import_chi(j);
                p.chi.meta.assign(p.chi.seq.chi.size(), {false, 0.0});
                p.reference = Rational(Int(static_cast<long>(p.chi.seq.chi.front())));
                return run_pipeline(p, format, true, out, err);
            }

            DiagonalScenario scenario;
            if (diag_p1p1) {
                if (diag->count("--char") == 0) diag_char = 0;
                scenario = build_p1p1_square(diag_char);
            } else if (!diag_scenario.empty()) {
                IdealFile f = read_ideal_file(diag_scenario);
                if (!f.has_scenario || f.scenario_type != "segre-square")
                    throw std::runtime_error(
                        "scenario file must declare [scenario] type segre-square");
                scenario = build_segre_square(f.generators, f.ring->characteristic());
            } else {
                Ring curve_ring = make_ring({"x", "y", "z"}, diag_char);
                scenario = build_segre_square(parse_curve_list(diag_curve, curve_ring), diag_char);
            }

            ChiOptions opts;
            opts.n_max = diag_maxn;
            if (!diag_full && diag_budget > 0) opts.per_n_budget.wall_seconds = diag_budget;
            opts.per_n_budget.max_degree = diag_degree_cap;
            opts.cache_dir = resolve_cache_dir(diag_cache_dir);

            p.kind = scenario.kind;
            p.characteristic = scenario.characteristic;
            p.chi = chi_sequence(scenario, opts);
            if (p.chi.seq.chi.empty()) {
                err << "no chi entries computed: " << p.chi.incomplete_reason << "\n";
                return 3;
            }
            p.reference = Rational(Int(static_cast<long>(p.chi.seq.chi.front())));
            return run_pipeline(p, format, false, out, err);
        }
    } catch (const BudgetExhausted& e) {
        err << "budget exhausted: " << e.what() << " (pairs " << e.stats.pairs_processed
            << ", max degree " << e.stats.max_degree_seen << ")\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace rrsing
