#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rrsing/groebner.hpp"
#include "rrsing/hilbert.hpp"
#include "rrsing/numeric.hpp"
#include "rrsing/polyring.hpp"

namespace rrsing {

/// The squared-curve experiment: Y x Y inside a Segre-embedded product of
/// projective spaces, with the diagonal cut out by the symmetry linear forms.
struct DiagonalScenario {
    std::string kind;  // "segre-square" | "p1p1"
    std::uint64_t characteristic = 0;
    Ring ring;                               // ambient Segre ring
    Ring curve_ring;                         // 3-variable source ring (segre-square only)
    std::vector<Polynomial> curve_generators;
    std::vector<Polynomial> ambient;         // J: minors + translated curve equations
    std::vector<Polynomial> diagonal_forms;  // L: the symmetry forms
    std::string scenario_hash;
};

/// P^2 x P^2 -> P^8 with Y cut out by homogeneous curve generators in three
/// variables. J carries the nine 2x2 minors and, for each generator g of
/// degree d and each degree-d monomial m of the other factor, every coherent
/// substitution x_i y_j -> z_ij of g(x) m(y) and g(y) m(x).
DiagonalScenario build_segre_square(const std::vector<Polynomial>& curve_gens,
                                    std::uint64_t characteristic);

/// The smooth analog: P^1 x P^1 -> P^3, quadric z00 z11 - z01 z10, one
/// symmetry form z01 - z10.
DiagonalScenario build_p1p1_square(std::uint64_t characteristic);

enum class Provenance { computed, imported };

/// chi(O / I_Delta^n) for n = 1..N.
struct ChiSequence {
    std::vector<long long> chi;
    std::vector<Provenance> provenance;
};

/// {"n_start": 1, "chi": [...]}; n_start != 1 is rejected.
ChiSequence import_chi(const nlohmann::json& j);

struct ChiEntryMeta {
    bool from_cache = false;
    double wall_seconds = 0;
};

struct ChiOptions {
    int n_max = 1;
    GbBudget per_n_budget;
    std::optional<std::string> cache_dir;
};

struct ChiResult {
    ChiSequence seq;
    bool complete = true;
    std::string incomplete_reason;  // when budget exhausts at entry chi.size()+1
    std::vector<ChiEntryMeta> meta;
};

/// Computes chi_n = chi(J + L^n) entry by entry; budget exhaustion at entry n
/// leaves entries 1..n-1 valid and marks the result incomplete.
ChiResult chi_sequence(const DiagonalScenario& s, const ChiOptions& opts);

/// Independent pipeline for chi(Y, O_Y): the curve ideal in three variables.
Int curve_euler_characteristic(const DiagonalScenario& s, const GbBudget& budget = {});

/// a_k = chi_{k+1} - chi_k with chi_0 := 0, so a_0 = chi_1.
struct GradedPieces {
    std::vector<long long> a;
};

GradedPieces graded_pieces(const ChiSequence& chi);

/// (-1)^lambda sum_u c_u(delta) a_{u+lambda} + sum_{k<lambda} (-1)^k a_k.
/// Requires a-table length >= lambda + delta + 1, i.e. chi known up to
/// n = lambda + delta + 1.
Rational chi_gti(const GradedPieces& a, int delta, int lambda);

/// Smallest lambda* from which the value sequence is constant to the end;
/// none when the last two values differ.
std::optional<int> detect_stabilization(const std::vector<Rational>& values);

struct GtiChiReport {
    int delta = 0;
    int lambda_max = 0;
    std::vector<Rational> values;  // g_lambda for lambda = 0..lambda_max
    std::optional<int> lambda_star;
    Rational reference;            // chi_1 = chi(Y, O_Y)
    bool stable_matches_reference = false;
};

GtiChiReport gti_report(const GradedPieces& a, int delta, int lambda_max,
                        const Rational& reference);

/// Largest lambda the table supports: len(a) - delta - 1.
int max_lambda_for(const GradedPieces& a, int delta);

}  // namespace rrsing
