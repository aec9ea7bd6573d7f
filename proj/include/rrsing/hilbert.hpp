#pragma once

#include <cstdint>
#include <vector>

#include "rrsing/groebner.hpp"
#include "rrsing/numeric.hpp"
#include "rrsing/polyring.hpp"

namespace rrsing {

/// Monomial ideal given by its divisibility-minimal generators, canonically
/// sorted. The unit ideal is represented by the single generator 1.
struct MonomialIdeal {
    std::size_t nvars = 0;
    std::vector<Monomial> generators;
};

MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> generators);

/// Numerator N(t) of the Hilbert series HS(R/I) = N(t)/(1-t)^nvars, dense
/// ascending coefficients. Computed by recursive splitting on a pivot
/// variable (the one occurring in the most generators, lowest index on
/// ties); base cases: zero ideal, a single generator, pairwise-coprime
/// generators.
std::vector<Int> hilbert_numerator(const MonomialIdeal& ideal);

/// Hilbert data of a graded quotient: series numerator, reduced pole order d
/// (with Q(1) != 0), the Hilbert polynomial and chi = HP(0).
struct HilbertData {
    std::vector<Int> numerator;     // N(t), HS = N/(1-t)^nvars
    std::size_t nvars = 0;
    int dim = 0;                    // pole order d of the reduced form
    std::vector<Rational> hp;       // HP coefficients, ascending; empty = zero polynomial
    Int chi;                        // HP(0)
};

HilbertData hilbert_data(const MonomialIdeal& ideal);

/// The numerator -> (dim, HP, chi) part alone; used to revive cached runs.
HilbertData hilbert_data_from_numerator(std::vector<Int> numerator, std::size_t nvars);

Rational hp_eval(const HilbertData& h, const Rational& m);

/// Brute-force Hilbert function of R/I at degree m: the number of degree-m
/// monomials divisible by no generator. Independent oracle for HP.
Int hilbert_function_bruteforce(const MonomialIdeal& ideal, unsigned m);

MonomialIdeal leading_term_ideal(const GroebnerBasis& gb);

/// chi(Proj(R/I)) via a Groebner run and HP(0). Budget exhaustion from the
/// Groebner layer propagates.
struct ChiComputation {
    HilbertData data;
    MonomialIdeal lead_terms;
    GbStats stats;
};

ChiComputation euler_characteristic_full(const Ideal& ideal, OrderKind order,
                                         const GbBudget& budget = {});
HilbertData euler_characteristic_data(const Ideal& ideal, OrderKind order,
                                      const GbBudget& budget = {});
Int euler_characteristic(const Ideal& ideal, OrderKind order, const GbBudget& budget = {});

}  // namespace rrsing
