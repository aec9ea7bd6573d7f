#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrsing/polyring.hpp"

namespace rrsing {

/// Finitely generated ideal: nonzero generators in one ring.
struct Ideal {
    Ring ring;
    std::vector<Polynomial> generators;
};

Ideal make_ideal(Ring ring, std::vector<Polynomial> generators);

struct GbStats {
    std::uint64_t pairs_processed = 0;
    std::uint64_t reductions_to_zero = 0;
    std::uint64_t max_degree_seen = 0;
    std::size_t basis_size = 0;
    double wall_seconds = 0;
};

struct GbBudget {
    std::optional<double> wall_seconds;
    std::optional<std::uint64_t> max_pairs;
    std::uint32_t max_degree = 40;
};

/// Raised when a Buchberger run exceeds its budget (time, pair count or the
/// hard degree cap). Carries the run statistics collected so far.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(const std::string& why, GbStats stats)
        : std::runtime_error(why), stats(stats) {}
    GbStats stats;
};

/// The unique reduced Groebner basis for (ideal, order): every element monic,
/// no element's leading monomial divides another's, all tails fully reduced.
/// Elements are sorted ascending by leading monomial.
struct GroebnerBasis {
    Ring ring;  // carries the order used
    OrderKind order;
    std::vector<Polynomial> elements;
    GbStats stats;
};

GroebnerBasis buchberger(const Ideal& ideal, OrderKind order, const GbBudget& budget = {});

/// Remainder of f on division by the basis: no term of the result is
/// divisible by any basis leading monomial, and f - result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// All degree-n products of generators, multiset-deduplicated. n >= 1.
Ideal ideal_power(const Ideal& ideal, unsigned n);

/// Concatenation of generator lists, deduplicated.
Ideal ideal_sum(const Ideal& a, const Ideal& b);

}  // namespace rrsing
