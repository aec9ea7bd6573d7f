#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rrsing/groebner.hpp"

namespace rrsing {

/// One cached Groebner/Hilbert result, stored as a JSON file per
/// (input_hash, n) under the cache directory. input_hash is a stable hash of
/// the canonicalized generator list together with order, characteristic,
/// variable list and the algorithm version string.
struct GbCacheEntry {
    std::string input_hash;
    std::string order;
    std::uint64_t characteristic = 0;
    std::vector<std::string> vars;
    std::vector<std::string> lead_monomials;
    std::vector<long long> hilbert_numerator;
    std::int64_t wall_time_ms = 0;
    int n = 0;
};

std::string stable_ideal_hash(const Ideal& ideal, OrderKind order);

std::optional<GbCacheEntry> cache_load(const std::string& dir, const std::string& input_hash,
                                       int n);
/// Atomic store (temp file + rename).
void cache_store(const std::string& dir, const GbCacheEntry& entry);

}  // namespace rrsing
