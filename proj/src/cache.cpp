#include "rrsing/cache.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace rrsing {

namespace {

constexpr const char* kAlgoVersion = "rrsing-gb-1";

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::filesystem::path entry_path(const std::string& dir, const std::string& hash, int n) {
    return std::filesystem::path(dir) / (hash + "_n" + std::to_string(n) + ".json");
}

}  // namespace

std::string stable_ideal_hash(const Ideal& ideal, OrderKind order) {
    std::vector<std::string> gens;
    gens.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators) gens.push_back(g.str());
    std::sort(gens.begin(), gens.end());
    std::string acc = kAlgoVersion;
    acc += "|order=" + order_name(order);
    acc += "|char=" + std::to_string(ideal.ring->characteristic());
    acc += "|vars=";
    for (const auto& v : ideal.ring->vars()) acc += v + ",";
    acc += "|gens=";
    for (const auto& g : gens) acc += g + ";";
    return hex64(fnv1a64(acc));
}

std::optional<GbCacheEntry> cache_load(const std::string& dir, const std::string& input_hash,
                                       int n) {
    std::ifstream in(entry_path(dir, input_hash, n));
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        GbCacheEntry e;
        e.input_hash = j.at("input_hash").get<std::string>();
        e.order = j.at("order").get<std::string>();
        e.characteristic = j.at("char").get<std::uint64_t>();
        e.vars = j.at("vars").get<std::vector<std::string>>();
        e.lead_monomials = j.at("lead_monomials").get<std::vector<std::string>>();
        e.hilbert_numerator = j.at("hilbert_numerator").get<std::vector<long long>>();
        e.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
        e.n = j.at("n").get<int>();
        if (e.input_hash != input_hash) return std::nullopt;  // stale or corrupt
        return e;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

void cache_store(const std::string& dir, const GbCacheEntry& entry) {
    std::filesystem::create_directories(dir);
    nlohmann::json j{{"input_hash", entry.input_hash},
                     {"order", entry.order},
                     {"char", entry.characteristic},
                     {"vars", entry.vars},
                     {"lead_monomials", entry.lead_monomials},
                     {"hilbert_numerator", entry.hilbert_numerator},
                     {"wall_time_ms", entry.wall_time_ms},
                     {"n", entry.n}};
    std::filesystem::path final_path = entry_path(dir, entry.input_hash, entry.n);
    std::filesystem::path tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, final_path);
}

}  // namespace rrsing
