#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "rrsing/cli.hpp"

using namespace rrsing;
using nlohmann::json;

namespace {

// Validator for the subset of draft-07 the shipped schemas use: type,
// properties, required, items, enum, pattern, minItems.
bool validates(const json& schema, const json& value, std::string& why);

bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

bool validates(const json& schema, const json& value, std::string& why) {
    if (schema.contains("type")) {
        const json& t = schema.at("type");
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>(), value);
        } else {
            for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), value);
        }
        if (!ok) {
            why = "type mismatch against " + t.dump() + " for " + value.dump();
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema.at("enum")) ok = ok || alt == value;
        if (!ok) {
            why = "value " + value.dump() + " not in enum " + schema.at("enum").dump();
            return false;
        }
    }
    if (schema.contains("pattern") && value.is_string()) {
        std::regex re(schema.at("pattern").get<std::string>());
        if (!std::regex_search(value.get<std::string>(), re)) {
            why = "value " + value.dump() + " fails pattern " +
                  schema.at("pattern").get<std::string>();
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema.at("required")) {
                if (!value.contains(key.get<std::string>())) {
                    why = "missing required key " + key.get<std::string>();
                    return false;
                }
            }
        }
        if (schema.contains("properties")) {
            for (const auto& [key, sub] : schema.at("properties").items()) {
                if (value.contains(key) && !validates(sub, value.at(key), why)) {
                    why = "at ." + key + ": " + why;
                    return false;
                }
            }
        }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") &&
            value.size() < schema.at("minItems").get<std::size_t>()) {
            why = "array shorter than minItems";
            return false;
        }
        if (schema.contains("items")) {
            for (const auto& item : value) {
                if (!validates(schema.at("items"), item, why)) {
                    why = "in array item: " + why;
                    return false;
                }
            }
        }
    }
    return true;
}

json load_schema(const std::string& name) {
    std::filesystem::path p = std::filesystem::path(RRSING_SOURCE_DIR) / "schemas" / name;
    std::ifstream in(p);
    REQUIRE_MESSAGE(in.good(), "cannot open schema ", p.string());
    json j;
    in >> j;
    return j;
}

json run_json(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    REQUIRE_MESSAGE(code == 0, "cli failed: ", err.str());
    return json::parse(out.str());
}

void expect_valid(const json& schema, const json& value) {
    std::string why;
    bool ok = validates(schema, value, why);
    CHECK_MESSAGE(ok, why);
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    f << content;
    return p;
}

}  // namespace

TEST_CASE("the validator itself rejects bad documents") {
    json schema = load_schema("chi-table.schema.json");
    std::string why;
    CHECK(validates(schema, json::parse(R"({"n_start":1,"chi":[3,5]})"), why));
    CHECK_FALSE(validates(schema, json::parse(R"({"n_start":2,"chi":[3]})"), why));
    CHECK_FALSE(validates(schema, json::parse(R"({"n_start":1,"chi":[]})"), why));
    CHECK_FALSE(validates(schema, json::parse(R"({"n_start":1,"chi":["x"]})"), why));
    CHECK_FALSE(validates(schema, json::parse(R"({"chi":[1]})"), why));
}

TEST_CASE("CLI json outputs validate against the shipped schemas") {
    expect_valid(load_schema("verify.schema.json"), run_json({"verify", "--json"}));
    expect_valid(load_schema("gti.schema.json"),
                 run_json({"gti", "--delta", "3", "--lambda", "2", "--json"}));

    auto curve = write_temp("rrsing_schema_curve.ideal", "char 5\nvars x y z\nx*z\nz^3\n");
    expect_valid(load_schema("hilbert.schema.json"),
                 run_json({"hilbert", curve.string(), "--json"}));

    auto chi = write_temp("rrsing_schema_chi.json",
                          R"({"n_start":1,"chi":[3,5,7,7,5,0,-7,-16,-27,-40]})");
    json pipeline = run_json({"chi-pipeline", "--import", chi.string(), "--delta", "1", "--json"});
    expect_valid(load_schema("pipeline.schema.json"), pipeline);

    json computed = run_json({"diagonal-example", "--p1p1", "--max-n", "3", "--json"});
    expect_valid(load_schema("pipeline.schema.json"), computed);
}

TEST_CASE("cache entries on disk validate against the shipped schema") {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "rrsing_schema_cache";
    std::filesystem::remove_all(dir);
    run_json({"diagonal-example", "--p1p1", "--max-n", "2", "--json", "--cache-dir",
              dir.string()});
    json schema = load_schema("cache-entry.schema.json");
    int entries = 0;
    for (const auto& f : std::filesystem::directory_iterator(dir)) {
        std::ifstream in(f.path());
        json j;
        in >> j;
        expect_valid(schema, j);
        ++entries;
    }
    CHECK(entries == 2);
    std::filesystem::remove_all(dir);
}
