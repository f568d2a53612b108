#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "evenpair/cli.hpp"
#include "evenpair/generators.hpp"
#include "evenpair/io.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <regex>
#include <sstream>

using namespace evenpair;
using nlohmann::json;

#ifndef SCHEMA_DIR
#define SCHEMA_DIR "schemas"
#endif

namespace {

// Checks the subset of JSON Schema our schemas use: type, required,
// properties, items, enum, pattern.
std::string validate(const json& schema, const json& value, const std::string& where)
{
    if (schema.contains("type")) {
        std::string t = schema["type"].get<std::string>();
        bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array())
            || (t == "string" && value.is_string()) || (t == "boolean" && value.is_boolean())
            || (t == "integer" && value.is_number_integer())
            || (t == "number" && value.is_number());
        if (!ok)
            return where + ": expected " + t;
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& allowed : schema["enum"])
            if (allowed == value)
                ok = true;
        if (!ok)
            return where + ": value not in enum";
    }
    if (schema.contains("pattern") && value.is_string()) {
        std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_search(value.get<std::string>(), re))
            return where + ": pattern mismatch";
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>()))
                return where + ": missing required key " + key.get<std::string>();
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key))
                if (auto err = validate(sub, value[key], where + "." + key); !err.empty())
                    return err;
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (auto err = validate(schema["items"], item, where + "[]"); !err.empty())
                return err;
    return {};
}

json load_schema(const std::string& name)
{
    return json::parse(read_file(std::string(SCHEMA_DIR) + "/" + name));
}

std::string run_and_capture(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    run_cli(args, out, err);
    return out.str();
}

std::string graph_file(const std::string& stem, const Graph& g)
{
    auto path = std::filesystem::temp_directory_path() / ("evenpair_schema_" + stem + ".col");
    write_file(path.string(), write_dimacs(g));
    return path.string();
}

} // namespace

TEST_CASE("every CLI envelope validates against the shipped schema")
{
    json schema = load_schema("result_envelope.schema.json");
    std::string c6 = graph_file("c6", named_instance("c6"));
    std::string c6bar = graph_file("c6bar", named_instance("odd-prism-c6bar"));
    std::string c5 = graph_file("c5", named_instance("c5"));

    for (std::vector<std::string> args : {
             std::vector<std::string>{"classify", c6},
             {"classify", c6bar},
             {"evenpair", c6, "--audit"},
             {"evenpair", c5}, // diagnostic outcome
             {"color", c6, "--verify-trace"},
             {"color", c6, "--timings"},
             {"oracle", c6, "--op", "max-clique"},
             {"oracle", c6, "--op", "even-pair", "--u", "2", "--v", "6"},
         }) {
        std::string out = run_and_capture(args);
        REQUIRE(!out.empty());
        json doc = json::parse(out);
        std::string err = validate(schema, doc, args[0]);
        CHECK_MESSAGE(err.empty(), err);
    }
}

TEST_CASE("genspec documents validate against the shipped schema")
{
    json schema = load_schema("genspec.schema.json");
    for (GenFamily family : {GenFamily::NamedInstance, GenFamily::Bipartite,
             GenFamily::RejectionClassA, GenFamily::WeaklyTriangulatedPrismFree,
             GenFamily::RandomGnp}) {
        GenSpec spec;
        spec.family = family;
        spec.n = 8;
        spec.name = "c6";
        json doc = genspec_to_json(spec);
        std::string err = validate(schema, doc, to_string(family));
        CHECK_MESSAGE(err.empty(), err);
    }
}
