#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "qsp/cli.hpp"

using json = nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"qsp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = qsp::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json load_schema(const std::string& name) {
    std::ifstream f(std::string(QSP_SOURCE_DIR) + "/docs/schema/" + name);
    REQUIRE(f.good());
    json j;
    f >> j;
    return j;
}

// Validates the subset of JSON Schema used by the shipped schemas: type,
// required, properties, items.
void validate(const json& schema, const json& value, const std::string& path) {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        bool ok = (t == "object" && value.is_object()) ||
                  (t == "array" && value.is_array()) ||
                  (t == "string" && value.is_string()) ||
                  (t == "integer" && value.is_number_integer()) ||
                  (t == "number" && value.is_number()) ||
                  (t == "boolean" && value.is_boolean());
        if (!ok) FAIL_CHECK("type mismatch at ", path, ": expected ", t);
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>()))
                FAIL_CHECK("missing required key at ", path, ": ", key.get<std::string>());
    if (schema.contains("properties") && value.is_object())
        for (auto it = schema["properties"].begin(); it != schema["properties"].end();
             ++it)
            if (value.contains(it.key()))
                validate(it.value(), value.at(it.key()), path + "." + it.key());
    if (schema.contains("items") && value.is_array())
        for (std::size_t i = 0; i < value.size(); ++i)
            validate(schema["items"], value[i], path + "[" + std::to_string(i) + "]");
}

void check_against(const std::string& schema_file, const std::string& text) {
    json value = json::parse(text);
    validate(load_schema(schema_file), value, "$");
}

} // namespace

TEST_CASE("decompose: rank-1 square table and schema") {
    CliResult r = run({"decompose", "--r", "1", "--d", "2", "--format", "json"});
    CHECK(r.code == 0);
    check_against("decompose.schema.json", r.out);
    json j = json::parse(r.out);
    CHECK(j["total_dimension"] == 9);
    CHECK(j["component_count"] == 5);
    std::map<std::string, int> mult;
    for (const auto& s : j["shapes"]) mult[s["shape"]] = s["multiplicity"];
    CHECK(mult["(2,0;0)"] == 1);
    CHECK(mult["(1,1;0)"] == 1);
    CHECK(mult["(1,0;1)"] == 2);
    CHECK(mult["(0,0;2)"] == 1);
}

TEST_CASE("outputs are byte-identical across runs") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"decompose", "--r", "1", "--d", "3", "--format", "json"},
             {"cells", "--rank", "2", "--format", "json"},
             {"lr", "--r", "1", "--lambda", "(1,0;0)", "--mu", "(1,0,0)"},
             {"jcrystal-graph", "--r", "1", "--power", "2", "--format", "dot"}}) {
        CliResult a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("verify: all-pass report, exit 0, schema") {
    CliResult r = run({"verify", "--r", "1", "--d", "2", "--format", "json"});
    CHECK(r.code == 0);
    check_against("verify.schema.json", r.out);
    json j = json::parse(r.out);
    CHECK(j["all_pass"] == true);
    // Text format prints one line per check.
    CliResult t = run({"verify", "--r", "1", "--d", "1", "--format", "text"});
    CHECK(t.code == 0);
    CHECK(t.out.find("[PASS]") != std::string::npos);
    CHECK(t.out.find("[FAIL]") == std::string::npos);
    // Group filter narrows the run.
    CliResult o = run({"verify", "--r", "1", "--d", "1", "--only", "h1-matrix"});
    json jo = json::parse(o.out);
    CHECK(jo["checks"].size() == 1);
}

TEST_CASE("lr: branching of a single box") {
    CliResult r = run({"lr", "--r", "1", "--lambda", "(;)", "--mu", "(1,0,0)"});
    CHECK(r.code == 0);
    check_against("lr.schema.json", r.out);
    json j = json::parse(r.out);
    REQUIRE(j["coefficients"].size() == 2);
    CHECK(j["coefficients"][0]["value"] == 1);
    CHECK(j["coefficients"][1]["value"] == 1);
    CliResult single = run({"lr", "--r", "1", "--lambda", "(;)", "--mu", "(1,0,0)",
                            "--nu", "(1,0;0)"});
    json js = json::parse(single.out);
    CHECK(js["value"] == 1);
}

TEST_CASE("cells and kl outputs validate") {
    CliResult c = run({"cells", "--rank", "2", "--format", "json"});
    CHECK(c.code == 0);
    check_against("cells.schema.json", c.out);
    CHECK(json::parse(c.out)["cell_count"] == 6);
    CliResult k = run({"kl", "--rank", "2", "--format", "json"});
    CHECK(k.code == 0);
    check_against("kl.schema.json", k.out);
    CliResult k1 = run({"kl", "--rank", "2", "--element", "[-1,2]", "--format", "json"});
    json jk = json::parse(k1.out);
    REQUIRE(jk["elements"].size() == 1);
    CHECK(jk["elements"][0]["coefficients"]["[1,2]"] == "p");
}

TEST_CASE("graphs validate and keep edges inside the node set") {
    CliResult g = run({"crystal-graph", "--r", "1", "--power", "2", "--format", "json"});
    CHECK(g.code == 0);
    check_against("graph.schema.json", g.out);
    CliResult jg =
        run({"jcrystal-graph", "--r", "2", "--shape", "(1,0,0;1,0)", "--format", "json"});
    CHECK(jg.code == 0);
    check_against("graph.schema.json", jg.out);
    json j = json::parse(jg.out);
    CHECK(j["nodes"].size() == 6); // dim of the (1,0,0;1,0) module at rank 2
    // DOT output marks primed edges dashed.
    CliResult dot = run({"jcrystal-graph", "--r", "2", "--power", "1", "--format", "dot"});
    CHECK(dot.out.find("style=\"solid\"") != std::string::npos);
}

TEST_CASE("usage and guard errors exit 2") {
    CHECK(run({"decompose", "--r", "1"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"decompose", "--r", "2", "--d", "9"}).code == 2);
    CHECK(run({"cells", "--rank", "4"}).code == 2); // above the default cell guard
    CHECK(run({"lr", "--r", "1", "--lambda", "(oops", "--mu", "(1)"}).code == 2);
    // Raising the guard lets larger runs through.
    CliResult ok = run({"decompose", "--r", "1", "--d", "5", "--guard", "100000"});
    CHECK(ok.code == 0);
}

TEST_CASE("environment guard override") {
    setenv("JCRYSTAL_GUARD", "10", 1);
    CHECK(run({"decompose", "--r", "1", "--d", "3"}).code == 2);
    // The flag still wins over the environment.
    CHECK(run({"decompose", "--r", "1", "--d", "3", "--guard", "1000"}).code == 0);
    unsetenv("JCRYSTAL_GUARD");
    CHECK(run({"decompose", "--r", "1", "--d", "3"}).code == 0);
}
