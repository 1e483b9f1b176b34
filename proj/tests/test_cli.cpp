#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the installed binary through the shell; stderr is dropped so error
// paths only assert on the exit code.
RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd;
    if (!env.empty()) cmd += env + " ";
    cmd += std::string(QRIVER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json load_schema() {
    std::ifstream in(QRIVER_SCHEMA_PATH);
    REQUIRE(in.good());
    json schema;
    in >> schema;
    return schema;
}

// Validator for the subset of draft-07 the shipped schema uses: $ref into
// definitions, oneOf, type, enum, pattern, properties/required, items and
// min/maxItems.
bool schema_valid(const json& schema, const json& node, const json& root) {
    if (schema.contains("$ref")) {
        std::string ref = schema["$ref"].get<std::string>();
        const std::string prefix = "#/definitions/";
        REQUIRE(ref.rfind(prefix, 0) == 0);
        return schema_valid(root["definitions"][ref.substr(prefix.size())],
                            node, root);
    }
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const auto& sub : schema["oneOf"])
            if (schema_valid(sub, node, root)) ++hits;
        return hits == 1;
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        if (t == "object" && !node.is_object()) return false;
        if (t == "array" && !node.is_array()) return false;
        if (t == "string" && !node.is_string()) return false;
        if (t == "boolean" && !node.is_boolean()) return false;
        if (t == "integer" && !node.is_number_integer()) return false;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& v : schema["enum"])
            if (v == node) found = true;
        if (!found) return false;
    }
    if (schema.contains("pattern")) {
        if (!node.is_string()) return false;
        std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_search(node.get<std::string>(), re)) return false;
    }
    if (schema.contains("required")) {
        for (const auto& key : schema["required"])
            if (!node.contains(key.get<std::string>())) return false;
    }
    if (schema.contains("properties") && node.is_object()) {
        for (const auto& [key, sub] : schema["properties"].items())
            if (node.contains(key) && !schema_valid(sub, node[key], root))
                return false;
    }
    if (node.is_array()) {
        if (schema.contains("minItems") &&
            node.size() < schema["minItems"].get<size_t>())
            return false;
        if (schema.contains("maxItems") &&
            node.size() > schema["maxItems"].get<size_t>())
            return false;
        if (schema.contains("items"))
            for (const auto& item : node)
                if (!schema_valid(schema["items"], item, root)) return false;
    }
    return true;
}

bool report_valid(const json& report) {
    static const json schema = load_schema();
    return schema_valid(schema, report, schema);
}

}  // namespace

TEST_CASE("cf prints expansions") {
    RunResult r = run_cli("cf \"(1+sqrt(6))/1\"");
    CHECK(r.code == 0);
    CHECK(r.out == "[3; (2, 4)]\n");
    CHECK(run_cli("cf 10/7").out == "[1; 2, 3]\n");
    CHECK(run_cli("cf \"(1+sqrt(5))/2\"").out == "[(1)]\n");
    CHECK(run_cli("cf \"(0+sqrt(2))/1\"").out == "[1; (2)]\n");
    CHECK(run_cli("cf \"(-1+sqrt(6))/5\"").out == "[0; 3, (2, 4)]\n");
}

TEST_CASE("bad values exit with the parse code") {
    CHECK(run_cli("cf \"(0+sqrt(4))/1\"").code == 2);  // square radicand
    CHECK(run_cli("cf abc").code == 2);
    CHECK(run_cli("cf 1/0").code == 2);
    CHECK(run_cli("verify 1,2").code == 2);
    CHECK(run_cli("verify 1,x,3").code == 2);
    CHECK(run_cli("").code == 2);               // missing subcommand
    CHECK(run_cli("river 1,1,-1 --format bogus").code == 2);
}

TEST_CASE("wrong form classes exit with the domain code") {
    CHECK(run_cli("verify 1,0,1").code == 3);    // positive definite
    CHECK(run_cli("verify 1,0,-1").code == 3);   // isotropic
    CHECK(run_cli("verify 1,2,1").code == 3);    // degenerate
    CHECK(run_cli("sail 1,0,1").code == 3);
    CHECK(run_cli("river 2,1,3").code == 3);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("cf --help").code == 0);
}

TEST_CASE("verify matches the flagship forms") {
    for (const char* f : {"1,-2,-5", "1,1,-1", "11,-10,2"}) {
        RunResult r = run_cli(std::string("verify ") + f);
        CHECK(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["match"]["matched"].get<bool>());
        CHECK(report_valid(j));
    }
}

TEST_CASE("verify text format") {
    RunResult r = run_cli("verify 1,-2,-5 --format text");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("matched: yes", 0) == 0);
}

TEST_CASE("river text format walks the flagship form") {
    RunResult r = run_cli("river 1,-2,-5 --steps 12");
    CHECK(r.code == 0);
    CHECK(r.out.find("turns: RRLLLLRRLLLL") != std::string::npos);
}

TEST_CASE("river json format") {
    RunResult r = run_cli("river 11,-10,2 --steps 12 --format json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(report_valid(j));
    CHECK(j["turns"].get<std::string>() == "LRRLRRLRRLRR");
    CHECK(j["edges"].size() == 13);
    // first edge faces: 2 on the positive bank, -1 on the negative
    CHECK(j["edges"][0]["left"]["value"].get<std::string>() == "2");
    CHECK(j["edges"][0]["right"]["value"].get<std::string>() == "-1");
}

TEST_CASE("sail json format pins the flagship chain") {
    RunResult r = run_cli("sail 1,-2,-5 --window 3,3 --format json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(report_valid(j));
    CHECK(j["lls_window"]["terms"] ==
          json::array({"4", "2", "4", "2", "4", "2", "4"}));
    CHECK(j["lls_window"]["anchor"].get<int>() == 3);
    CHECK(j["reduced"]["form"]["a"].get<std::string>() == "1");
    CHECK(j["reduced"]["form"]["h"].get<std::string>() == "4");
    CHECK(j["reduced"]["form"]["b"].get<std::string>() == "-2");
    CHECK(j["reduced"]["map"] ==
          json::array({json::array({"1", "3"}), json::array({"0", "1"})}));
    CHECK(j["vertices"]["points"] ==
          json::array({json::array({"29", "-20"}), json::array({"3", "-2"}),
                       json::array({"1", "0"}), json::array({"7", "2"}),
                       json::array({"69", "20"})}));
    CHECK(j["vertices"]["corner"].get<int>() == 2);
    CHECK(j["slope_roots"]["alpha"].get<std::string>() == "(-1+sqrt(6))/5");
    CHECK(j["farey_roots"]["alpha"].get<std::string>() == "(1+sqrt(6))/1");
}

TEST_CASE("sail text format brackets the anchored term") {
    RunResult r = run_cli("sail 1,-2,-5 --window 3,3");
    CHECK(r.code == 0);
    CHECK(r.out.find("lls: 4 2 4 [2] 4 2 4") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    for (const char* cmd :
         {"sail 1,-2,-5 --window 4,4 --format json",
          "verify 11,-10,2 --window 5", "river 1,1,-1 --steps 10 --format dot"}) {
        RunResult a = run_cli(cmd), b = run_cli(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("term cap from the environment") {
    // cap below any possible period detection: the expansion gives up
    CHECK(run_cli("cf \"(1+sqrt(6))/1\"", "QRIVER_MAX_TERMS=1").code == 3);
    CHECK(run_cli("cf \"(1+sqrt(6))/1\" --terms 2").code == 3);
    // the cap clamps the verify window instead of failing
    RunResult r = run_cli("verify 1,-2,-5", "QRIVER_MAX_TERMS=2");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["window"].get<int>() == 2);
    // nonsense values are ignored
    CHECK(run_cli("cf \"(0+sqrt(2))/1\"", "QRIVER_MAX_TERMS=banana").code ==
          0);
}

TEST_CASE("dot output is structurally sound") {
    RunResult r = run_cli("river 1,-2,-5 --steps 8 --format dot --depth 3");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "graph qriver {");
    size_t bold = 0, edges = 0;
    bool saw_node_style = false, closed = false;
    std::regex edge_re(
        "^  n[0-9]+ -- n[0-9]+ \\[label=\"-?[0-9]+/[0-9]+ : -?[0-9]+(/[0-9]+)? "
        "\\| -?[0-9]+/[0-9]+ : -?[0-9]+(/[0-9]+)?\"(, style=bold)?\\];$");
    while (std::getline(lines, line)) {
        if (line == "  node [shape=point];") saw_node_style = true;
        if (line == "}") closed = true;
        if (line.find(" -- ") == std::string::npos) continue;
        CHECK(std::regex_match(line, edge_re));
        ++edges;
        if (line.find("style=bold") != std::string::npos) ++bold;
    }
    CHECK(saw_node_style);
    CHECK(closed);
    // the 9 walked edges are bold, the branch layers are not
    CHECK(bold == 9);
    CHECK(edges > bold);
}

TEST_CASE("a tampered report no longer validates") {
    RunResult r = run_cli("verify 1,1,-1");
    json j = json::parse(r.out);
    REQUIRE(report_valid(j));
    json broken = j;
    broken["match"]["matched"] = "yes";
    CHECK(!report_valid(broken));
    json missing = j;
    missing.erase("runs");
    CHECK(!report_valid(missing));
    json badsurd = j;
    badsurd["slope_roots"]["alpha"] = "1 + root 6 over 5";
    CHECK(!report_valid(badsurd));
}
