#include "qriver/textio.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace qriver;

size_t env_term_cap() {
    const char* env = std::getenv("QRIVER_MAX_TERMS");
    if (!env) return SIZE_MAX;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return SIZE_MAX;
    return static_cast<size_t>(v);
}

std::pair<size_t, size_t> parse_window_pair(const std::string& text) {
    size_t comma = text.find(',');
    auto one = [](const std::string& part) {
        size_t pos = 0;
        unsigned long v = std::stoul(part, &pos);
        if (pos != part.size())
            throw parse_error("bad window count '" + part + "'");
        return static_cast<size_t>(v);
    };
    try {
        if (comma == std::string::npos) {
            size_t n = one(text);
            return {n, n};
        }
        return {one(text.substr(0, comma)), one(text.substr(comma + 1))};
    } catch (const std::logic_error&) {
        throw parse_error("bad --window value '" + text + "'");
    }
}

std::string window_text(const LLSWindow& w) {
    std::string s;
    for (size_t i = 0; i < w.terms.size(); ++i) {
        if (i) s += ' ';
        if (i == w.anchor)
            s += '[' + w.terms[i].get_str() + ']';
        else
            s += w.terms[i].get_str();
    }
    return s;
}

std::string runs_text(const TurnRuns& runs) {
    std::string s;
    for (size_t i = 0; i < runs.values.size(); ++i) {
        if (i) s += ' ';
        s += runs.values[i].get_str();
    }
    return s;
}

int cmd_cf(const std::string& value, size_t budget) {
    ParsedValue v;
    try {
        v = parse_value(value);
    } catch (const domain_error& e) {
        // construction failures of the value count as bad input
        throw parse_error(e.what());
    }
    ContinuedFraction cf;
    if (v.rational)
        cf = cf_of_rational(*v.rational);
    else
        cf = cf_of_surd(*v.surd, budget);
    std::cout << cf_to_string(cf) << "\n";
    return 0;
}

int cmd_sail(const std::string& form, const std::string& window,
             const std::string& format, size_t cap) {
    auto [n_left, n_right] = parse_window_pair(window);
    n_left = std::min(n_left, cap);
    n_right = std::min(n_right, cap);
    BinaryQuadraticForm Q = parse_form(form);
    nlohmann::json j = sail_report(Q, n_left, n_right);
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "form: " << form_to_string(Q) << "\n"
              << "classification: " << j["classification"].get<std::string>()
              << "\n"
              << "discriminant: " << j["discriminant"].get<std::string>()
              << "\n"
              << "reduced: " << j["reduced"]["form"]["a"].get<std::string>()
              << "," << j["reduced"]["form"]["h"].get<std::string>() << ","
              << j["reduced"]["form"]["b"].get<std::string>() << "\n"
              << "alpha: " << j["reduced"]["alpha"].get<std::string>() << "\n"
              << "beta: " << j["reduced"]["beta"].get<std::string>() << "\n"
              << "lls: ";
    LLSWindow w = lls_window(Q, n_left, n_right);
    std::cout << window_text(w) << "\n" << "vertices:";
    for (const auto& pt : j["vertices"]["points"])
        std::cout << " (" << pt[0].get<std::string>() << ","
                  << pt[1].get<std::string>() << ")";
    std::cout << "\n";
    return 0;
}

int cmd_river(const std::string& form, size_t steps, size_t depth,
              const std::string& format) {
    BinaryQuadraticForm Q = parse_form(form);
    if (format == "dot") {
        std::cout << river_dot(Q, steps, depth);
        return 0;
    }
    nlohmann::json j = river_report(Q, steps);
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    RiverPath path = river(Q, steps);
    TurnRuns runs = turn_runs(path.turns);
    std::cout << "form: " << form_to_string(Q) << "\n"
              << "edges: " << path.edges.size() << "\n"
              << "turns: " << turns_to_string(path.turns) << "\n"
              << "runs: " << runs_text(runs)
              << "  (boundary runs truncated)\n";
    return 0;
}

int cmd_verify(const std::string& form, size_t window, size_t cap,
               const std::string& format) {
    BinaryQuadraticForm Q = parse_form(form);
    window = std::max<size_t>(1, std::min(window, cap));
    nlohmann::json j = verify_report(Q, window);
    bool matched = j["match"]["matched"].get<bool>();
    if (format == "text") {
        std::cout << "matched: " << (matched ? "yes" : "no") << " (offset "
                  << j["match"]["offset"].dump() << ", "
                  << (j["match"]["reversed"].get<bool>() ? "reversed"
                                                         : "not reversed")
                  << ", " << j["match"]["compared_length"].dump()
                  << " interior runs compared)\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return matched ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arnold sails and Conway rivers of binary quadratic forms"};
    app.require_subcommand(1);

    std::string value, form;
    std::string window_pair = "6,6";
    std::string sail_format = "text";
    std::string river_format = "text";
    std::string verify_format = "json";
    unsigned long long terms = 4096;
    unsigned long long steps = 12;
    unsigned long long depth = 6;
    unsigned long long window = 6;

    CLI::App* cf = app.add_subcommand(
        "cf", "Continued fraction of a rational or a quadratic surd");
    cf->add_option("value", value, "rational p/q or surd (p+sqrt(d))/q")
        ->required();
    cf->add_option("--terms", terms, "term budget for the period search");

    CLI::App* sail = app.add_subcommand(
        "sail", "Sail vertices and the two-sided term window of a form");
    sail->add_option("form", form, "form a,h,b")->required();
    sail->add_option("--window", window_pair, "terms left,right of the corner");
    sail->add_option("--format", sail_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* river = app.add_subcommand(
        "river", "Walk the river of a form through the superbase tree");
    river->add_option("form", form, "form a,h,b")->required();
    river->add_option("--steps", steps, "number of river steps");
    river->add_option("--depth", depth, "branch layers in dot output");
    river->add_option("--format", river_format, "text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    CLI::App* verify = app.add_subcommand(
        "verify", "Check the term window against the river turn runs");
    verify->add_option("form", form, "form a,h,b")->required();
    verify->add_option("--window", window, "interior runs to compare");
    verify->add_option("--format", verify_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const size_t cap = env_term_cap();
    try {
        if (cf->parsed())
            return cmd_cf(value, std::min(static_cast<size_t>(terms), cap));
        if (sail->parsed())
            return cmd_sail(form, window_pair, sail_format, cap);
        if (river->parsed())
            return cmd_river(form, static_cast<size_t>(steps),
                             static_cast<size_t>(depth), river_format);
        return cmd_verify(form, static_cast<size_t>(window), cap,
                          verify_format);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
