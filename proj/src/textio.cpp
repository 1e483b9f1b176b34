#include "qriver/textio.hpp"

#include <cctype>
#include <cstring>
#include <map>
#include <utility>

namespace qriver {

using nlohmann::json;

BinaryQuadraticForm parse_form(const std::string& text) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    if (parts.size() != 3)
        throw parse_error("parse_form: expected 'a,h,b', got '" + text + "'");
    return {parse_rational(parts[0]), parse_rational(parts[1]),
            parse_rational(parts[2])};
}

QuadraticSurd parse_surd(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    size_t pos = 0;
    auto fail = [&text]() {
        throw parse_error("parse_surd: expected (p+sqrt(d))/q, got '" + text +
                          "'");
    };
    auto expect = [&](const char* lit) {
        size_t n = std::strlen(lit);
        if (s.compare(pos, n, lit) != 0) fail();
        pos += n;
    };
    auto integer = [&]() {
        size_t from = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == digits) fail();
        std::string t = s.substr(from, pos - from);
        if (t[0] == '+') t.erase(0, 1);
        return Integer(t);
    };
    expect("(");
    Integer p = integer();
    if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) fail();
    bool minus = s[pos] == '-';
    ++pos;
    expect("sqrt(");
    Integer d = integer();
    expect("))/");
    Integer q = integer();
    if (pos != s.size()) fail();
    // (p - sqrt(d))/q = (-p + sqrt(d))/(-q)
    if (minus) return {-p, d, -q};
    return {p, d, q};
}

ParsedValue parse_value(const std::string& text) {
    ParsedValue v;
    if (text.find("sqrt") != std::string::npos)
        v.surd = parse_surd(text);
    else
        v.rational = parse_rational(text);
    return v;
}

json json_integer(const Integer& n) { return n.get_str(); }

json json_rational(const Rational& r) { return rational_to_string(r); }

json json_vector(const LatticeVector& v) {
    return json::array({v.x.get_str(), v.y.get_str()});
}

json json_form(const BinaryQuadraticForm& Q) {
    return {{"a", json_rational(Q.a)},
            {"h", json_rational(Q.h)},
            {"b", json_rational(Q.b)}};
}

json json_cf(const ContinuedFraction& cf) {
    json pre = json::array();
    for (const Integer& t : cf.preperiod) pre.push_back(t.get_str());
    json per = json::array();
    for (const Integer& t : cf.period) per.push_back(t.get_str());
    return {{"preperiod", std::move(pre)}, {"period", std::move(per)}};
}

json json_window(const LLSWindow& w) {
    json terms = json::array();
    for (const Integer& t : w.terms) terms.push_back(t.get_str());
    return {{"terms", std::move(terms)}, {"anchor", w.anchor}};
}

json json_runs(const TurnRuns& runs) {
    json vals = json::array();
    for (const Integer& v : runs.values) vals.push_back(v.get_str());
    return {{"values", std::move(vals)},
            {"first_partial", runs.first_partial},
            {"last_partial", runs.last_partial}};
}

json json_match(const MatchReport& m) {
    json j{{"matched", m.matched},
           {"offset", m.offset},
           {"reversed", m.reversed},
           {"compared_length", m.compared_length}};
    if (m.first_mismatch)
        j["first_mismatch"] = {{"a", m.first_mismatch->first},
                               {"b", m.first_mismatch->second}};
    return j;
}

namespace {

json json_roots_pair(const QuadraticSurd& alpha, const QuadraticSurd& beta) {
    return {{"alpha", surd_to_string(alpha)}, {"beta", surd_to_string(beta)}};
}

json json_reduced(const NormalizedForm& N) {
    json steps = json::array();
    for (const Integer& m : N.steps) steps.push_back(m.get_str());
    json map = json::array(
        {json::array({N.map.a.get_str(), N.map.b.get_str()}),
         json::array({N.map.c.get_str(), N.map.d.get_str()})});
    return {{"form", json_form(N.reduced)},
            {"map", std::move(map)},
            {"steps", std::move(steps)},
            {"alpha", surd_to_string(N.alpha)},
            {"beta", surd_to_string(N.beta)}};
}

json json_form_header(const BinaryQuadraticForm& Q) {
    return {{"form", json_form(Q)},
            {"discriminant", json_rational(discriminant(Q))},
            {"classification", form_class_name(classify(Q))}};
}

json json_face(const BinaryQuadraticForm& Q, const LatticeVector& v) {
    return {{"vector", json_vector(v)},
            {"label", farey_to_string(farey_label(v))},
            {"value", json_rational(evaluate(Q, v))}};
}

}  // namespace

json sail_report(const BinaryQuadraticForm& Q, size_t n_left,
                 size_t n_right) {
    NormalizedForm N = normalize(Q);
    json j = json_form_header(Q);
    SlopeRoots sr = slope_roots(Q);
    FareyRoots fr = farey_roots(Q);
    j["slope_roots"] = json_roots_pair(sr.alpha, sr.beta);
    j["farey_roots"] = json_roots_pair(fr.alpha, fr.beta);
    j["reduced"] = json_reduced(N);
    j["lls_window"] = json_window(lls_window(Q, n_left, n_right));
    size_t k = std::min(n_left, n_right) / 2 + 1;
    SailPolyline poly = sail_vertices(Q, k, SailFrame::Original);
    json pts = json::array();
    for (const LatticeVector& v : poly.vertices) pts.push_back(json_vector(v));
    j["vertices"] = {{"frame", "original"},
                     {"corner", poly.corner},
                     {"points", std::move(pts)}};
    return j;
}

json river_report(const BinaryQuadraticForm& Q, size_t steps) {
    RiverPath path = river(Q, steps);
    json j = json_form_header(Q);
    FareyRoots fr = farey_roots(Q);
    j["farey_roots"] = json_roots_pair(fr.alpha, fr.beta);
    j["steps"] = steps;
    json edges = json::array();
    for (const TopographEdge& e : path.edges)
        edges.push_back({{"left", json_face(Q, e.left())},
                         {"right", json_face(Q, e.right())}});
    j["edges"] = std::move(edges);
    j["turns"] = turns_to_string(path.turns);
    j["runs"] = json_runs(turn_runs(path.turns));
    return j;
}

json verify_report(const BinaryQuadraticForm& Q, size_t window) {
    TheoremCheck tc = check_theorem(Q, window);
    json j = json_form_header(Q);
    SlopeRoots sr = slope_roots(Q);
    FareyRoots fr = farey_roots(Q);
    j["slope_roots"] = json_roots_pair(sr.alpha, sr.beta);
    j["farey_roots"] = json_roots_pair(fr.alpha, fr.beta);
    j["reduced"] = json_reduced(normalize(Q));
    j["window"] = window;
    j["lls_window"] = json_window(tc.lls);
    j["turns"] = turns_to_string(tc.turns);
    j["runs"] = json_runs(tc.runs);
    j["match"] = json_match(tc.match);
    return j;
}

std::string river_dot(const BinaryQuadraticForm& Q, size_t steps,
                      size_t depth) {
    RiverPath path = river(Q, steps);
    // Undirected fragment: the river itself plus the branches hanging off
    // it, grown ahead from every directed orientation of the path edges.
    std::map<EdgeKey, std::pair<TopographEdge, bool>> edges;
    std::vector<TopographEdge> frontier;
    frontier.reserve(2 * path.edges.size());
    for (const TopographEdge& e : path.edges) {
        edges.emplace(edge_key(e), std::make_pair(e, true));
        frontier.push_back(e);
        frontier.push_back(e.reversed());
    }
    for (size_t d = 0; d < depth; ++d) {
        std::vector<TopographEdge> next;
        next.reserve(frontier.size() * 2);
        for (const TopographEdge& e : frontier) {
            LatticeVector w = e.ahead();
            next.emplace_back(e.left(), w);
            next.emplace_back(std::move(w), e.right());
        }
        for (const TopographEdge& e : next)
            edges.emplace(edge_key(e), std::make_pair(e, false));
        frontier = std::move(next);
    }

    std::map<SuperbaseKey, size_t> nodes;
    auto node_id = [&nodes](const SuperbaseKey& k) {
        return nodes.emplace(k, nodes.size()).first->second;
    };
    std::string out = "graph qriver {\n";
    out += "  graph [label=\"Q = " + form_to_string(Q) + "\"];\n";
    out += "  node [shape=point];\n";
    for (const auto& [key, entry] : edges) {
        const TopographEdge& e = entry.first;
        size_t from = node_id(behind_vertex(e));
        size_t to = node_id(ahead_vertex(e));
        out += "  n" + std::to_string(from) + " -- n" + std::to_string(to) +
               " [label=\"" + farey_to_string(farey_label(e.left())) + " : " +
               rational_to_string(evaluate(Q, e.left())) + " | " +
               farey_to_string(farey_label(e.right())) + " : " +
               rational_to_string(evaluate(Q, e.right())) + "\"";
        if (entry.second) out += ", style=bold";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace qriver
