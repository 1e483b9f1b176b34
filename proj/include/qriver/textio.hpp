#pragma once

#include "qriver/concord.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace qriver {

// "a,h,b" with rational entries; whitespace around entries is ignored.
BinaryQuadraticForm parse_form(const std::string& text);

// "(p+sqrt(d))/q" or "(p-sqrt(d))/q" with integer p, d, q; whitespace is
// ignored.  Construction rules of QuadraticSurd apply, so a square or
// non-positive d is rejected here.
QuadraticSurd parse_surd(const std::string& text);

// A rational ("p" or "p/q") or a surd in the grammar above.
struct ParsedValue {
    std::optional<Rational> rational;
    std::optional<QuadraticSurd> surd;
};

ParsedValue parse_value(const std::string& text);

// JSON building blocks.  All numbers are emitted as decimal strings so the
// reports stay exact at any size.
nlohmann::json json_integer(const Integer& n);
nlohmann::json json_rational(const Rational& r);
nlohmann::json json_vector(const LatticeVector& v);
nlohmann::json json_form(const BinaryQuadraticForm& Q);
nlohmann::json json_cf(const ContinuedFraction& cf);
nlohmann::json json_window(const LLSWindow& w);
nlohmann::json json_runs(const TurnRuns& runs);
nlohmann::json json_match(const MatchReport& m);

// Subcommand reports; field layout documented in
// schema/qriver-report.schema.json.
nlohmann::json sail_report(const BinaryQuadraticForm& Q, size_t n_left,
                           size_t n_right);
nlohmann::json river_report(const BinaryQuadraticForm& Q, size_t steps);
nlohmann::json verify_report(const BinaryQuadraticForm& Q, size_t window);

// Undirected topograph fragment around the forward river path: river edges
// bold, every edge labeled with its two face regions as "p/q : value".
// depth is the number of branching layers grown away from the river.
std::string river_dot(const BinaryQuadraticForm& Q, size_t steps,
                      size_t depth);

}  // namespace qriver
