#pragma once

#include "qriver/sail.hpp"
#include "qriver/topograph.hpp"

#include <optional>
#include <utility>

namespace qriver {

struct MatchReport {
    bool matched = false;
    // Index in a of the probe's first term; negative when the probe starts
    // before a.  Refers to the probe as placed, after any reversal.
    long long offset = 0;
    bool reversed = false;
    size_t compared_length = 0;  // interior terms compared exactly
    // (a index, placed probe index) of the failing comparison of the best
    // attempt; only set when matched is false.
    std::optional<std::pair<size_t, size_t>> first_mismatch;
};

// Places the probe b, then reversed b, at every shift against a.  Interior
// terms of b must match exactly; the first and last term are cut runs and
// must only be bounded above by the overlapped term.  Terms sliding past
// either end of a are ignored.  A placement is acceptable when at least
// min_overlap interior terms were compared; among acceptable placements
// the most interior comparisons win, unreversed before reversed, smaller
// non-negative shifts before negative ones.  Throws domain_error when no
// placement could ever reach min_overlap.
MatchReport align(const std::vector<Integer>& a, const std::vector<Integer>& b,
                  size_t min_overlap = 4);

struct TheoremCheck {
    LLSWindow lls;
    TurnSequence turns;
    TurnRuns runs;
    MatchReport match;
};

// Verdict of the main comparison for one form: the two-sided window of
// sail terms around the corner against the run-length encoding of the
// river turn stream, requiring window interior runs to agree.  The river
// is extended adaptively until it covers window + 2 runs or a step budget
// is hit.
TheoremCheck check_theorem(const BinaryQuadraticForm& Q, size_t window);

}  // namespace qriver
