#pragma once

#include "qriver/exact.hpp"

#include <vector>

namespace qriver {

enum class Turn : uint8_t { L, R };

inline Turn flipped(Turn t) { return t == Turn::L ? Turn::R : Turn::L; }

struct TurnSequence {
    std::vector<Turn> letters;
};

// Run-length encoding of a finite letter window.  The window boundaries cut
// the first and last run of the underlying infinite sequence, so those run
// values are lower bounds, not exact counts.
struct TurnRuns {
    std::vector<Integer> values;
    bool first_partial = false;
    bool last_partial = false;
};

TurnRuns turn_runs(const TurnSequence& seq);

std::string turns_to_string(const TurnSequence& seq);

}  // namespace qriver
