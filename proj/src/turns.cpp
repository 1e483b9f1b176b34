#include "qriver/turns.hpp"

namespace qriver {

TurnRuns turn_runs(const TurnSequence& seq) {
    TurnRuns out;
    if (seq.letters.empty()) return out;
    Integer count = 1;
    for (size_t i = 1; i < seq.letters.size(); ++i) {
        if (seq.letters[i] == seq.letters[i - 1]) {
            ++count;
        } else {
            out.values.push_back(count);
            count = 1;
        }
    }
    out.values.push_back(count);
    out.first_partial = true;
    out.last_partial = true;
    return out;
}

std::string turns_to_string(const TurnSequence& seq) {
    std::string s;
    s.reserve(seq.letters.size());
    for (Turn t : seq.letters) s += (t == Turn::L ? 'L' : 'R');
    return s;
}

}  // namespace qriver
