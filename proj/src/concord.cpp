#include "qriver/concord.hpp"

#include <algorithm>

namespace qriver {

namespace {

struct Attempt {
    bool ok = false;
    size_t interior = 0;      // interior comparisons made
    size_t progress = 0;      // comparisons before the first failure
    std::optional<std::pair<size_t, size_t>> mismatch;
};

Attempt try_shift(const std::vector<Integer>& a,
                  const std::vector<Integer>& b, long long s) {
    Attempt at;
    at.ok = true;
    for (size_t j = 0; j < b.size(); ++j) {
        long long i = s + static_cast<long long>(j);
        if (i < 0 || i >= static_cast<long long>(a.size())) continue;
        const Integer& av = a[static_cast<size_t>(i)];
        bool interior = j > 0 && j + 1 < b.size();
        bool fits = interior ? b[j] == av : b[j] <= av;
        if (!fits) {
            at.ok = false;
            at.mismatch = {static_cast<size_t>(i), j};
            break;
        }
        ++at.progress;
        if (interior) ++at.interior;
    }
    return at;
}

}  // namespace

MatchReport align(const std::vector<Integer>& a, const std::vector<Integer>& b,
                  size_t min_overlap) {
    if (a.empty() || b.empty())
        throw domain_error("align: empty window");
    size_t interior_terms = b.size() >= 2 ? b.size() - 2 : 0;
    if (std::min(interior_terms, a.size()) < min_overlap)
        throw domain_error("align: windows too short for requested overlap");

    std::vector<long long> shifts;
    shifts.reserve(a.size() + b.size() - 1);
    for (size_t s = 0; s < a.size(); ++s)
        shifts.push_back(static_cast<long long>(s));
    for (size_t s = 1; s < b.size(); ++s)
        shifts.push_back(-static_cast<long long>(s));

    MatchReport best;
    Attempt best_fail;
    MatchReport best_fail_report;
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<Integer> probe = b;
        if (pass == 1) std::reverse(probe.begin(), probe.end());
        for (long long s : shifts) {
            Attempt at = try_shift(a, probe, s);
            if (at.ok && at.interior >= min_overlap) {
                if (!best.matched || at.interior > best.compared_length) {
                    best.matched = true;
                    best.offset = s;
                    best.reversed = pass == 1;
                    best.compared_length = at.interior;
                }
            } else if (!at.ok && (!best_fail.mismatch ||
                                  at.progress > best_fail.progress)) {
                best_fail = at;
                best_fail_report.offset = s;
                best_fail_report.reversed = pass == 1;
                best_fail_report.compared_length = at.interior;
                best_fail_report.first_mismatch = at.mismatch;
            }
        }
    }
    if (best.matched) return best;
    return best_fail_report;
}

TheoremCheck check_theorem(const BinaryQuadraticForm& Q, size_t window) {
    if (window == 0)
        throw domain_error("check_theorem: window must be positive");
    LLSWindow lls = lls_window(Q, window + 4, window + 4);
    size_t steps = 64;
    RiverPath path = river(Q, steps);
    TurnRuns runs = turn_runs(path.turns);
    while (runs.values.size() < window + 2 && steps < (1u << 20)) {
        steps *= 4;
        path = river(Q, steps);
        runs = turn_runs(path.turns);
    }
    MatchReport match = align(lls.terms, runs.values, window);
    return {std::move(lls), std::move(path.turns), std::move(runs),
            std::move(match)};
}

}  // namespace qriver
