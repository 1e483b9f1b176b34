#pragma once

#include "qriver/exact.hpp"
#include "qriver/turns.hpp"

#include <cstddef>
#include <vector>

namespace qriver {

// Simple continued fraction [a0; a1, a2, ...], finite or eventually
// periodic.  All terms after a0 are positive.  Canonical: a finite
// expansion never ends in 1 unless it is the single term [1] (or any other
// lone integer), and a nonempty period is the minimal repeating block as
// found by the first repeated state of the expansion.
struct ContinuedFraction {
    std::vector<Integer> preperiod;
    std::vector<Integer> period;

    bool finite() const { return period.empty(); }
    // Total terms available: preperiod size for finite expansions,
    // unbounded otherwise.
    bool has_term(size_t i) const {
        return !finite() || i < preperiod.size();
    }
    const Integer& term(size_t i) const;
};

// Point of the Farey/Stern-Brocot boundary: num/den with den >= 0,
// gcd(|num|, den) = 1, and den = 0 only for the point at infinity 1/0.
struct FareyFraction {
    Integer num, den;

    friend bool operator==(const FareyFraction&, const FareyFraction&) =
        default;
};

ContinuedFraction cf_of_rational(const Rational& r);

// Expansion of a quadratic surd by the floor/reciprocal recurrence; the
// period is detected by the first repeated (p, q) state at fixed d.
// max_terms bounds the number of emitted terms before giving up.
ContinuedFraction cf_of_surd(const QuadraticSurd& s, size_t max_terms = 4096);

// First k convergents as Farey fractions.  For a finite expansion shorter
// than k the list is truncated.
std::vector<FareyFraction> convergents(const ContinuedFraction& cf, size_t k);

// First n letters of the Farey-tree path of a positive value
// [a0; a1, a2, ...]: a0 letters L, then a1 letters R, then a2 letters L,
// alternating.  For a finite expansion the path ends when the terms are
// exhausted.  Non-positive values are out of domain.
TurnSequence farey_turns(const ContinuedFraction& cf, size_t n);

struct SeparationTriple {
    FareyFraction left, mediant, right;
};

// Descends the Stern-Brocot tree from (0/1, 1/0) by mediants until the
// mediant falls strictly between the two values; returns the first
// separating triple.  Both inputs must be positive and distinct.
SeparationTriple separate(const QuadraticSurd& a, const QuadraticSurd& b);

// Value of a finite expansion.
Rational cf_value_rational(const ContinuedFraction& cf);

// Value of an eventually periodic expansion (period nonempty).
QuadraticSurd cf_value_surd(const ContinuedFraction& cf);

// "[a0; a1, a2, (b1, b2)]"; the parenthesised block repeats forever.
std::string cf_to_string(const ContinuedFraction& cf);

std::string farey_to_string(const FareyFraction& f);

}  // namespace qriver
