#pragma once

#include "qriver/cfrac.hpp"
#include "qriver/forms.hpp"

#include <optional>

namespace qriver {

// Result of reducing the slope pair (alpha, beta) of an anisotropic form by
// the classical floor iteration (alpha, beta) -> (1/(alpha-m), 1/(beta-m)),
// m = floor(alpha), until alpha > 1 and -1 < beta < 0.
struct NormalizedForm {
    BinaryQuadraticForm original, reduced;
    UnimodularMap map;       // reduced = transform(original, map)
    QuadraticSurd alpha;     // slope roots of reduced; alpha > 1
    QuadraticSurd beta;      // conjugate of alpha, in (-1, 0)
    std::vector<Integer> steps;  // floors taken, in order
};

NormalizedForm normalize(const BinaryQuadraticForm& Q);

// Window of the bi-infinite sequence of integer edge lengths and angle
// sines of the sail: terms[anchor] is the term of the corner edge, with
// n_right continued-fraction terms of alpha after it and n_left terms of
// -beta (leading zero dropped) mirrored before it.
struct LLSWindow {
    std::vector<Integer> terms;
    size_t anchor = 0;
};

LLSWindow lls_window(const BinaryQuadraticForm& Q, size_t n_left,
                     size_t n_right);

enum class SailFrame { Original, Reduced };

// Vertex chain of the boundary of the convex hull of the lattice points
// strictly inside the chosen angle, ordered across the corner; vertices
// [corner] is the corner point ((1,0) in reduced coordinates).
struct SailPolyline {
    std::vector<LatticeVector> vertices;
    size_t corner = 0;
    SailFrame frame = SailFrame::Original;
};

// k vertices on each side of the corner, built from the even convergents of
// the two reduced slope expansions and mapped back through the
// normalization when the original frame is requested.
SailPolyline sail_vertices(const BinaryQuadraticForm& Q, size_t k,
                           SailFrame frame = SailFrame::Original);

// Alternating integer lengths (even positions relative to the anchor) and
// integer sines (odd positions) read off a vertex chain; needs at least two
// vertices.
LLSWindow lls_from_vertices(const SailPolyline& poly);

struct DualityReport {
    bool pass = true;
    size_t indices_checked = 0;
    std::optional<long> first_failure;  // chain index of first violation
};

// Builds the sail of the chosen angle and of the adjacent angle (the cone
// containing (0,1) in reduced coordinates, whose chain comes from the odd
// convergents) and verifies on k indices each way that the angle sines of
// one chain are the edge lengths of the other.
DualityReport dual_check(const BinaryQuadraticForm& Q, size_t k);

// Test oracle: enumerates lattice points with |x|,|y| <= radius strictly
// inside the chosen angle via exact side-of-line comparisons, builds their
// convex hull and returns the chain of the boundary facing the origin.
// Truncation artifacts near the box boundary are expected; callers certify
// vertices by neighbourhood radius before comparing.
SailPolyline brute_sail(const BinaryQuadraticForm& Q, const Integer& radius);

}  // namespace qriver
