#pragma once

#include "qriver/cfrac.hpp"
#include "qriver/forms.hpp"
#include "qriver/turns.hpp"

#include <vector>

namespace qriver {

// Directed edge of the superbase tree: an ordered pair of primitive vectors
// with det(left, right) = +1.  The two adjacent face regions are the lax
// classes of left and right; travel is toward the superbase
// {left, right, left + right}.
class TopographEdge {
  public:
    TopographEdge(LatticeVector left, LatticeVector right);

    const LatticeVector& left() const { return left_; }
    const LatticeVector& right() const { return right_; }
    LatticeVector ahead() const { return left_ + right_; }
    LatticeVector behind() const { return left_ - right_; }
    // Same undirected edge, opposite travel; swaps the two faces.
    TopographEdge reversed() const { return {right_, -left_}; }

    friend bool operator==(const TopographEdge&, const TopographEdge&) =
        default;

  private:
    LatticeVector left_, right_;
};

TopographEdge base_edge();  // ((1,0), (0,1))

// Representative with x > 0, or x = 0 and y > 0: fixes the sign of a lax
// vector pair {v, -v}.
LatticeVector lax_canonical(const LatticeVector& v);

// Face region (x, y) as the boundary point x/y; denominator normalized to
// be non-negative.  Only primitive vectors name regions.
FareyFraction farey_label(const LatticeVector& v);

// The four face values around an edge, each by direct evaluation.  Their
// arithmetic-progression relation ahead + behind = 2(left + right) is
// checked and is an internal error when violated.
struct EdgeValues {
    Rational left, right, ahead, behind;
};

EdgeValues edge_values(const BinaryQuadraticForm& Q, const TopographEdge& e);

// Canonical name of the undirected edge: the lax representatives of its two
// faces, ordered.
struct EdgeKey {
    LatticeVector u, v;

    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
    friend bool operator<(const EdgeKey& a, const EdgeKey& b) {
        if (a.u == b.u) return a.v < b.v;
        return a.u < b.u;
    }
};

EdgeKey edge_key(const TopographEdge& e);

// Canonical name of a superbase: the lax representatives of its three
// regions, sorted.
struct SuperbaseKey {
    LatticeVector u, v, w;

    friend bool operator==(const SuperbaseKey&, const SuperbaseKey&) =
        default;
    friend bool operator<(const SuperbaseKey& a, const SuperbaseKey& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.w < b.w;
    }
};

SuperbaseKey ahead_vertex(const TopographEdge& e);
SuperbaseKey behind_vertex(const TopographEdge& e);

// Change of coordinates.  det +1 maps act directly; det -1 maps swap the
// two faces so the result is again positively oriented.
TopographEdge pgl_apply(const UnimodularMap& M, const TopographEdge& e);

// Directed edge of the river of an anisotropic indefinite form, oriented
// with the positive face on the left, found by slope reduction.
TopographEdge find_river_edge(const BinaryQuadraticForm& Q);

struct RiverStep {
    TopographEdge next;
    Turn turn;
};

// One river step from an edge with the positive face left and the negative
// face right: the ahead region joins the bank matching its sign, the edge
// turns away from it.  Left turns keep the left face, right turns keep the
// right face.
RiverStep river_step(const BinaryQuadraticForm& Q, const TopographEdge& e);

enum class RiverDirection { Forward, Backward };

// steps + 1 edges in traversal order and the steps turns between them,
// with each edge's positive and negative face values.  Backward runs from
// the reversed start edge and flips the turn letters, so the two
// directions emit one consistent letter stream read outward from the
// start.
struct RiverPath {
    std::vector<TopographEdge> edges;
    TurnSequence turns;
    std::vector<Rational> positive_values;
    std::vector<Rational> negative_values;
};

RiverPath river(const BinaryQuadraticForm& Q, size_t steps,
                RiverDirection dir = RiverDirection::Forward);

// Test oracle: breadth-first search of the superbase tree out to the given
// depth from the base edge, keeping every edge whose two faces have
// strictly opposite signs.  Uses direct evaluation only, no sign
// propagation.  Returns representatives sorted by edge_key; definite forms
// give an empty list.
std::vector<TopographEdge> river_oracle(const BinaryQuadraticForm& Q,
                                        size_t depth);

}  // namespace qriver
