#include "qriver/topograph.hpp"

#include "qriver/sail.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace qriver {

TopographEdge::TopographEdge(LatticeVector left, LatticeVector right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (det2(left_, right_) != 1)
        throw domain_error("TopographEdge: determinant must be +1");
}

TopographEdge base_edge() { return {{1, 0}, {0, 1}}; }

LatticeVector lax_canonical(const LatticeVector& v) {
    if (v.x < 0 || (v.x == 0 && v.y < 0)) return -v;
    return v;
}

FareyFraction farey_label(const LatticeVector& v) {
    if (!is_primitive(v))
        throw domain_error("farey_label: vector must be primitive");
    if (v.y < 0 || (v.y == 0 && v.x < 0)) return {-v.x, -v.y};
    return {v.x, v.y};
}

EdgeValues edge_values(const BinaryQuadraticForm& Q, const TopographEdge& e) {
    EdgeValues vals{evaluate(Q, e.left()), evaluate(Q, e.right()),
                    evaluate(Q, e.ahead()), evaluate(Q, e.behind())};
    if (vals.ahead + vals.behind != 2 * (vals.left + vals.right))
        throw std::logic_error("edge_values: face values not in progression");
    return vals;
}

EdgeKey edge_key(const TopographEdge& e) {
    LatticeVector u = lax_canonical(e.left());
    LatticeVector v = lax_canonical(e.right());
    if (v < u) std::swap(u, v);
    return {std::move(u), std::move(v)};
}

namespace {

SuperbaseKey superbase_key(LatticeVector a, LatticeVector b,
                           LatticeVector c) {
    a = lax_canonical(a);
    b = lax_canonical(b);
    c = lax_canonical(c);
    if (b < a) std::swap(a, b);
    if (c < b) std::swap(b, c);
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b), std::move(c)};
}

}  // namespace

SuperbaseKey ahead_vertex(const TopographEdge& e) {
    return superbase_key(e.left(), e.right(), e.ahead());
}

SuperbaseKey behind_vertex(const TopographEdge& e) {
    return superbase_key(e.left(), e.right(), e.behind());
}

TopographEdge pgl_apply(const UnimodularMap& M, const TopographEdge& e) {
    LatticeVector u = apply_map(M, e.left());
    LatticeVector v = apply_map(M, e.right());
    if (M.det() == 1) return {std::move(u), std::move(v)};
    return {std::move(v), std::move(u)};
}

TopographEdge find_river_edge(const BinaryQuadraticForm& Q) {
    NormalizedForm N = normalize(Q);
    // The map columns span a superbase whose first two regions carry the
    // reduced form's outer coefficients, of opposite signs.
    LatticeVector U{N.map.a, N.map.c};
    LatticeVector V{N.map.b, N.map.d};
    if (det2(U, V) != 1) V = -V;
    if (sgn(evaluate(Q, U)) < 0) {
        LatticeVector t = std::move(U);
        U = std::move(V);
        V = -t;
    }
    TopographEdge e(std::move(U), std::move(V));
    if (!(sgn(evaluate(Q, e.left())) > 0 && sgn(evaluate(Q, e.right())) < 0))
        throw std::logic_error("find_river_edge: orientation failed");
    return e;
}

namespace {

// Continuation of a mixed-sign edge: the ahead region joins the bank of
// its own sign and the new edge keeps the face of the opposite sign.
// Returns the next edge and whether the left face was kept.
std::pair<TopographEdge, bool> advance(const BinaryQuadraticForm& Q,
                                       const TopographEdge& e) {
    LatticeVector w = e.ahead();
    int sw = sgn(evaluate(Q, w));
    if (sw == 0)
        throw domain_error("river: form vanishes on a region ahead");
    if (sw != sgn(evaluate(Q, e.left())))
        return {TopographEdge(e.left(), w), true};
    return {TopographEdge(w, e.right()), false};
}

}  // namespace

RiverStep river_step(const BinaryQuadraticForm& Q, const TopographEdge& e) {
    if (!(sgn(evaluate(Q, e.left())) > 0 && sgn(evaluate(Q, e.right())) < 0))
        throw domain_error(
            "river_step: edge must have the positive face on the left");
    auto [next, kept_left] = advance(Q, e);
    return {std::move(next), kept_left ? Turn::L : Turn::R};
}

RiverPath river(const BinaryQuadraticForm& Q, size_t steps,
                RiverDirection dir) {
    TopographEdge e = find_river_edge(Q);
    if (dir == RiverDirection::Backward) e = e.reversed();
    RiverPath path;
    path.edges.reserve(steps + 1);
    path.turns.letters.reserve(steps);
    path.positive_values.reserve(steps + 1);
    path.negative_values.reserve(steps + 1);
    auto record = [&](const TopographEdge& cur) {
        Rational lv = evaluate(Q, cur.left());
        Rational rv = evaluate(Q, cur.right());
        if (sgn(lv) > 0) {
            path.positive_values.push_back(std::move(lv));
            path.negative_values.push_back(std::move(rv));
        } else {
            path.positive_values.push_back(std::move(rv));
            path.negative_values.push_back(std::move(lv));
        }
        path.edges.push_back(cur);
    };
    record(e);
    for (size_t i = 0; i < steps; ++i) {
        auto [next, kept_left] = advance(Q, e);
        bool left_letter = kept_left == (dir == RiverDirection::Forward);
        path.turns.letters.push_back(left_letter ? Turn::L : Turn::R);
        e = std::move(next);
        record(e);
    }
    return path;
}

std::vector<TopographEdge> river_oracle(const BinaryQuadraticForm& Q,
                                        size_t depth) {
    std::map<EdgeKey, TopographEdge> found;
    auto consider = [&](const TopographEdge& e) {
        if (sgn(evaluate(Q, e.left())) * sgn(evaluate(Q, e.right())) < 0)
            found.emplace(edge_key(e), e);
    };
    // The two directions of the base edge seed the two halves of the tree;
    // expanding ahead only never revisits an edge.
    std::vector<TopographEdge> frontier{base_edge(), base_edge().reversed()};
    consider(frontier[0]);
    for (size_t d = 0; d < depth; ++d) {
        std::vector<TopographEdge> next;
        next.reserve(frontier.size() * 2);
        for (const TopographEdge& e : frontier) {
            LatticeVector w = e.ahead();
            next.emplace_back(e.left(), w);
            next.emplace_back(std::move(w), e.right());
        }
        for (const TopographEdge& e : next) consider(e);
        frontier = std::move(next);
    }
    std::vector<TopographEdge> out;
    out.reserve(found.size());
    for (auto& [key, e] : found) out.push_back(e);
    return out;
}

}  // namespace qriver
