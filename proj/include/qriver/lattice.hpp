#pragma once

#include "qriver/exact.hpp"

#include <array>

namespace qriver {

struct LatticeVector {
    Integer x, y;

    friend bool operator==(const LatticeVector&, const LatticeVector&) =
        default;
    friend LatticeVector operator+(const LatticeVector& a,
                                   const LatticeVector& b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend LatticeVector operator-(const LatticeVector& a,
                                   const LatticeVector& b) {
        return {a.x - b.x, a.y - b.y};
    }
    LatticeVector operator-() const { return {-x, -y}; }
    friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
        int c = cmp(a.x, b.x);
        if (c != 0) return c < 0;
        return a.y < b.y;
    }
};

// 2x2 integer matrix with determinant +-1, column-vector convention:
// apply_map(M, v) = M v.
struct UnimodularMap {
    Integer a, b, c, d;  // rows (a b; c d)

    UnimodularMap(Integer a_, Integer b_, Integer c_, Integer d_);
    static UnimodularMap identity() { return {1, 0, 0, 1}; }

    Integer det() const { return a * d - b * c; }
    friend bool operator==(const UnimodularMap&, const UnimodularMap&) =
        default;
};

Integer det2(const LatticeVector& u, const LatticeVector& v);

bool is_primitive(const LatticeVector& v);

// gcd of the coordinate differences: the number of lattice points on the
// segment interior plus one.  A == B is a degenerate segment.
Integer integer_length(const LatticeVector& A, const LatticeVector& B);

// |det(B - A, C - B)|: twice the triangle area, always a non-negative
// integer.
Integer integer_area(const LatticeVector& A, const LatticeVector& B,
                     const LatticeVector& C);

// integer_area / (integer_length(A,B) * integer_length(B,C)); the division
// is always exact, and the result is a positive integer for non-collinear
// A, B, C.  Collinear points are out of domain.
Integer integer_sine(const LatticeVector& A, const LatticeVector& B,
                     const LatticeVector& C);

LatticeVector apply_map(const UnimodularMap& M, const LatticeVector& v);
UnimodularMap compose(const UnimodularMap& M, const UnimodularMap& N);
UnimodularMap invert(const UnimodularMap& M);

std::string vector_to_string(const LatticeVector& v);

}  // namespace qriver
