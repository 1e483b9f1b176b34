#pragma once

#include "qriver/exact.hpp"
#include "qriver/lattice.hpp"

namespace qriver {

// Q(x, y) = a x^2 + h x y + b y^2 with rational coefficients, not all zero.
struct BinaryQuadraticForm {
    Rational a, h, b;

    BinaryQuadraticForm(Rational a_, Rational h_, Rational b_);

    friend bool operator==(const BinaryQuadraticForm&,
                           const BinaryQuadraticForm&) = default;
};

enum class FormClass {
    PositiveDefinite,
    NegativeDefinite,
    IndefiniteAnisotropic,  // takes both signs, never zero on Z^2 \ {0}
    IndefiniteIsotropic,    // represents zero nontrivially
    Degenerate,             // zero discriminant
};

Rational discriminant(const BinaryQuadraticForm& Q);  // h^2 - 4ab

Rational evaluate(const BinaryQuadraticForm& Q, const LatticeVector& v);

// Sign of the discriminant decides definite/indefinite/degenerate; an
// indefinite form is isotropic exactly when the discriminant is the square
// of a rational.
FormClass classify(const BinaryQuadraticForm& Q);

struct SlopeRoots {
    QuadraticSurd alpha, beta;  // alpha > beta
};

// Roots of Q(1, t) = b t^2 + h t + a as exact surds, largest first: the
// slopes of the two zero lines y = alpha x, y = beta x.  Anisotropic
// rational forms always have a != 0 and b != 0, so no pre-transform is
// needed before solving.
SlopeRoots slope_roots(const BinaryQuadraticForm& Q);

struct FareyRoots {
    QuadraticSurd alpha, beta;  // alpha > beta
};

// Roots of Q(s, 1) = a s^2 + h s + b, largest first: the Farey-boundary
// limit points of the river.  As a set these are the reciprocals of the
// slope roots.
FareyRoots farey_roots(const BinaryQuadraticForm& Q);

// Throws domain_error naming op unless classify(Q) is
// IndefiniteAnisotropic.
void require_anisotropic(const BinaryQuadraticForm& Q, const char* op);

// Q'(v) = Q(M v).
BinaryQuadraticForm transform(const BinaryQuadraticForm& Q,
                              const UnimodularMap& M);

std::string form_to_string(const BinaryQuadraticForm& Q);
const char* form_class_name(FormClass c);

}  // namespace qriver
