#include "qriver/forms.hpp"

namespace qriver {

BinaryQuadraticForm::BinaryQuadraticForm(Rational a_, Rational h_, Rational b_)
    : a(std::move(a_)), h(std::move(h_)), b(std::move(b_)) {
    if (sgn(a) == 0 && sgn(h) == 0 && sgn(b) == 0)
        throw domain_error("form: all coefficients zero");
}

Rational discriminant(const BinaryQuadraticForm& Q) {
    return Q.h * Q.h - 4 * Q.a * Q.b;
}

Rational evaluate(const BinaryQuadraticForm& Q, const LatticeVector& v) {
    Rational x(v.x), y(v.y);
    return Q.a * x * x + Q.h * x * y + Q.b * y * y;
}

namespace {

bool is_rational_square(const Rational& r) {
    // Canonical form: square iff numerator and denominator are both squares.
    return sgn(r) >= 0 && is_square(r.get_num()) && is_square(r.get_den());
}

}  // namespace

FormClass classify(const BinaryQuadraticForm& Q) {
    Rational disc = discriminant(Q);
    int s = sgn(disc);
    if (s == 0) return FormClass::Degenerate;
    if (s < 0)
        return sgn(Q.a) > 0 ? FormClass::PositiveDefinite
                            : FormClass::NegativeDefinite;
    return is_rational_square(disc) ? FormClass::IndefiniteIsotropic
                                    : FormClass::IndefiniteAnisotropic;
}

namespace {

// Both roots of lead*t^2 + mid*t + last = 0 as surds, largest first.
// Caller guarantees an anisotropic form, which forces lead != 0 and a
// non-square positive discriminant.
std::pair<QuadraticSurd, QuadraticSurd> quadratic_roots(
    const Rational& lead, const Rational& mid, const Rational& disc) {
    // sqrt(N/D) = sqrt(N D)/D
    Integer rad = disc.get_num() * disc.get_den();
    Rational u = -mid / (2 * lead);
    Rational v = Rational(1, 1) / (2 * lead * Rational(disc.get_den()));
    QuadraticSurd r1 = QuadraticSurd::linear(u, v, rad);
    QuadraticSurd r2 = QuadraticSurd::linear(u, -v, rad);
    if (surd_cmp(r1, r2) > 0) return {r1, r2};
    return {r2, r1};
}

}  // namespace

void require_anisotropic(const BinaryQuadraticForm& Q, const char* op) {
    FormClass c = classify(Q);
    if (c != FormClass::IndefiniteAnisotropic)
        throw domain_error(std::string(op) + ": form is " +
                           form_class_name(c) +
                           ", need indefinite-anisotropic");
}

SlopeRoots slope_roots(const BinaryQuadraticForm& Q) {
    require_anisotropic(Q, "slope_roots");
    // Anisotropy rules out b = 0: Q(0,1) = b would be a zero value.
    auto [hi, lo] = quadratic_roots(Q.b, Q.h, discriminant(Q));
    return {hi, lo};
}

FareyRoots farey_roots(const BinaryQuadraticForm& Q) {
    require_anisotropic(Q, "farey_roots");
    auto [hi, lo] = quadratic_roots(Q.a, Q.h, discriminant(Q));
    return {hi, lo};
}

BinaryQuadraticForm transform(const BinaryQuadraticForm& Q,
                              const UnimodularMap& M) {
    Rational a(M.a), c(M.c), b(M.b), d(M.d);
    Rational a2 = Q.a * a * a + Q.h * a * c + Q.b * c * c;
    Rational b2 = Q.a * b * b + Q.h * b * d + Q.b * d * d;
    Rational h2 = 2 * Q.a * a * b + Q.h * (a * d + b * c) + 2 * Q.b * c * d;
    return {a2, h2, b2};
}

std::string form_to_string(const BinaryQuadraticForm& Q) {
    return rational_to_string(Q.a) + "," + rational_to_string(Q.h) + "," +
           rational_to_string(Q.b);
}

const char* form_class_name(FormClass c) {
    switch (c) {
        case FormClass::PositiveDefinite: return "positive-definite";
        case FormClass::NegativeDefinite: return "negative-definite";
        case FormClass::IndefiniteAnisotropic: return "indefinite-anisotropic";
        case FormClass::IndefiniteIsotropic: return "indefinite-isotropic";
        case FormClass::Degenerate: return "degenerate";
    }
    return "unknown";
}

}  // namespace qriver
