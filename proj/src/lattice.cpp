#include "qriver/lattice.hpp"

namespace qriver {

UnimodularMap::UnimodularMap(Integer a_, Integer b_, Integer c_, Integer d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    Integer dt = det();
    if (dt != 1 && dt != -1)
        throw domain_error("unimodular map: determinant must be +-1");
}

Integer det2(const LatticeVector& u, const LatticeVector& v) {
    return u.x * v.y - u.y * v.x;
}

bool is_primitive(const LatticeVector& v) {
    return gcd(v.x, v.y) == 1;
}

Integer integer_length(const LatticeVector& A, const LatticeVector& B) {
    if (A == B) throw domain_error("integer_length: degenerate segment");
    return gcd(B.x - A.x, B.y - A.y);
}

Integer integer_area(const LatticeVector& A, const LatticeVector& B,
                     const LatticeVector& C) {
    return abs(det2(B - A, C - B));
}

Integer integer_sine(const LatticeVector& A, const LatticeVector& B,
                     const LatticeVector& C) {
    Integer area = integer_area(A, B, C);
    if (area == 0) throw domain_error("integer_sine: collinear points");
    Integer ll = integer_length(A, B) * integer_length(B, C);
    if (area % ll != 0)
        throw std::logic_error("integer_sine: area not divisible by lengths");
    return area / ll;
}

LatticeVector apply_map(const UnimodularMap& M, const LatticeVector& v) {
    return {M.a * v.x + M.b * v.y, M.c * v.x + M.d * v.y};
}

UnimodularMap compose(const UnimodularMap& M, const UnimodularMap& N) {
    return {M.a * N.a + M.b * N.c, M.a * N.b + M.b * N.d,
            M.c * N.a + M.d * N.c, M.c * N.b + M.d * N.d};
}

UnimodularMap invert(const UnimodularMap& M) {
    Integer dt = M.det();
    // adjugate over determinant; dt is +-1 so this stays integral
    return {M.d / dt, -M.b / dt, -M.c / dt, M.a / dt};
}

std::string vector_to_string(const LatticeVector& v) {
    return "(" + v.x.get_str() + "," + v.y.get_str() + ")";
}

}  // namespace qriver
