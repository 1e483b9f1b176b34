#include "qriver/sail.hpp"

#include <algorithm>
#include <utility>

namespace qriver {

namespace {

size_t bit_size(const Rational& r) {
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

// Generous step bound: the floor iteration shrinks coefficient height at a
// fixed geometric rate once alpha > 1, so the step count is linear in the
// input bit size.
size_t normalize_budget(const BinaryQuadraticForm& Q) {
    return 4 * (bit_size(Q.a) + bit_size(Q.h) + bit_size(Q.b) +
                bit_size(discriminant(Q))) +
           64;
}

}  // namespace

NormalizedForm normalize(const BinaryQuadraticForm& Q) {
    SlopeRoots roots = slope_roots(Q);
    QuadraticSurd alpha = roots.alpha;
    QuadraticSurd beta = roots.beta;
    UnimodularMap map = UnimodularMap::identity();
    std::vector<Integer> steps;
    const size_t budget = normalize_budget(Q);
    while (!(surd_cmp_rational(alpha, 1) > 0 &&
             surd_cmp_rational(beta, 0) < 0 &&
             surd_cmp_rational(beta, -1) > 0)) {
        if (steps.size() >= budget)
            throw budget_error("normalize: floor iteration did not settle");
        Integer m = surd_floor(alpha);
        // Same Moebius step on both roots keeps them conjugate.
        alpha = surd_recip_shift(alpha, m);
        beta = surd_recip_shift(beta, m);
        map = compose(map, UnimodularMap(0, 1, 1, m));
        steps.push_back(m);
    }
    return {Q, transform(Q, map), map, alpha, beta, std::move(steps)};
}

LLSWindow lls_window(const BinaryQuadraticForm& Q, size_t n_left,
                     size_t n_right) {
    NormalizedForm N = normalize(Q);
    ContinuedFraction ca = cf_of_surd(N.alpha);
    ContinuedFraction cb = cf_of_surd(N.beta.negated());
    // -beta in (0, 1), so its expansion starts [0; b1, b2, ...] and the
    // mirrored side reads b1, b2, ... outward from the corner.
    if (cb.term(0) != 0)
        throw domain_error("lls_window: mirror slope not in (0, 1)");
    LLSWindow w;
    w.terms.reserve(n_left + n_right + 1);
    for (size_t j = n_left; j >= 1; --j) w.terms.push_back(cb.term(j));
    w.anchor = n_left;
    for (size_t i = 0; i <= n_right; ++i) w.terms.push_back(ca.term(i));
    return w;
}

SailPolyline sail_vertices(const BinaryQuadraticForm& Q, size_t k,
                           SailFrame frame) {
    NormalizedForm N = normalize(Q);
    std::vector<LatticeVector> chain(2 * k + 1);
    chain[k] = {1, 0};
    if (k > 0) {
        ContinuedFraction ca = cf_of_surd(N.alpha);
        ContinuedFraction cb = cf_of_surd(N.beta.negated());
        std::vector<FareyFraction> pa = convergents(ca, 2 * k - 1);
        std::vector<FareyFraction> pb = convergents(cb, 2 * k + 1);
        for (size_t i = 1; i <= k; ++i) {
            // Even convergents p/q of alpha give the vertices (q, p) above
            // the corner; even convergents of -beta give (q, -p) below it.
            const FareyFraction& up = pa[2 * (i - 1)];
            const FareyFraction& dn = pb[2 * i];
            chain[k + i] = {up.den, up.num};
            chain[k - i] = {dn.den, -dn.num};
        }
    }
    if (frame == SailFrame::Original)
        for (LatticeVector& v : chain) v = apply_map(N.map, v);
    return {std::move(chain), k, frame};
}

LLSWindow lls_from_vertices(const SailPolyline& poly) {
    const std::vector<LatticeVector>& v = poly.vertices;
    if (v.size() < 2)
        throw domain_error("lls_from_vertices: need at least two vertices");
    LLSWindow w;
    w.terms.reserve(2 * v.size() - 3);
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        if (i > 0)
            w.terms.push_back(integer_sine(v[i - 1], v[i], v[i + 1]));
        w.terms.push_back(integer_length(v[i], v[i + 1]));
    }
    w.anchor = 2 * poly.corner;
    return w;
}

DualityReport dual_check(const BinaryQuadraticForm& Q, size_t k) {
    // Both identities are unimodular invariants, so the reduced frame
    // suffices.
    NormalizedForm N = normalize(Q);
    const size_t n = 2 * k + 1;
    std::vector<LatticeVector> A(n), B(n);
    A[k] = {1, 0};
    B[k] = {0, 1};
    if (k > 0) {
        ContinuedFraction ca = cf_of_surd(N.alpha);
        ContinuedFraction cb = cf_of_surd(N.beta.negated());
        std::vector<FareyFraction> pa = convergents(ca, 2 * k);
        std::vector<FareyFraction> pb = convergents(cb, 2 * k + 1);
        for (size_t i = 1; i <= k; ++i) {
            A[k + i] = {pa[2 * (i - 1)].den, pa[2 * (i - 1)].num};
            A[k - i] = {pb[2 * i].den, -pb[2 * i].num};
            // The adjacent angle, containing (0, 1), is cut by the same two
            // lines; its chain comes from the odd convergents.
            B[k + i] = {pa[2 * i - 1].den, pa[2 * i - 1].num};
            B[k - i] = {-pb[2 * i - 1].den, pb[2 * i - 1].num};
        }
    }
    DualityReport rep;
    for (size_t i = 0; i + 2 < n; ++i) {
        bool ok = integer_sine(A[i], A[i + 1], A[i + 2]) ==
                      integer_length(B[i], B[i + 1]) &&
                  integer_sine(B[i], B[i + 1], B[i + 2]) ==
                      integer_length(A[i + 1], A[i + 2]);
        ++rep.indices_checked;
        if (!ok && rep.pass) {
            rep.pass = false;
            rep.first_failure = static_cast<long>(i) - static_cast<long>(k);
        }
    }
    return rep;
}

namespace {

// Sign of A - B*sqrt(d) for non-square d > 0; one squaring suffices.
int sign_minus_radical(const Integer& A, const Integer& B, const Integer& d) {
    if (B == 0) return sgn(A);
    if (B > 0) {
        if (A <= 0) return -1;
        return sgn(A * A - B * B * d);
    }
    if (A >= 0) return 1;
    return sgn(B * B * d - A * A);
}

// Side of v relative to the line y = s x: sign of (y - s x).
int line_side(const QuadraticSurd& s, const LatticeVector& v) {
    Integer A = v.y * s.q() - v.x * s.p();
    return sign_minus_radical(A, v.x, s.d()) * sgn(s.q());
}

Integer turn_cross(const LatticeVector& o, const LatticeVector& a,
                   const LatticeVector& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Counterclockwise hull, strict vertices only; collinear input collapses to
// its two endpoints.
std::vector<LatticeVector> convex_hull(std::vector<LatticeVector> pts) {
    std::sort(pts.begin(), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<LatticeVector> lo, up;
    for (const LatticeVector& p : pts) {
        while (lo.size() >= 2 &&
               turn_cross(lo[lo.size() - 2], lo.back(), p) <= 0)
            lo.pop_back();
        lo.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (up.size() >= 2 &&
               turn_cross(up[up.size() - 2], up.back(), *it) <= 0)
            up.pop_back();
        up.push_back(*it);
    }
    lo.pop_back();
    lo.insert(lo.end(), up.begin(), up.end() - 1);
    if (lo.size() == 2 && lo[0] == lo[1]) lo.pop_back();
    return lo;
}

}  // namespace

SailPolyline brute_sail(const BinaryQuadraticForm& Q, const Integer& radius) {
    if (radius < 1)
        throw domain_error("brute_sail: radius must be positive");
    SlopeRoots roots = slope_roots(Q);
    NormalizedForm N = normalize(Q);
    // The corner in original coordinates picks which of the four angles cut
    // out by the two lines is meant.
    LatticeVector corner_pt{N.map.a, N.map.c};
    const int sa = line_side(roots.alpha, corner_pt);
    const int sb = line_side(roots.beta, corner_pt);

    std::vector<LatticeVector> pts;
    for (Integer x = -radius; x <= radius; ++x)
        for (Integer y = -radius; y <= radius; ++y) {
            if (x == 0 && y == 0) continue;
            LatticeVector v{x, y};
            if (line_side(roots.alpha, v) == sa &&
                line_side(roots.beta, v) == sb)
                pts.push_back(v);
        }
    if (pts.empty())
        throw domain_error(
            "brute_sail: no lattice point of the angle within radius");

    std::vector<LatticeVector> hull = convex_hull(std::move(pts));
    std::vector<LatticeVector> chain;
    const size_t m = hull.size();
    if (m <= 2) {
        chain = hull;
    } else {
        // Keep the boundary arc whose edges have the origin strictly on
        // their right; the origin lies outside the hull, so the arc is one
        // nonempty contiguous run.
        const LatticeVector origin{0, 0};
        std::vector<char> facing(m);
        for (size_t i = 0; i < m; ++i)
            facing[i] = turn_cross(hull[i], hull[(i + 1) % m], origin) < 0;
        size_t start = m;
        for (size_t i = 0; i < m; ++i)
            if (facing[i] && !facing[(i + m - 1) % m]) {
                start = i;
                break;
            }
        if (start == m)
            throw domain_error("brute_sail: degenerate hull");
        chain.push_back(hull[start]);
        for (size_t i = start; facing[i]; i = (i + 1) % m)
            chain.push_back(hull[(i + 1) % m]);
    }

    // Order the chain from the beta side to the alpha side, matching the
    // constructed chain: its endpoint cross product has the sign of
    // det(map), flipped from the reduced frame when the map reflects.
    if (chain.size() >= 2) {
        Integer cr = chain.front().x * chain.back().y -
                     chain.front().y * chain.back().x;
        if (sgn(cr) != 0 && sgn(cr) != sgn(N.map.det()))
            std::reverse(chain.begin(), chain.end());
    }

    size_t corner = 0;
    for (size_t i = 0; i < chain.size(); ++i)
        if (chain[i] == corner_pt) {
            corner = i;
            break;
        }
    return {std::move(chain), corner, SailFrame::Original};
}

}  // namespace qriver
