#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qriver {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: gcd(|num|, den) = 1, den > 0

// Thrown when an input is outside an operation's mathematical domain
// (square radicand, degenerate segment, wrong form class, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when text input cannot be parsed.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an iteration budget is exhausted before a guaranteed
// terminating computation finished; indicates inputs beyond supported scale.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Integer floor_div(const Integer& a, const Integer& b);
Integer isqrt(const Integer& n);  // floor(sqrt(n)), n >= 0
bool is_square(const Integer& n);

// Splits n >= 1 as k^2 * core with core square-minimal.  Square factors are
// found by trial division up to 10^6 plus a perfect-square test on the
// remaining cofactor, which is complete for n <= 10^12 (and far beyond in
// practice); larger radicands with two distinct prime-square factors above
// the bound keep those squares in core.
void extract_square(const Integer& n, Integer& k, Integer& core);

// Value (p + sqrt(d))/q with q != 0 and d a non-square positive integer, so
// every represented value is a real quadratic irrational.  The triple is
// canonical: equal values have identical (p, q, d).  Construction reduces
// the radical coefficient to its minimum (so d is the least radicand
// representing the value) and then restores q | (d - p^2) by the rescale
// p -> p|q|, d -> d q^2, q -> q|q| when needed; that divisibility keeps the
// continued-fraction recurrence in integers.
class QuadraticSurd {
  public:
    // (p + sqrt(d))/q.  Throws domain_error for q = 0, d <= 0 or d square.
    QuadraticSurd(const Integer& p, const Integer& d, const Integer& q);

    // u + v * sqrt(core_hint), v != 0.  core_hint need not be square-free;
    // its square part is extracted here.
    static QuadraticSurd linear(const Rational& u, const Rational& v,
                                const Integer& radicand);

    const Integer& p() const { return p_; }
    const Integer& d() const { return d_; }
    const Integer& q() const { return q_; }

    // Decomposition value = u + v*sqrt(core) with core square-minimal, v > 0
    // or v < 0 matching the stored sign of q.
    Rational rational_part() const;   // p/q
    Rational radical_coeff() const;   // k/q where d = k^2 * core
    const Integer& radicand_core() const { return core_; }

    QuadraticSurd conjugate() const;  // (p - sqrt(d))/q
    QuadraticSurd negated() const;
    QuadraticSurd plus_integer(const Integer& m) const;
    QuadraticSurd reciprocal() const;

  private:
    QuadraticSurd() = default;
    static QuadraticSurd canonical(const Rational& u, const Rational& v,
                                   const Integer& core);
    friend QuadraticSurd surd_recip_shift(const QuadraticSurd& s,
                                          const Integer& m);

    Integer p_, d_, q_;
    Integer core_;  // square-minimal part of d; d / core is a perfect square
};

Integer surd_floor(const QuadraticSurd& s);

// 1/(s - m), exact.  With s = (p + sqrt(d))/q this is the classical step
// p' = m q - p, q' = (d - p'^2)/q, re-canonicalized.
QuadraticSurd surd_recip_shift(const QuadraticSurd& s, const Integer& m);

QuadraticSurd surd_conjugate(const QuadraticSurd& s);

// Sign of s - r; never 0 since s is irrational.
int surd_cmp_rational(const QuadraticSurd& s, const Rational& r);

// Sign of a - b; 0 iff equal.  Exact for arbitrary radicands via nested
// squaring with sign case analysis.
int surd_cmp(const QuadraticSurd& a, const QuadraticSurd& b);

// Equality is by value, not by stored triple: radicand reduction is best
// effort, so equal values can carry different representations.
inline bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
    return surd_cmp(a, b) == 0;
}

inline bool operator<(const QuadraticSurd& a, const QuadraticSurd& b) {
    return surd_cmp(a, b) < 0;
}

// Decimal approximation for display only; never used in any decision.
std::string surd_approx(const QuadraticSurd& s, unsigned digits = 30);

// Text form "(p+sqrt(d))/q"; see parse_surd for the accepted grammar.
std::string surd_to_string(const QuadraticSurd& s);

Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& r);

}  // namespace qriver
