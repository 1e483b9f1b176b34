#include "qriver/exact.hpp"

#include <algorithm>
#include <cctype>

namespace qriver {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw domain_error("isqrt: negative argument");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

void extract_square(const Integer& n, Integer& k, Integer& core) {
    if (n < 1) throw domain_error("extract_square: argument must be positive");
    k = 1;
    core = n;
    // Small primes first; after each full extraction core has no p^2 with
    // p <= bound.  2 and 3 unrolled, then the 6k+-1 wheel.
    static constexpr unsigned long bound = 1000000;
    auto strip = [&](unsigned long f) {
        Integer f2 = Integer(f) * f;
        while (mpz_divisible_p(core.get_mpz_t(), f2.get_mpz_t())) {
            core /= f2;
            k *= f;
        }
    };
    strip(2);
    strip(3);
    for (unsigned long f = 5; f <= bound && Integer(f) * f <= core; f += 6) {
        strip(f);
        strip(f + 2);
    }
    if (is_square(core)) {
        Integer r = isqrt(core);
        k *= r;
        core = 1;
    }
}

QuadraticSurd QuadraticSurd::canonical(const Rational& u, const Rational& v,
                                       const Integer& core) {
    if (sgn(v) == 0) throw domain_error("surd: radical coefficient is zero");
    if (core < 2) throw domain_error("surd: radicand is a perfect square");
    // Common denominator L, then reduce the integer triple (A, C, L) so the
    // radical coefficient C is the least possible; fold C into the radicand.
    Integer L = lcm(u.get_den(), v.get_den());
    Integer A = u.get_num() * (L / u.get_den());
    Integer C = v.get_num() * (L / v.get_den());
    Integer g = gcd(gcd(A, C), L);
    A /= g;
    C /= g;
    L /= g;
    if (C < 0) {
        A = -A;
        C = -C;
        L = -L;
    }
    QuadraticSurd s;
    s.p_ = A;
    s.d_ = C * C * core;
    s.q_ = L;
    s.core_ = core;
    Integer rem = (s.d_ - s.p_ * s.p_) % s.q_;
    if (rem != 0) {
        Integer aq = abs(s.q_);
        s.p_ *= aq;
        s.d_ *= s.q_ * s.q_;
        s.q_ *= aq;
    }
    return s;
}

QuadraticSurd::QuadraticSurd(const Integer& p, const Integer& d,
                             const Integer& q) {
    if (q == 0) throw domain_error("surd: zero denominator");
    if (d <= 0) throw domain_error("surd: radicand must be positive");
    Integer k, core;
    extract_square(d, k, core);
    if (core == 1) throw domain_error("surd: radicand is a perfect square");
    *this = canonical(Rational(p) / Rational(q), Rational(k) / Rational(q),
                      core);
}

QuadraticSurd QuadraticSurd::linear(const Rational& u, const Rational& v,
                                    const Integer& radicand) {
    if (radicand <= 0) throw domain_error("surd: radicand must be positive");
    Integer k, core;
    extract_square(radicand, k, core);
    if (core == 1) throw domain_error("surd: radicand is a perfect square");
    return canonical(u, v * Rational(k), core);
}

Rational QuadraticSurd::rational_part() const {
    Rational r(p_);
    r /= Rational(q_);
    return r;
}

Rational QuadraticSurd::radical_coeff() const {
    Integer k = isqrt(d_ / core_);
    Rational r(k);
    r /= Rational(q_);
    return r;
}

QuadraticSurd QuadraticSurd::conjugate() const {
    return canonical(rational_part(), -radical_coeff(), core_);
}

QuadraticSurd QuadraticSurd::negated() const {
    return canonical(-rational_part(), -radical_coeff(), core_);
}

QuadraticSurd QuadraticSurd::plus_integer(const Integer& m) const {
    return canonical(rational_part() + Rational(m), radical_coeff(), core_);
}

QuadraticSurd QuadraticSurd::reciprocal() const {
    // 1/(u + v sqrt(c)) = (u - v sqrt(c)) / (u^2 - v^2 c)
    Rational u = rational_part();
    Rational v = radical_coeff();
    Rational n = u * u - v * v * Rational(core_);
    return canonical(u / n, -v / n, core_);
}

Integer surd_floor(const QuadraticSurd& s) {
    // sqrt(d) lies strictly between r and r+1, so (p + sqrt(d))/q lies
    // strictly between consecutive rationals with denominator q.
    Integer r = isqrt(s.d());
    if (s.q() > 0) return floor_div(s.p() + r, s.q());
    return floor_div(-(s.p() + r + 1), -s.q());
}

QuadraticSurd surd_recip_shift(const QuadraticSurd& s, const Integer& m) {
    Integer p1 = m * s.q() - s.p();
    Integer q1 = (s.d() - p1 * p1) / s.q();
    if (q1 == 0) throw domain_error("surd_recip_shift: internal zero");
    Integer k = isqrt(s.d() / s.radicand_core());
    // (p1 + sqrt(d))/q1 = p1/q1 + (k/q1) sqrt(core); core is already
    // square-minimal, so no fresh extraction is needed.
    return QuadraticSurd::canonical(Rational(p1) / Rational(q1),
                                    Rational(k) / Rational(q1),
                                    s.radicand_core());
}

QuadraticSurd surd_conjugate(const QuadraticSurd& s) { return s.conjugate(); }

int surd_cmp_rational(const QuadraticSurd& s, const Rational& r) {
    // sign of u - r + v sqrt(c): rational side t = u - r, radical side v.
    Rational t = s.rational_part() - r;
    Rational v = s.radical_coeff();
    int st = sgn(t), sv = sgn(v);
    if (st == sv) return st;
    if (st == 0) return sv;
    if (sv == 0) return st;
    // Opposite signs: compare t^2 against v^2 c.
    int c = cmp(t * t, v * v * Rational(s.radicand_core()));
    return c > 0 ? st : sv;
}

namespace {

// Sign of A + B*sqrt(x) + C*sqrt(y) for integers with x, y > 0 non-square.
int sign_two_radicals(const Integer& A, const Integer& B, const Integer& x,
                      const Integer& C, const Integer& y) {
    // First the radical pair R = B sqrt(x) + C sqrt(y).
    int sb = sgn(B), sc = sgn(C);
    int sr;
    if (sb == 0 && sc == 0) return sgn(A);
    if (sb == 0) {
        sr = sc;
    } else if (sc == 0 || sb == sc) {
        sr = sb;
    } else {
        int c = cmp(B * B * x, C * C * y);
        sr = c == 0 ? 0 : (c > 0 ? sb : sc);
    }
    int sa = sgn(A);
    if (sr == 0) return sa;
    if (sa == 0 || sa == sr) return sa == 0 ? sr : sa;
    // A and R have opposite signs: compare A^2 with R^2 = B^2 x + C^2 y +
    // 2BC sqrt(xy).  Let D = A^2 - B^2 x - C^2 y; need sign of D - 2BC*sqrt(xy)
    // which decides |A| vs |R|.
    Integer D = A * A - B * B * x - C * C * y;
    Integer E = 2 * B * C;  // coefficient of sqrt(xy)
    int sd = sgn(D), se = sgn(E);
    int diff;  // sign of D - E sqrt(xy)
    if (se == 0) {
        diff = sd;
    } else if (sd != se) {
        diff = sd != 0 ? sd : -se;
    } else {
        int c = cmp(D * D, E * E * x * y);
        diff = c == 0 ? 0 : (c > 0 ? sd : -sd);
    }
    // diff > 0 means A^2 > R^2, i.e. |A| > |R|, so sign is sa.
    if (diff == 0) return 0;
    return diff > 0 ? sa : sr;
}

}  // namespace

int surd_cmp(const QuadraticSurd& a, const QuadraticSurd& b) {
    if (a.p() == b.p() && a.q() == b.q() && a.d() == b.d()) return 0;
    if (a.radicand_core() == b.radicand_core()) {
        // Difference is t + w sqrt(c) with rational t, w.
        Rational t = a.rational_part() - b.rational_part();
        Rational w = a.radical_coeff() - b.radical_coeff();
        int st = sgn(t), sw = sgn(w);
        if (st == sw) return st == 0 ? 0 : st;
        if (st == 0) return sw;
        if (sw == 0) return st;
        int c = cmp(t * t, w * w * Rational(a.radicand_core()));
        if (c == 0) return 0;
        return c > 0 ? st : sw;
    }
    // a - b = (p1 q2 - p2 q1 + q2 sqrt(d1) - q1 sqrt(d2)) / (q1 q2)
    Integer A = a.p() * b.q() - b.p() * a.q();
    int s = sign_two_radicals(A, b.q(), a.d(), -a.q(), b.d());
    int denom = sgn(a.q()) * sgn(b.q());
    return s * denom;
}

std::string surd_approx(const QuadraticSurd& s, unsigned digits) {
    mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(digits * 4 + 64);
    mpf_class d(s.d(), prec), q(s.q(), prec), p(s.p(), prec);
    mpf_class v = (p + sqrt(d)) / q;
    mp_exp_t exp;
    std::string m = v.get_str(exp, 10, digits);
    bool neg = !m.empty() && m[0] == '-';
    std::string digits_only = neg ? m.substr(1) : m;
    if (digits_only.empty()) digits_only = "0";
    std::string out = neg ? "-" : "";
    if (exp <= 0) {
        out += "0." + std::string(static_cast<size_t>(-exp), '0') + digits_only;
    } else if (static_cast<size_t>(exp) >= digits_only.size()) {
        out += digits_only +
               std::string(static_cast<size_t>(exp) - digits_only.size(), '0');
    } else {
        out += digits_only.substr(0, static_cast<size_t>(exp)) + "." +
               digits_only.substr(static_cast<size_t>(exp));
    }
    return out;
}

std::string surd_to_string(const QuadraticSurd& s) {
    return "(" + s.p().get_str() + "+sqrt(" + s.d().get_str() + "))/" +
           s.q().get_str();
}

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw parse_error("empty rational");
    size_t slash = t.find('/');
    auto check_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto drop_plus = [](const std::string& s) {
        return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    };
    try {
        if (slash == std::string::npos) {
            if (!check_int(t)) throw parse_error("bad integer: " + text);
            return Rational(Integer(drop_plus(t)));
        }
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (!check_int(num) || !check_int(den))
            throw parse_error("bad rational: " + text);
        Integer d(drop_plus(den));
        if (d == 0) throw parse_error("zero denominator: " + text);
        Rational r(Integer(drop_plus(num)), d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational: " + text);
    }
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace qriver
