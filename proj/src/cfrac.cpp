#include "qriver/cfrac.hpp"

#include <map>
#include <utility>

namespace qriver {

const Integer& ContinuedFraction::term(size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    if (period.empty())
        throw domain_error("continued fraction: term index past finite end");
    return period[(i - preperiod.size()) % period.size()];
}

ContinuedFraction cf_of_rational(const Rational& r) {
    ContinuedFraction cf;
    Integer num = r.get_num(), den = r.get_den();
    while (true) {
        Integer a = floor_div(num, den);
        cf.preperiod.push_back(a);
        Integer rem = num - a * den;
        if (rem == 0) break;
        num = den;
        den = rem;
    }
    // Floor-based Euclid cannot end in a trailing 1 after the first term,
    // but normalize defensively so the canonical-form invariant is local.
    if (cf.preperiod.size() > 1 && cf.preperiod.back() == 1) {
        cf.preperiod.pop_back();
        cf.preperiod.back() += 1;
    }
    return cf;
}

ContinuedFraction cf_of_surd(const QuadraticSurd& s, size_t max_terms) {
    ContinuedFraction cf;
    std::vector<Integer> terms;
    std::map<std::pair<Integer, Integer>, size_t> seen;
    QuadraticSurd x = s;
    for (size_t i = 0; i < max_terms; ++i) {
        auto state = std::make_pair(x.p(), x.q());
        auto it = seen.find(state);
        if (it != seen.end()) {
            size_t start = it->second;
            cf.preperiod.assign(terms.begin(), terms.begin() + start);
            cf.period.assign(terms.begin() + start, terms.end());
            return cf;
        }
        seen.emplace(state, i);
        Integer m = surd_floor(x);
        terms.push_back(m);
        x = surd_recip_shift(x, m);
    }
    throw budget_error("cf_of_surd: no period within term budget");
}

std::vector<FareyFraction> convergents(const ContinuedFraction& cf, size_t k) {
    std::vector<FareyFraction> out;
    Integer h1 = 1, h2 = 0;  // numerators at indices i-1, i-2
    Integer k1 = 0, k2 = 1;  // denominators
    for (size_t i = 0; i < k && cf.has_term(i); ++i) {
        const Integer& a = cf.term(i);
        Integer h = a * h1 + h2;
        Integer den = a * k1 + k2;
        out.push_back({h, den});
        h2 = std::exchange(h1, h);
        k2 = std::exchange(k1, den);
    }
    return out;
}

TurnSequence farey_turns(const ContinuedFraction& cf, size_t n) {
    if (!cf.has_term(0))
        throw domain_error("farey_turns: empty expansion");
    const Integer& a0 = cf.term(0);
    // a0 >= 1 puts the value above 1; a0 = 0 with further terms puts it in
    // (0, 1); anything else is non-positive.
    if (!(a0 >= 1 || (a0 == 0 && cf.has_term(1))))
        throw domain_error("farey_turns: value must be positive");
    TurnSequence seq;
    Turn letter = Turn::L;
    for (size_t i = 0; seq.letters.size() < n && cf.has_term(i); ++i) {
        const Integer& a = cf.term(i);
        for (Integer c = 0; c < a && seq.letters.size() < n; ++c)
            seq.letters.push_back(letter);
        letter = flipped(letter);
    }
    return seq;
}

SeparationTriple separate(const QuadraticSurd& a, const QuadraticSurd& b) {
    if (a == b) throw domain_error("separate: values must be distinct");
    Rational zero(0);
    if (surd_cmp_rational(a, zero) <= 0 || surd_cmp_rational(b, zero) <= 0)
        throw domain_error("separate: values must be positive");
    FareyFraction left{0, 1}, right{1, 0};
    for (int budget = 0; budget < 200000; ++budget) {
        FareyFraction med{left.num + right.num, left.den + right.den};
        Rational m(med.num, med.den);
        m.canonicalize();
        int ca = surd_cmp_rational(a, m);
        int cb = surd_cmp_rational(b, m);
        if (ca < 0 && cb < 0) {
            right = med;
        } else if (ca > 0 && cb > 0) {
            left = med;
        } else {
            return {left, med, right};
        }
    }
    throw budget_error("separate: values too close for walk budget");
}

Rational cf_value_rational(const ContinuedFraction& cf) {
    if (!cf.finite())
        throw domain_error("cf_value_rational: expansion is periodic");
    if (cf.preperiod.empty())
        throw domain_error("cf_value_rational: empty expansion");
    Rational v(cf.preperiod.back());
    for (size_t i = cf.preperiod.size() - 1; i-- > 0;) {
        v = Rational(cf.preperiod[i]) + Rational(1) / v;
    }
    return v;
}

QuadraticSurd cf_value_surd(const ContinuedFraction& cf) {
    if (cf.finite())
        throw domain_error("cf_value_surd: expansion is finite");
    // Purely periodic tail t satisfies t = (A t + B)/(C t + D) where
    // (A B; C D) is the product of (c 1; 1 0) over the period; t is the
    // larger root of C t^2 + (D - A) t - B = 0.
    Integer A = 1, B = 0, C = 0, D = 1;
    for (const Integer& c : cf.period) {
        Integer A1 = A * c + B, C1 = C * c + D;
        B = A;
        D = C;
        A = A1;
        C = C1;
    }
    Integer disc = (A - D) * (A - D) + 4 * B * C;
    QuadraticSurd t = QuadraticSurd::linear(
        Rational(A - D) / Rational(2 * C), Rational(1) / Rational(2 * C),
        disc);
    for (size_t i = cf.preperiod.size(); i-- > 0;) {
        t = t.reciprocal().plus_integer(cf.preperiod[i]);
    }
    return t;
}

std::string cf_to_string(const ContinuedFraction& cf) {
    std::string s = "[";
    for (size_t i = 0; i < cf.preperiod.size(); ++i) {
        if (i == 1)
            s += "; ";
        else if (i > 1)
            s += ", ";
        s += cf.preperiod[i].get_str();
    }
    if (!cf.period.empty()) {
        if (cf.preperiod.empty())
            s += "(";
        else if (cf.preperiod.size() == 1)
            s += "; (";
        else
            s += ", (";
        for (size_t i = 0; i < cf.period.size(); ++i) {
            if (i) s += ", ";
            s += cf.period[i].get_str();
        }
        s += ")";
    }
    return s + "]";
}

std::string farey_to_string(const FareyFraction& f) {
    return f.num.get_str() + "/" + f.den.get_str();
}

}  // namespace qriver
