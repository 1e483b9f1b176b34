#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qriver/concord.hpp"

#include <random>

using namespace qriver;

namespace {

BinaryQuadraticForm form(long a, long h, long b) {
    return {Rational(a), Rational(h), Rational(b)};
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
    return {xs.begin(), xs.end()};
}

BinaryQuadraticForm random_aniso(std::mt19937_64& rng, long lim = 20) {
    std::uniform_int_distribution<long> cd(-lim, lim);
    for (;;) {
        BinaryQuadraticForm Q{Rational(cd(rng)), Rational(cd(rng)),
                              Rational(cd(rng))};
        try {
            if (classify(Q) == FormClass::IndefiniteAnisotropic) return Q;
        } catch (const domain_error&) {
        }
    }
}

}  // namespace

TEST_CASE("run-length encoding of a letter window") {
    TurnSequence s;
    for (char c : std::string("RRLLLLRR"))
        s.letters.push_back(c == 'L' ? Turn::L : Turn::R);
    TurnRuns r = turn_runs(s);
    CHECK(r.values == ints({2, 4, 2}));
    // window boundaries always cut the outer runs
    CHECK(r.first_partial);
    CHECK(r.last_partial);
    CHECK(turn_runs(TurnSequence{}).values.empty());
}

TEST_CASE("aligning a pure shift") {
    MatchReport r =
        align(ints({4, 2, 4, 2, 4, 2}), ints({2, 4, 2, 4, 2, 4}), 4);
    CHECK(r.matched);
    CHECK(r.offset == 1);
    CHECK(!r.reversed);
    CHECK(r.compared_length >= 4);
    CHECK(!r.first_mismatch.has_value());
}

TEST_CASE("aligning across a palindromic period") {
    // the reversed probe fits as well as the plain one here; either way the
    // windows agree
    MatchReport r = align(ints({4, 2, 4, 2}), ints({2, 4, 2, 4}), 2);
    CHECK(r.matched);
}

TEST_CASE("disagreeing windows do not align") {
    MatchReport r = align(ints({4, 2, 4}), ints({3, 3, 3}), 1);
    CHECK(!r.matched);
    CHECK(r.first_mismatch.has_value());
}

TEST_CASE("boundary terms act as lower bounds only") {
    // probe boundary runs are cut, so 1 fits under the overlapped 4; the
    // interior 1,5,1 must appear verbatim
    MatchReport r =
        align(ints({5, 1, 4, 1, 5, 1, 4}), ints({1, 1, 5, 1, 1}), 3);
    CHECK(r.matched);
    CHECK(r.offset == 2);
    // an oversized boundary term rejects the same placement
    MatchReport s =
        align(ints({5, 1, 4, 1, 5, 1, 4}), ints({9, 1, 5, 1, 1}), 3);
    CHECK(!s.matched);
}

TEST_CASE("probe may hang off either end") {
    // interior terms sliding past the end of a are ignored
    MatchReport r = align(ints({1, 7, 1}), ints({2, 1, 7, 1, 2}), 1);
    CHECK(r.matched);
    CHECK(r.offset == -1);
}

TEST_CASE("insufficient overlap is an error, not a mismatch") {
    CHECK_THROWS_AS(align(ints({4, 2, 4, 2}), ints({2, 4, 2, 4}), 4),
                    domain_error);
    CHECK_THROWS_AS(align(ints({1}), ints({1, 1, 1}), 2), domain_error);
    CHECK_THROWS_AS(align({}, ints({1}), 0), domain_error);
}

TEST_CASE("alignment is symmetric for slices of one stream") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long> vd(1, 5);
    for (int round = 0; round < 100; ++round) {
        std::vector<Integer> base;
        for (int i = 0; i < 14; ++i) base.push_back(vd(rng));
        std::vector<Integer> a(base.begin(), base.begin() + 12);
        std::vector<Integer> b(base.begin() + 2, base.begin() + 10);
        MatchReport ab = align(a, b, 3);
        MatchReport ba = align(b, a, 3);
        CHECK(ab.matched);
        CHECK(ab.matched == ba.matched);
    }
}

TEST_CASE("matched reports carry no mismatch") {
    std::mt19937_64 rng(62);
    std::uniform_int_distribution<long> vd(1, 4);
    for (int round = 0; round < 100; ++round) {
        std::vector<Integer> a, b;
        for (int i = 0; i < 10; ++i) a.push_back(vd(rng));
        for (int i = 0; i < 6; ++i) b.push_back(vd(rng));
        MatchReport r = align(a, b, 2);
        if (r.matched) {
            CHECK(!r.first_mismatch.has_value());
            CHECK(r.compared_length >= 2);
        } else {
            CHECK(r.first_mismatch.has_value());
        }
    }
}

TEST_CASE("theorem check on x^2 - 2xy - 5y^2") {
    TheoremCheck t = check_theorem(form(1, -2, -5), 6);
    CHECK(t.match.matched);
    // interior river runs alternate 4 and 2
    for (size_t i = 1; i + 1 < t.runs.values.size(); ++i)
        CHECK((t.runs.values[i] == 4 || t.runs.values[i] == 2));
    for (size_t i = 1; i + 2 < t.runs.values.size(); ++i)
        CHECK(t.runs.values[i] != t.runs.values[i + 1]);
    // the window itself alternates as well
    for (size_t i = 0; i + 1 < t.lls.terms.size(); ++i) {
        CHECK((t.lls.terms[i] == 4 || t.lls.terms[i] == 2));
        CHECK(t.lls.terms[i] != t.lls.terms[i + 1]);
    }
}

TEST_CASE("theorem check on the golden form") {
    TheoremCheck t = check_theorem(form(1, 1, -1), 8);
    CHECK(t.match.matched);
    for (const Integer& v : t.lls.terms) CHECK(v == 1);
    for (size_t i = 1; i + 1 < t.runs.values.size(); ++i)
        CHECK(t.runs.values[i] == 1);
}

TEST_CASE("theorem check on 11x^2 - 10xy + 2y^2") {
    TheoremCheck t = check_theorem(form(11, -10, 2), 6);
    CHECK(t.match.matched);
    for (size_t i = 1; i + 1 < t.runs.values.size(); ++i)
        CHECK((t.runs.values[i] == 1 || t.runs.values[i] == 2));
    for (size_t i = 1; i + 2 < t.runs.values.size(); ++i)
        CHECK(t.runs.values[i] != t.runs.values[i + 1]);
}

TEST_CASE("theorem check input validation") {
    CHECK_THROWS_AS(check_theorem(form(1, 0, 1), 6), domain_error);
    CHECK_THROWS_AS(check_theorem(form(1, 0, -1), 6), domain_error);
    CHECK_THROWS_AS(check_theorem(form(1, -2, -5), 0), domain_error);
}

TEST_CASE("theorem holds on random forms") {
    std::mt19937_64 rng(63);
    for (int i = 0; i < 60; ++i) {
        BinaryQuadraticForm Q = random_aniso(rng);
        TheoremCheck t = check_theorem(Q, 6);
        CHECK(t.match.matched);
    }
}

TEST_CASE("reflecting the form still matches") {
    // x <-> y swaps the two banks and reads the stream backwards
    std::mt19937_64 rng(64);
    UnimodularMap swap_xy(0, 1, 1, 0);
    for (int i = 0; i < 25; ++i) {
        BinaryQuadraticForm Q = random_aniso(rng, 12);
        TheoremCheck a = check_theorem(Q, 5);
        TheoremCheck b = check_theorem(transform(Q, swap_xy), 5);
        CHECK(a.match.matched);
        CHECK(b.match.matched);
    }
}
