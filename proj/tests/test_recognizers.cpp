#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cobhamlab/recognizers.hpp"
#include "helpers.hpp"

using namespace cobhamlab;
using testutil::wd;

namespace {

NumerationSystem base2() { return bertrand_system_from_parry(ParryData({2}, {})); }
NumerationSystem zeckendorf() { return bertrand_system_from_parry(ParryData({1, 1}, {})); }

// Most-significant-first automaton for the powers of two in base 2:
// leading zeros, then 1 0^*.
DigitDFA powers_of_two_dfa() {
    std::vector<std::vector<uint32_t>> delta{{0, 1}, {1, 2}, {2, 2}};
    return DigitDFA(3, 2, 0, std::move(delta), {false, true, false},
                    ReadingOrder::MostSignificantFirst);
}

}  // namespace

TEST_CASE("membership through recognizers") {
    NumerationSystem b2 = base2();
    DigitDFA even = ap_recognizer(2, 0, b2, ReadingOrder::MostSignificantFirst);
    CHECK(run_membership(even, Int(6), b2));
    CHECK_FALSE(run_membership(even, Int(11), b2));

    NumerationSystem zeck = zeckendorf();
    DigitDFA zeven = ap_recognizer(2, 0, zeck, ReadingOrder::MostSignificantFirst);
    CHECK_FALSE(run_membership(zeven, Int(11), zeck));
    CHECK(run_membership(zeven, Int(8), zeck));

    // Padding never changes the answer.
    Word rep = greedy_representation(Int(6), b2);
    CHECK(even.accepts(rep) == even.accepts(wd("00") + rep));
}

TEST_CASE("alphabet mismatches are rejected") {
    DigitDFA even = ap_recognizer(2, 0, base2());
    NumerationSystem p2 = bertrand_system_from_parry(ParryData({2}, {1}));
    CHECK_THROWS_AS(run_membership(even, Int(3), p2), DomainError);
}

TEST_CASE("progression recognizers agree with arithmetic") {
    NumerationSystem b2 = base2();
    DigitDFA mod3 = ap_recognizer(3, 0, b2, ReadingOrder::MostSignificantFirst);
    for (unsigned long n = 0; n <= 100; ++n)
        CHECK(run_membership(mod3, Int(static_cast<long>(n)), b2) == (n % 3 == 0));
    CHECK(run_membership(mod3, Int(9), b2));

    // Modulus one accepts every representation.
    DigitDFA all = ap_recognizer(1, 0, zeckendorf(), ReadingOrder::MostSignificantFirst);
    for (unsigned long n = 0; n <= 50; ++n)
        CHECK(run_membership(all, Int(static_cast<long>(n)), zeckendorf()));
}

TEST_CASE("finite-set recognizers") {
    NumerationSystem b2 = base2();
    DigitDFA just_zero = finite_set_recognizer({Int(0)}, b2);
    CHECK(just_zero.accepts(wd("0")));
    CHECK(just_zero.accepts(wd("000")));
    CHECK_FALSE(just_zero.accepts(wd("1")));
    CHECK_FALSE(just_zero.accepts(wd("010")));

    NumerationSystem zeck = zeckendorf();
    DigitDFA small = finite_set_recognizer({Int(1), Int(2), Int(3)}, zeck);
    for (unsigned long n = 0; n <= 30; ++n)
        CHECK(run_membership(small, Int(static_cast<long>(n)), zeck) == (n >= 1 && n <= 3));
    CHECK(small.accepts(wd("0010")));  // padded representation of 2

    DigitDFA empty = finite_set_recognizer({}, b2);
    for (unsigned long n = 0; n <= 20; ++n)
        CHECK_FALSE(run_membership(empty, Int(static_cast<long>(n)), b2));
}

TEST_CASE("boolean combinations") {
    NumerationSystem b2 = base2();
    DigitDFA even = ap_recognizer(2, 0, b2, ReadingOrder::MostSignificantFirst);
    DigitDFA mod3 = ap_recognizer(3, 0, b2, ReadingOrder::MostSignificantFirst);
    DigitDFA mod6 = ap_recognizer(6, 0, b2, ReadingOrder::MostSignificantFirst);
    DigitDFA both = dfa_boolean(SetOp::Intersection, even, mod3);
    CHECK(both.same_language(mod6));
    for (unsigned long n = 0; n <= 1000; ++n)
        CHECK(run_membership(both, Int(static_cast<long>(n)), b2) == (n % 6 == 0));

    CHECK(dfa_boolean(SetOp::Union, even, even).same_language(even));
    DigitDFA nothing = dfa_boolean(SetOp::Difference, even, even);
    for (unsigned long n = 0; n <= 50; ++n)
        CHECK_FALSE(run_membership(nothing, Int(static_cast<long>(n)), b2));

    DigitDFA lsd = ap_recognizer(2, 0, b2, ReadingOrder::LeastSignificantFirst);
    CHECK_THROWS_AS(dfa_boolean(SetOp::Union, even, lsd), DomainError);
}

TEST_CASE("reversal round trips the language") {
    NumerationSystem zeck = zeckendorf();
    DigitDFA lsd = ap_recognizer(2, 0, zeck, ReadingOrder::LeastSignificantFirst);
    DigitDFA msd = reverse_determinize(lsd);
    CHECK(msd.order() == ReadingOrder::MostSignificantFirst);
    for (unsigned long n = 0; n <= 2000; ++n)
        CHECK(run_membership(msd, Int(static_cast<long>(n)), zeck) == (n % 2 == 0));
    DigitDFA back = reverse_determinize(msd);
    CHECK(back.same_language(lsd));
    // Both directions keep their padding invariance.
    CHECK(lsd.padding_invariant());
    CHECK(msd.padding_invariant());
}

TEST_CASE("characteristic sequences") {
    IntegerSetSpec evens = IntegerSetSpec::ap_union({{{2, 0}}, {}, {}});
    CHECK(evens.characteristic_sequence().prefix(6) == wd("101010"));

    IntegerSetSpec mod3 = IntegerSetSpec::ap_union({{{3, 0}, {3, 1}}, {}, {}});
    CHECK(mod3.characteristic_sequence().prefix(6) == wd("110110"));

    IntegerSetSpec p2 = IntegerSetSpec::automaton({powers_of_two_dfa(), base2()});
    CHECK(p2.characteristic_sequence().prefix(17) == wd("01101000100000001"));
}

TEST_CASE("gap scans") {
    IntegerSetSpec evens = IntegerSetSpec::ap_union({{{2, 0}}, {}, {}});
    GapReport g = syndeticity_gaps(evens, 1000);
    CHECK(g.max_gap == 2);
    CHECK_FALSE(g.growing_suspicion);

    IntegerSetSpec p2 = IntegerSetSpec::automaton({powers_of_two_dfa(), base2()});
    GapReport g2 = syndeticity_gaps(p2, 10000);
    CHECK(g2.growing_suspicion);
    CHECK(g2.max_gap >= 4096);

    // Positions of 1 in the Fibonacci word, via the Zeckendorf digit
    // criterion: the least-significant digit is 1.
    std::vector<std::vector<uint32_t>> delta{{2, 1}, {1, 1}, {2, 2}};
    DigitDFA ends_in_one(3, 2, 0, std::move(delta), {false, true, false},
                         ReadingOrder::LeastSignificantFirst);
    IntegerSetSpec fib_ones = IntegerSetSpec::automaton({ends_in_one, zeckendorf()});
    // Cross-check the digit criterion against the word itself.
    Word w = testutil::fibonacci().fixed_point().prefix(200);
    for (unsigned long n = 0; n < 200; ++n)
        CHECK(fib_ones.contains(n) == (w[n] == 1));
    GapReport g3 = syndeticity_gaps(fib_ones, 2000);
    CHECK(g3.max_gap == 3);
    CHECK_FALSE(g3.growing_suspicion);

    IntegerSetSpec lonely = IntegerSetSpec::finite({{42}});
    CHECK(syndeticity_gaps(lonely, 1000).indeterminate);
}

TEST_CASE("experiment: progression set against two independent systems") {
    IntegerSetSpec set = IntegerSetSpec::ap_union({{{5, 2}}, {}, {}});
    CobhamReport r = cobham_experiment(set, ParryData({2}, {}), ParryData({1, 1}, {}));
    CHECK(r.dependence.status == DependenceStatus::IndependentUpToBound);
    CHECK(r.evidence_u.established);
    CHECK(r.evidence_v.established);
    REQUIRE(r.periodicity.has_value());
    CHECK(r.periodicity->preperiod == 0);
    CHECK(r.periodicity->period == 5);
    CHECK(r.verdict == Verdict::Consistent);
}

TEST_CASE("experiment: dependent bases make the theorem vacuous") {
    IntegerSetSpec p2 = IntegerSetSpec::automaton({powers_of_two_dfa(), base2()});
    CobhamReport r = cobham_experiment(p2, ParryData({2}, {}), ParryData({4}, {}));
    REQUIRE(r.dependence.dependent());
    CHECK(r.dependence.exponents == std::make_pair(2UL, 1UL));
    CHECK(r.verdict == Verdict::Consistent);
}

TEST_CASE("experiment: missing evidence stays inconclusive") {
    IntegerSetSpec p2 = IntegerSetSpec::automaton({powers_of_two_dfa(), base2()});
    CobhamReport r = cobham_experiment(p2, ParryData({2}, {}), ParryData({1, 1}, {}));
    CHECK(r.dependence.status == DependenceStatus::IndependentUpToBound);
    CHECK(r.evidence_u.established);
    CHECK_FALSE(r.evidence_v.established);
    CHECK(r.verdict == Verdict::Inconclusive);
}

TEST_CASE("progression unions look periodic within the promised window") {
    std::mt19937 rng(8080);
    for (int round = 0; round < 20; ++round) {
        IntegerSetSpec::APUnion u;
        unsigned long lcm = 1;
        for (size_t t = 0, terms = 1 + rng() % 2; t < terms; ++t) {
            unsigned long m = 2 + rng() % 9;
            lcm = std::lcm(lcm, m);
            u.terms.push_back(APTerm{m, rng() % m});
        }
        unsigned long max_adjust = 0;
        for (size_t a = 0, n = rng() % 3; a < n; ++a) {
            unsigned long v = rng() % 60;
            u.add.push_back(v);
            max_adjust = std::max(max_adjust, v + 1);
        }
        IntegerSetSpec set = IntegerSetSpec::ap_union(u);
        // Detection must succeed within the promised window...
        size_t window = std::max<size_t>(4 * lcm + max_adjust + 2, 16);
        auto rep = detect_ultimate_periodicity(set.characteristic_sequence(), window);
        REQUIRE(rep.has_value());
        // ...and on a comfortable window the period divides the lcm.
        auto wide = detect_ultimate_periodicity(set.characteristic_sequence(),
                                                8 * (lcm + max_adjust) + 64);
        REQUIRE(wide.has_value());
        CHECK(lcm % wide->period == 0);
    }
}

TEST_CASE("randomized progression recognizers agree with arithmetic") {
    std::mt19937 rng(1234);
    NumerationSystem systems[2] = {base2(), zeckendorf()};
    for (int round = 0; round < 6; ++round) {
        unsigned long m = 2 + rng() % 9;
        unsigned long res = rng() % m;
        const NumerationSystem& u = systems[round % 2];
        DigitDFA d = ap_recognizer(m, res, u, ReadingOrder::MostSignificantFirst);
        for (unsigned long n = 0; n <= 400; ++n)
            CHECK(run_membership(d, Int(static_cast<long>(n)), u) == (n % m == res));
        CHECK(d.padding_invariant());
    }
}
