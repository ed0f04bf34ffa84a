#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobhamlab/spectra.hpp"
#include "cobhamlab/words.hpp"
#include "helpers.hpp"

using namespace cobhamlab;
using testutil::fibonacci;
using testutil::phi_squared;
using testutil::sigma_abc;
using testutil::wd;

TEST_CASE("primitive decomposition of the three-letter example") {
    // a -> ab, b -> c, c -> cb
    IntMatrix m = sigma_abc().incidence_matrix();
    PrimitiveDecomposition d = primitive_decomposition(m);
    CHECK(d.p == 1);
    REQUIRE(d.partition.size() == 2);
    CHECK(d.q == 1);
    CHECK(d.partition[0] == std::vector<Letter>{0});     // {a}, non-principal
    CHECK(d.partition[1] == std::vector<Letter>{1, 2});  // {b, c}, principal
    CHECK_FALSE(d.principal[0]);
    CHECK(d.principal[1]);
    // The principal diagonal block is [[0,1],[1,1]], a primitive matrix.
    IntMatrix block = m.submatrix({1, 2});
    CHECK(block == IntMatrix(2, {Int(0), Int(1), Int(1), Int(1)}));
    CHECK(is_primitive(block));
}

TEST_CASE("primitive matrices decompose trivially") {
    PrimitiveDecomposition d = primitive_decomposition(fibonacci().incidence_matrix());
    CHECK(d.p == 1);
    CHECK(d.partition.size() == 1);
    CHECK(d.q == 0);
    CHECK(d.principal[0]);
    CHECK(d.partition[0] == std::vector<Letter>{0, 1});
}

TEST_CASE("a swap matrix needs its period squared away") {
    IntMatrix swap2(2, {Int(0), Int(1), Int(1), Int(0)});
    PrimitiveDecomposition d = primitive_decomposition(swap2);
    CHECK(d.p == 2);
    CHECK(d.partition.size() == 2);
    CHECK(d.q == 0);
    CHECK(d.principal[0]);
    CHECK(d.principal[1]);
}

TEST_CASE("zero columns are rejected") {
    IntMatrix bad(2, {Int(1), Int(0), Int(1), Int(0)});
    CHECK_THROWS_AS(primitive_decomposition(bad), DomainError);
}

TEST_CASE("normal-form power of the renamed Fibonacci substitution") {
    Substitution fib12(Alphabet({"1", "2"}), {Word{0, 1}, Word{0}}, 0);
    ConditionCPower c = condition_C_power(fib12, 8);
    CHECK(c.k == 2);
    CHECK(c.decomposition.p == 1);
    CHECK(c.decomposition.partition.size() == 1);
}

TEST_CASE("normal-form power of the three-letter example") {
    ConditionCPower c = condition_C_power(sigma_abc(), 8);
    CHECK(c.k == 2);
    CHECK(c.decomposition.q == 1);
}

TEST_CASE("already-normal substitutions report power one") {
    ConditionCPower c = condition_C_power(phi_squared(), 8);
    CHECK(c.k == 1);
}

TEST_CASE("an exhausted power budget reports the failing condition") {
    Substitution fib12(Alphabet({"1", "2"}), {Word{0, 1}, Word{0}}, 0);
    CHECK_THROWS_WITH_AS(condition_C_power(fib12, 1), doctest::Contains("C2"), DomainError);
}

TEST_CASE("sub-substitutions of the squared three-letter example") {
    Substitution s2 = sigma_abc().power(2);
    std::vector<SubSubstitution> subs = sub_substitutions(s2);
    // {a} has block [1] and is excluded; {b, c} is principal.
    REQUIRE(subs.size() == 1);
    const SubSubstitution& sub = subs[0];
    CHECK(sub.principal);
    CHECK(sub.component == std::vector<Letter>{1, 2});
    // Restriction: b -> cb, c -> cbc over the dense {b, c} alphabet.
    CHECK(sub.restriction.rule(0) == Word{1, 0});
    CHECK(sub.restriction.rule(1) == Word{1, 0, 1});
    CHECK(sub.start_parent == 2);  // the letter c
    CHECK(is_primitive(sub.restriction.incidence_matrix()));
}

TEST_CASE("a primitive substitution is its own single sub-substitution") {
    std::vector<SubSubstitution> subs = sub_substitutions(phi_squared());
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].principal);
    CHECK(subs[0].component == std::vector<Letter>{0, 1});
    CHECK(subs[0].restriction.rule(0) == phi_squared().rule(0));
    CHECK(subs[0].restriction.rule(1) == phi_squared().rule(1));
}

TEST_CASE("principal components share the projection target's eigenvalue, "
          "non-principal ones sit strictly below") {
    // x -> xxyy, y -> yyyy projects onto 1 -> 1111 (eigenvalue 4); the
    // non-principal {x} block has eigenvalue 2.
    Alphabet xy({"x", "y"});
    Substitution s(xy, {Word{0, 0, 1, 1}, Word{1, 1, 1, 1}}, 0);
    Substitution quad(Alphabet({"1"}), {Word{0, 0, 0, 0}}, 0);
    auto witness = projects_onto(s, quad);
    REQUIRE(witness.has_value());
    std::vector<SubSubstitution> subs = sub_substitutions(s);
    REQUIRE(subs.size() == 2);
    AlgebraicInterval target = dominant_eigenvalue(quad.incidence_matrix());
    for (const SubSubstitution& sub : subs) {
        AlgebraicInterval ev = dominant_eigenvalue(sub.restriction.incidence_matrix());
        if (sub.principal)
            CHECK(ev.equals(target));
        else
            CHECK(ev.compare(target) < 0);
    }
}

TEST_CASE("frequency vector of the Fibonacci substitution") {
    Rat tol(1, 1000000);
    auto v = frequency_vector(fibonacci(), tol);
    REQUIRE(v.size() == 2);
    for (const auto& [lo, hi] : v) CHECK(hi - lo <= tol);
    CHECK(v[0].first <= Rat(61804, 100000));
    CHECK(v[0].second >= Rat(61803, 100000));
    CHECK(v[1].first <= Rat(38197, 100000));
    CHECK(v[1].second >= Rat(38196, 100000));
}

TEST_CASE("frequency vector of a single letter is exactly one") {
    Substitution doubling(Alphabet({"1"}), {Word{0, 0}}, 0);
    auto v = frequency_vector(doubling, Rat(1, 1000));
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == 1);
    CHECK(v[0].second == 1);
}

TEST_CASE("frequency vector matches a second route to the same eigenvalue") {
    Substitution s(Alphabet::decimal(2), {wd("010"), wd("01")}, 0);
    auto v = frequency_vector(s, Rat(1, 1000000));
    CHECK(v[0].first <= Rat(61804, 100000));
    CHECK(v[0].second >= Rat(61803, 100000));
}

TEST_CASE("frequency vector of a cubic eigenvalue") {
    // The tribonacci constant is irrational of degree three; the hull
    // still has to enclose the empirical frequencies.
    auto v = frequency_vector(testutil::tribonacci(), Rat(1, 100000));
    auto emp = letter_frequency_estimate(testutil::tribonacci().fixed_point(), 20000);
    for (size_t i = 0; i < v.size(); ++i) {
        CHECK(emp[i] >= v[i].first - Rat(1, 100));
        CHECK(emp[i] <= v[i].second + Rat(1, 100));
    }
}

TEST_CASE("frequency intervals contain the empirical letter frequencies") {
    Rat slack(1, 100);
    for (const Substitution& s : {fibonacci(), phi_squared(), testutil::thue_morse()}) {
        auto enclosure = frequency_vector(s, Rat(1, 1000000));
        auto empirical = letter_frequency_estimate(s.fixed_point(), 10000);
        for (size_t i = 0; i < enclosure.size(); ++i) {
            CHECK(empirical[i] >= enclosure[i].first - slack);
            CHECK(empirical[i] <= enclosure[i].second + slack);
        }
    }
}

TEST_CASE("non-primitive input is rejected by frequency_vector") {
    CHECK_THROWS_AS(frequency_vector(sigma_abc(), Rat(1, 1000)), DomainError);
}
