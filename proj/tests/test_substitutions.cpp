#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cobhamlab/algebraic.hpp"
#include "cobhamlab/substitutions.hpp"
#include "helpers.hpp"

using namespace cobhamlab;
using testutil::fibonacci;
using testutil::phi_squared;
using testutil::sigma_abc;
using testutil::wd;

TEST_CASE("morphism application") {
    Substitution fib = fibonacci();
    CHECK(fib.apply(wd("010")) == wd("01001"));
    CHECK(fib.apply(Word{}) == Word{});
    // a -> ab, b -> c, c -> cb applied to abc
    Substitution s = sigma_abc();
    CHECK(s.apply(Word{0, 1, 2}) == Word{0, 1, 2, 2, 1});
}

TEST_CASE("validation") {
    CHECK(validate(fibonacci()).ok);

    // 1 -> 12, 2 -> 2: the second letter never grows.
    Substitution stuck(Alphabet({"1", "2"}), {Word{0, 1}, Word{1}}, 0);
    ValidationReport r = validate(stuck);
    CHECK_FALSE(r.ok);
    bool mentions_growth = false;
    for (const auto& issue : r.issues)
        if (issue.find("not growing") != std::string::npos &&
            issue.find("2") != std::string::npos)
            mentions_growth = true;
    CHECK(mentions_growth);

    // 1 -> 21 breaks the start-letter condition.
    Substitution flipped(Alphabet({"1", "2"}), {Word{1, 0}, Word{0}}, 0);
    CHECK_FALSE(validate(flipped).ok);

    // Unreachable letters are flagged.
    Substitution island(Alphabet({"a", "b", "c"}), {Word{0, 1}, Word{0}, Word{2, 2}}, 0);
    CHECK_FALSE(validate(island).ok);
}

TEST_CASE("fixed points") {
    CHECK(fibonacci().fixed_point().prefix(8) == wd("01001010"));
    Substitution doubling(Alphabet({"1"}), {Word{0, 0}}, 0);
    CHECK(doubling.fixed_point().prefix(5) == Word{0, 0, 0, 0, 0});
    CHECK(phi_squared().fixed_point().prefix(8) == Word{0, 0, 1, 0, 0, 1, 0, 1});
}

TEST_CASE("fixed point is invariant under the substitution") {
    for (const Substitution& s : {fibonacci(), phi_squared(), testutil::thue_morse()}) {
        Word p = s.fixed_point().prefix(200);
        Word image = s.apply(p);
        CHECK(p.is_prefix_of(image));
    }
}

TEST_CASE("the image of the fixed point sequence is the fixed point itself") {
    Substitution fib = fibonacci();
    LazySequence image = fib.morphism().apply(fib.fixed_point());
    CHECK(image.prefix(300) == fib.fixed_point().prefix(300));
    Morphism erasing(fib.alphabet(), fib.alphabet(), {wd("01"), Word{}});
    CHECK_THROWS_AS(erasing.apply(fib.fixed_point()), DomainError);
}

TEST_CASE("incidence matrices") {
    Substitution s(Alphabet::decimal(2), {wd("010"), wd("01")}, 0);
    IntMatrix m = s.incidence_matrix();
    CHECK(m.at(0, 0) == 2);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(1, 0) == 1);
    CHECK(m.at(1, 1) == 1);

    Morphism id(Alphabet::decimal(2), Alphabet::decimal(2), {wd("0"), wd("1")});
    CHECK(id.incidence_matrix() == IntMatrix::identity(2));

    IntMatrix fib = fibonacci().incidence_matrix();
    CHECK(fib == IntMatrix(2, {Int(1), Int(1), Int(1), Int(0)}));
}

TEST_CASE("incidence matrix of a composition is the matrix product") {
    std::mt19937 rng(31337);
    for (int round = 0; round < 30; ++round) {
        int n = 2 + static_cast<int>(rng() % 3);
        Alphabet a = Alphabet::decimal(n);
        auto random_morphism = [&] {
            std::vector<Word> rules;
            for (int i = 0; i < n; ++i) {
                std::vector<Letter> w(1 + rng() % 3);
                for (Letter& x : w) x = static_cast<Letter>(rng() % n);
                rules.push_back(Word(std::move(w)));
            }
            return Morphism(a, a, std::move(rules));
        };
        Morphism outer = random_morphism(), inner = random_morphism();
        CHECK(outer.compose(inner).incidence_matrix() ==
              outer.incidence_matrix() * inner.incidence_matrix());
    }
}

TEST_CASE("rebasing a substitution under a morphism") {
    Substitution fib = fibonacci();
    Alphabet abc({"a", "b", "c"});
    Morphism phi(fib.alphabet(), abc, {Word{0, 1}, Word{2}});  // 0 -> ab, 1 -> c
    RebasedSubstitution r = rebase_under_morphism(fib, phi);
    REQUIRE(r.subst.alphabet().size() == 3);
    // Pairing order: (0,0), (0,1), (1,0).
    CHECK(r.subst.rule(0) == Word{0, 1});
    CHECK(r.subst.rule(1) == Word{2});
    CHECK(r.subst.rule(2) == Word{0, 1});
    CHECK(validate(r.subst).ok);
    CHECK(r.projection.is_letter_to_letter());
    CHECK(r.projection.rule(0) == Word{0});  // a
    CHECK(r.projection.rule(1) == Word{1});  // b
    CHECK(r.projection.rule(2) == Word{2});  // c
    // chi(fixed point) equals phi(fixed point) on a sizable prefix.
    Word via_rebased = r.projection.apply(r.subst.fixed_point().prefix(64));
    Word direct = phi.apply(fib.fixed_point().prefix(64));
    size_t common = std::min(via_rebased.size(), direct.size());
    CHECK(via_rebased.subword(0, common) == direct.subword(0, common));
    // Primitivity is preserved; here n = 1 so the eigenvalue is alpha itself.
    CHECK(is_primitive(r.subst.incidence_matrix()));
    CHECK(dominant_eigenvalue(r.subst.incidence_matrix())
              .equals(dominant_eigenvalue(fib.incidence_matrix())));
}

TEST_CASE("rebasing with long images raises the eigenvalue to the matching power") {
    // Images of length 3 force three rounds of expansion on the
    // Fibonacci substitution (|s^3(1)| = 3 is the first power that
    // covers them), so the rebased eigenvalue is phi^3.
    Substitution fib = fibonacci();
    Alphabet wide({"p", "q", "r"});
    Morphism phi(fib.alphabet(), wide, {Word{0, 1, 2}, Word{2, 1, 0}});
    RebasedSubstitution r = rebase_under_morphism(fib, phi);
    CHECK(validate(r.subst).ok);
    CHECK(is_primitive(r.subst.incidence_matrix()));
    AlgebraicInterval rebased = dominant_eigenvalue(r.subst.incidence_matrix());
    AlgebraicInterval phi_ev = dominant_eigenvalue(fib.incidence_matrix());
    CHECK(rebased.equals(phi_ev.power(3)));
    Word via = r.projection.apply(r.subst.fixed_point().prefix(100));
    Word direct = phi.apply(fib.fixed_point().prefix(40));
    size_t common = std::min(via.size(), direct.size());
    CHECK(via.subword(0, common) == direct.subword(0, common));
}

TEST_CASE("rebasing under a letter-to-letter morphism gives an isomorphic copy") {
    Substitution fib = fibonacci();
    Morphism rename(fib.alphabet(), Alphabet({"x", "y"}), {Word{0}, Word{1}});
    RebasedSubstitution r = rebase_under_morphism(fib, rename);
    CHECK(r.subst.alphabet().size() == 2);
    CHECK(validate(r.subst).ok);
    CHECK(r.subst.rule(0).size() == 2);
    CHECK(r.subst.rule(1).size() == 1);
    Word via = r.projection.apply(r.subst.fixed_point().prefix(32));
    CHECK(via.subword(0, 20) == fib.fixed_point().prefix(20));
}

TEST_CASE("erasing morphisms are rejected for rebasing") {
    Substitution fib = fibonacci();
    Morphism erasing(fib.alphabet(), fib.alphabet(), {wd("01"), Word{}});
    CHECK_THROWS_AS(rebase_under_morphism(fib, erasing), DomainError);
}

TEST_CASE("block substitution of the Fibonacci word") {
    BlockSubstitutionResult b = block_substitution(fibonacci(), 2);
    // Blocks in first-occurrence order: 01, 10, 00.
    REQUIRE(b.blocks.size() == 3);
    CHECK(b.blocks[0] == wd("01"));
    CHECK(b.blocks[1] == wd("10"));
    CHECK(b.blocks[2] == wd("00"));
    // sigma(01) = 010 and |sigma(0)| = 2 read off blocks (01)(10).
    CHECK(b.subst.rule(0) == Word{0, 1});
    // sigma(10) = 001 and |sigma(1)| = 1 reads off block (00).
    CHECK(b.subst.rule(1) == Word{2});
    CHECK(validate(b.subst).ok);
    // First-letter projection commutes: rho sigma_n = sigma rho.
    Substitution fib = fibonacci();
    for (Letter block = 0; block < b.subst.alphabet().size(); ++block)
        CHECK(b.first_letter.apply(b.subst.rule(block)) ==
              fib.rule(b.first_letter.rule(block)[0]));
    // The fixed point of the block substitution is the 2-block recoding.
    Word base = fib.fixed_point().prefix(130);
    Word blocks = b.subst.fixed_point().prefix(128);
    for (size_t i = 0; i < 128; ++i)
        CHECK(b.blocks[static_cast<size_t>(blocks[i])] == base.subword(i, 2));
}

TEST_CASE("block substitution at n = 1 renames the original") {
    BlockSubstitutionResult b = block_substitution(phi_squared(), 1);
    CHECK(b.subst.alphabet().size() == 2);
    CHECK(validate(b.subst).ok);
    CHECK(b.subst.fixed_point().prefix(64) == phi_squared().fixed_point().prefix(64));
}

TEST_CASE("projection witnesses") {
    Substitution sigma = sigma_abc();
    Substitution tau = fibonacci();
    auto witness = projects_onto(sigma, tau);
    REQUIRE(witness.has_value());
    CHECK(witness->map.rule(0) == Word{0});  // a -> 0
    CHECK(witness->map.rule(1) == Word{1});  // b -> 1
    CHECK(witness->map.rule(2) == Word{0});  // c -> 0
    CHECK_FALSE(is_primitive(sigma.incidence_matrix()));
    CHECK(is_primitive(tau.incidence_matrix()));
    // Dominant eigenvalues coincide when a projection exists.
    CHECK(dominant_eigenvalue(sigma.incidence_matrix())
              .equals(dominant_eigenvalue(tau.incidence_matrix())));

    auto self = projects_onto(tau, tau);
    REQUIRE(self.has_value());
    CHECK(self->map.rule(0) == Word{0});
    CHECK(self->map.rule(1) == Word{1});

    // Renamed Fibonacci cannot project onto the doubling map.
    Substitution fib12(Alphabet({"1", "2"}), {Word{0, 1}, Word{0}}, 0);
    Substitution doubling(Alphabet({"1"}), {Word{0, 0}}, 0);
    CHECK_FALSE(projects_onto(fib12, doubling).has_value());
}
