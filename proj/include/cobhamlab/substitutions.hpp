// Morphisms, substitutions and their fixed points, plus the
// primitivity-preserving constructions: rebasing a fixed point under a
// morphism, block substitutions, and letter-to-letter projections.
#pragma once

#include <optional>
#include <vector>

#include "cobhamlab/matrix.hpp"
#include "cobhamlab/words.hpp"

namespace cobhamlab {

class Morphism {
  public:
    Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> rules);

    const Alphabet& domain() const { return domain_; }
    const Alphabet& codomain() const { return codomain_; }
    const Word& rule(Letter a) const;

    Word apply(const Word& w) const;
    // Image sequence; requires non-erasing rules so the image is infinite.
    LazySequence apply(const LazySequence& seq) const;

    bool is_non_erasing() const;
    // Every image a single letter and the rule onto the codomain.
    bool is_letter_to_letter() const;

    // Entry (i, j) counts occurrences of codomain letter i in rule(j);
    // composition corresponds to matrix product.
    IntMatrix incidence_matrix() const;

    // this after inner (this.domain == inner.codomain).
    Morphism compose(const Morphism& inner) const;

  private:
    Alphabet domain_, codomain_;
    std::vector<Word> rules_;
};

class Substitution {
  public:
    Substitution(Alphabet alphabet, std::vector<Word> rules, Letter start);

    const Alphabet& alphabet() const { return morphism_.domain(); }
    const Word& rule(Letter a) const { return morphism_.rule(a); }
    const Morphism& morphism() const { return morphism_; }
    Letter start() const { return start_; }

    Word apply(const Word& w) const { return morphism_.apply(w); }
    IntMatrix incidence_matrix() const { return morphism_.incidence_matrix(); }
    Substitution power(unsigned long k) const;

    // The unique sequence x with x_0 = start and tau(x) = x.  The
    // substitution must be valid (see validate()).
    LazySequence fixed_point() const;

  private:
    Morphism morphism_;
    Letter start_;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> issues;
};

// Checks the start-letter condition, non-erasing images, growth of every
// letter and reachability of the whole alphabet from the start letter.
// Growth is decided by watching |tau^n(b)| over n in [|A|^2, 2|A|^2].
ValidationReport validate(const Substitution& s);
void require_valid(const Substitution& s);  // throws DomainError with the report

struct RebasedSubstitution {
    Substitution subst;   // over the paired alphabet (c, k)
    Morphism projection;  // letter-to-letter map onto phi's codomain
};

// Rewrites s through the morphism phi (non-empty images): produces a
// substitution whose fixed point maps letter-to-letter onto
// phi(fixed point of s).  Its dominant eigenvalue is alpha^n for the
// smallest n >= 1 with |s^n(c)| >= |phi(c)| for every letter.
RebasedSubstitution rebase_under_morphism(const Substitution& s, const Morphism& phi);

struct BlockSubstitutionResult {
    Substitution subst;          // over the n-block alphabet
    std::vector<Word> blocks;    // block letter id -> the length-n factor
    Morphism first_letter;       // block -> its first letter; commutes with s
};

// The sliding-block recoding: letters are the length-n factors of the
// fixed point, the image of a block reads off |s(first letter)|
// consecutive blocks of the substituted word.
BlockSubstitutionResult block_substitution(const Substitution& s, size_t n);

struct ProjectionWitness {
    Morphism map;  // letter-to-letter, maps start to start, commutes
};

// Letter-to-letter phi with phi(start_s) = start_t and
// phi(s(c)) = t(phi(c)) for every letter, found by backtracking with
// image-length forward checking; absent when no assignment exists.
std::optional<ProjectionWitness> projects_onto(const Substitution& s, const Substitution& t);

}  // namespace cobhamlab
