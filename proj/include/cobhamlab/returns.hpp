// Return words, the order coding over them, derived sequences and
// derived substitutions, plus detection of primitive substitutive
// structure through the finiteness of derived sequences.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cobhamlab/substitutions.hpp"
#include "cobhamlab/words.hpp"

namespace cobhamlab {

// Return words of a factor u, in order of first occurrence; the coding
// word(k) maps derived letters (0-based ids, displayed 1-based) to the
// concrete return words, injectively on words and sequences.
class ReturnWordTable {
  public:
    ReturnWordTable(Word base, std::vector<Word> returns, Alphabet source_alphabet);

    const Word& base() const { return base_; }
    size_t size() const { return returns_.size(); }
    const Word& word(Letter k) const;
    std::optional<Letter> index_of(const Word& w) const;
    const Alphabet& derived_alphabet() const { return derived_alphabet_; }
    const Alphabet& source_alphabet() const { return source_alphabet_; }
    const std::vector<Word>& words() const { return returns_; }

    // The coding applied to a derived word: concatenation of return words.
    Word encode(const Word& derived) const;
    // Greedy decomposition of w into return words (w followed by the
    // base must decompose exactly); absent on failure.
    std::optional<Word> decompose(const Word& w) const;

    bool operator==(const ReturnWordTable& o) const {
        return base_ == o.base_ && returns_ == o.returns_;
    }

  private:
    Word base_;
    std::vector<Word> returns_;
    std::map<Word, Letter> index_;
    Alphabet source_alphabet_;
    Alphabet derived_alphabet_;
};

// Collects the return words on u by scanning successive occurrences,
// declaring the table complete once it survives two consecutive
// doublings of the scanned prefix at or beyond the stability window.
ReturnWordTable return_words(const LazySequence& seq, const Word& u,
                             size_t stability_window = 4096);

struct DerivedSequence {
    LazySequence seq;       // over the derived alphabet
    ReturnWordTable table;  // the coding back to the source
};

// The unique sequence over the return alphabet of `prefix` whose coding
// reproduces seq; prefix must be a prefix of seq.
DerivedSequence derived_sequence(const LazySequence& seq, const Word& prefix,
                                 size_t stability_window = 4096);

// The substitution tau_v on the return alphabet defined by
// coding(tau_v(k)) = tau(coding(k)); its fixed point is the derived
// sequence of the fixed point of s, and its dominant eigenvalue equals
// that of s.
Substitution derived_substitution(const Substitution& s, const Word& prefix,
                                  size_t stability_window = 4096);

struct DetectedSubstitutive {
    Substitution sigma;       // over the common derived alphabet
    Word prefix_small;        // u_i, the shorter of the matching pair
    Word prefix_large;        // u_j
    ReturnWordTable table_small;
    ReturnWordTable table_large;
    size_t prefixes_inspected;
};

// Enumerates prefixes by doubling lengths (then the intermediate
// lengths) until two of them share the derived sequence and return
// alphabet; extracts and verifies the substitution that witnesses
// primitive substitutive structure.  Absent = inconclusive.
std::optional<DetectedSubstitutive> detect_primitive_substitutive(const LazySequence& seq,
                                                                  size_t max_prefixes,
                                                                  size_t compare_window = 2048);

struct LinRecSample {
    size_t prefix_length;
    size_t min_return;
    size_t max_return;
    size_t cardinality;
};

struct LinRecReport {
    Rat K;  // smallest constant covering every sample
    std::vector<LinRecSample> samples;
};

// Surveys return-word length extremes and cardinalities over prefixes of
// the fixed point of a primitive substitution; K is the smallest
// rational with |u|/K <= |w| <= K|u| on all samples, bumped to the least
// integer also satisfying card <= K(K+1)^2 when needed.
LinRecReport linrec_survey(const Substitution& s, size_t prefix_count,
                           size_t stability_window = 4096);

}  // namespace cobhamlab
