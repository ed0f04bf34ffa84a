// Finite words, lazily expanded infinite sequences, factor extraction,
// periodicity and word-power analysis.
#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cobhamlab/numbers.hpp"

namespace cobhamlab {

// Letters are dense ids 0..|A|-1; display names live in the Alphabet.
using Letter = int;

class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);
    // Alphabet {"0", "1", ..., "n-1"}.
    static Alphabet decimal(int n);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(Letter a) const;
    std::optional<Letter> find(std::string_view name) const;
    bool contains(Letter a) const { return a >= 0 && a < size(); }

    bool operator==(const Alphabet&) const = default;

  private:
    std::vector<std::string> names_;
};

class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    void push_back(Letter a) { letters_.push_back(a); }
    void append(const Word& w);
    Word subword(size_t pos, size_t len) const;
    bool is_prefix_of(const Word& w) const;

    // Rendering against an alphabet, one name after another.
    std::string str(const Alphabet& alphabet) const;

    auto operator<=>(const Word&) const = default;

  private:
    std::vector<Letter> letters_;
};

Word operator+(const Word& a, const Word& b);

// An infinite (or long unknown-length) sequence materialized on demand.
//
// The extender receives the cache and a target length; it must append
// letters until the cache holds at least `target` of them, or throw
// TruncationError if it cannot.  Extending never rewrites earlier
// entries.  Copies share the cache; extension requires exclusive access
// while reads of the already-materialized prefix may run concurrently.
class LazySequence {
  public:
    using Extender = std::function<void(std::vector<Letter>&, size_t target)>;

    LazySequence(Alphabet alphabet, Extender extender);

    static LazySequence from_word(Alphabet alphabet, Word w);
    // preperiod . period^omega; period must be non-empty.
    static LazySequence eventually_periodic(Alphabet alphabet, Word preperiod, Word period);

    const Alphabet& alphabet() const { return state_->alphabet; }

    // Materialize at least n letters (throws TruncationError on finite
    // generators that cannot reach n).
    void ensure(size_t n) const;
    Letter at(size_t i) const;
    Word prefix(size_t n) const;
    size_t materialized() const { return state_->cache.size(); }

  private:
    struct State {
        Alphabet alphabet;
        Extender extend;
        std::vector<Letter> cache;
    };
    std::shared_ptr<State> state_;
};

struct PeriodicityReport {
    size_t preperiod = 0;
    size_t period = 1;        // >= 1
    size_t confirmed_up_to = 0;
};

// Distinct factors of the given length among the first `window` letters.
// length == 0 yields {empty word}.
std::set<Word> factors(const LazySequence& seq, size_t length, size_t window);

// Strictly increasing start indices of u inside host; u must be non-empty.
// Overlapping occurrences are reported.
std::vector<size_t> occurrences(const Word& u, const Word& host);

// Smallest (preperiod, period), lexicographically by preperiod then
// period, consistent with the whole window and leaving room for at
// least 3 repetitions of the period after the preperiod.  Absent if no
// such pair fits.
std::optional<PeriodicityReport> detect_ultimate_periodicity(const LazySequence& seq,
                                                             size_t window);

// Largest N such that u^N occurs in the window prefix for some
// non-empty u with |u| <= max_len.  A window-bounded lower-bound
// witness, never a proof about the full infinite sequence.
size_t max_power_index(const LazySequence& seq, size_t max_len, size_t window);

// Exact letter frequencies over the window prefix; components sum to 1.
std::vector<Rat> letter_frequency_estimate(const LazySequence& seq, size_t window);

}  // namespace cobhamlab
