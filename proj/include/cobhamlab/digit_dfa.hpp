// Deterministic automata over digit alphabets: total transition tables,
// boolean combinations through the product construction, minimization by
// partition refinement, and reversal via the subset construction.
#pragma once

#include <cstdint>
#include <vector>

#include "cobhamlab/numbers.hpp"
#include "cobhamlab/words.hpp"

namespace cobhamlab {

enum class ReadingOrder { MostSignificantFirst, LeastSignificantFirst };

enum class SetOp { Union, Intersection, Difference };

class DigitDFA {
  public:
    DigitDFA(size_t states, size_t alphabet_size, size_t start,
             std::vector<std::vector<uint32_t>> delta, std::vector<bool> accepting,
             ReadingOrder order);

    size_t state_count() const { return delta_.size(); }
    size_t alphabet_size() const { return alphabet_size_; }
    size_t start() const { return start_; }
    ReadingOrder order() const { return order_; }
    bool accepting(size_t q) const { return accepting_[q]; }
    uint32_t next(size_t q, size_t digit) const;

    bool accepts(const std::vector<int>& digits) const;
    bool accepts(const Word& w) const { return accepts(w.letters()); }

    // Number of accepted words of the given length (transfer counting).
    Int count_words(size_t length) const;

    // Unreachable-state removal plus Moore partition refinement; state
    // numbering is canonical (breadth-first from the start), so equal
    // languages give equal tables.
    DigitDFA minimized() const;

    // Language padding invariance for the declared reading order:
    // MSD automata must not care about leading zeros, LSD automata about
    // trailing zeros.
    bool padding_invariant() const;

    bool same_language(const DigitDFA& other) const;

  private:
    size_t alphabet_size_;
    size_t start_;
    std::vector<std::vector<uint32_t>> delta_;
    std::vector<bool> accepting_;
    ReadingOrder order_;
};

// Product construction followed by minimization; operands must share the
// alphabet and reading order.
DigitDFA dfa_boolean(SetOp op, const DigitDFA& a, const DigitDFA& b);

// Automaton of the reversed language: reverse transitions, determinize
// by subsets, minimize; flips the reading-order flag.  Throws if the
// subset construction exceeds state_cap.
DigitDFA reverse_determinize(const DigitDFA& d, size_t state_cap = 1 << 16);

}  // namespace cobhamlab
