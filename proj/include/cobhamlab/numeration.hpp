// Numeration systems and their greedy representations, linear recurrence
// detection, beta-expansions computed exactly in Q(alpha), the digit
// automata of beta-numbers, Bertrand systems built from admissible Parry
// data, and the canonical substitution attached to a beta-number.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cobhamlab/algebraic.hpp"
#include "cobhamlab/digit_dfa.hpp"
#include "cobhamlab/polynomial.hpp"
#include "cobhamlab/substitutions.hpp"
#include "cobhamlab/words.hpp"

namespace cobhamlab {

// Strictly increasing integer scale with U_0 = 1 and bounded consecutive
// ratios; values extend lazily under the same exclusive-extension
// contract as LazySequence.
class NumerationSystem {
  public:
    using Extender = std::function<void(std::vector<Int>&, size_t target)>;

    NumerationSystem(Extender extender, Rat ratio_bound,
                     std::optional<std::vector<Int>> recurrence = std::nullopt);

    static NumerationSystem base(unsigned long b);
    static NumerationSystem from_recurrence(std::vector<Int> coefficients,
                                            std::vector<Int> initial);

    const Int& value(size_t n) const;
    void ensure(size_t n) const;
    size_t materialized() const { return state_->values.size(); }

    const Rat& ratio_bound() const { return ratio_bound_; }
    // |A_U| = ceil(ratio bound); digits are 0 .. |A_U|-1.
    size_t digit_count() const;
    Alphabet digit_alphabet() const { return Alphabet::decimal(static_cast<int>(digit_count())); }

    const std::optional<std::vector<Int>>& recurrence() const { return recurrence_; }

    // Largest index i with U_i <= x (x >= 1).
    size_t scale_index(const Int& x) const;

  private:
    struct State {
        Extender extend;
        std::vector<Int> values;
    };
    std::shared_ptr<State> state_;
    Rat ratio_bound_;
    std::optional<std::vector<Int>> recurrence_;
};

// Greedy digit word, most significant first; x = 0 gives "0".
Word greedy_representation(const Int& x, const NumerationSystem& u);

Int digits_value(const Word& w, const NumerationSystem& u);

// True iff, after stripping leading zeros, every suffix value stays
// below the next scale element (the greedy admissibility condition).
bool is_greedy_word(const Word& w, const NumerationSystem& u);

struct RecurrenceFit {
    std::vector<Int> coefficients;  // d_1 .. d_k, d_k != 0
    IntPoly characteristic;         // x^k - d_1 x^{k-1} - ... - d_k
};

// Least-order integer recurrence fitting all sampled values, found by
// exact elimination; absent when nothing of order <= max_order fits.
std::optional<RecurrenceFit> detect_linear_recurrence(const NumerationSystem& u,
                                                      size_t max_order, size_t sample);

// Preperiod/period digit lists of the expansion of 1; admissibility is
// checked by recomputing the expansion from the induced root and
// comparing canonically (minimal preperiod and period).
class ParryData {
  public:
    ParryData(std::vector<int> preperiod, std::vector<int> period);

    const std::vector<int>& preperiod() const { return preperiod_; }
    const std::vector<int>& period() const { return period_; }
    bool finite() const { return period_.empty(); }
    int digit(size_t i) const;  // 1-based position in the digit stream
    size_t stream_length() const { return preperiod_.size() + period_.size(); }
    int max_digit() const { return preperiod_[0]; }

    bool operator==(const ParryData&) const = default;

  private:
    std::vector<int> preperiod_, period_;
};

// Integer polynomial with the induced beta-number as its largest real
// root (not necessarily irreducible).
IntPoly parry_polynomial(const ParryData& p);

class BetaNumber {
  public:
    // Validates admissibility; throws InadmissibleParryError on failure.
    static BetaNumber from_parry(const ParryData& p);

    const ParryData& parry() const { return parry_; }
    const AlgebraicInterval& alpha() const { return alpha_; }

  private:
    BetaNumber(ParryData parry, AlgebraicInterval alpha)
        : parry_(std::move(parry)), alpha_(std::move(alpha)) {}
    ParryData parry_;
    AlgebraicInterval alpha_;
};

// First `count` digits of the expansion of x in base alpha, computed
// exactly; x is a polynomial in alpha with rational coefficients and
// must lie in [0, 1].  Digits are never rounded: signs of all floor
// tests are certified, or PrecisionError is thrown.
std::vector<int> beta_expansion(const RatPoly& x, const BetaNumber& alpha, size_t count);

// Automaton over digits 0..a_1 recognizing the factor language of the
// expansions: states follow the quasi-greedy expansion of 1, equal
// digits advance cyclically, smaller digits reset, larger digits reject.
DigitDFA parry_automaton(const ParryData& p);

// The Bertrand scale attached to the data: U_n counts the accepted words
// of length n, which makes the representation language equal to the
// automaton language by construction.
NumerationSystem bertrand_system_from_parry(const ParryData& p);

// The canonical primitive substitution of the beta-number; its dominant
// eigenvalue equals alpha exactly.
Substitution omega_substitution(const ParryData& p);

}  // namespace cobhamlab
