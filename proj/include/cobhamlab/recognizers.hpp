// Digit automata over numeration systems, recognizable integer sets,
// characteristic sequences, syndeticity probes, and the experiment
// harness that confronts concrete integer sets with the arithmetic-
// progression conclusion.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cobhamlab/algebraic.hpp"
#include "cobhamlab/digit_dfa.hpp"
#include "cobhamlab/numeration.hpp"
#include "cobhamlab/words.hpp"

namespace cobhamlab {

// Acceptance of the greedy representation of n (reversed first for
// least-significant-first automata); padding never changes the answer.
bool run_membership(const DigitDFA& d, const Int& n, const NumerationSystem& u);

// Least-significant-first recognizer of { n : n mod modulus == residue }.
// Requires a detected linear recurrence so the residues U_i mod modulus
// are provably eventually periodic; self-tested against arithmetic
// membership on construction.
DigitDFA ap_recognizer(unsigned long modulus, unsigned long residue, const NumerationSystem& u,
                       ReadingOrder order = ReadingOrder::LeastSignificantFirst);

// Trie of representations closed under padding, completed and minimized.
DigitDFA finite_set_recognizer(const std::vector<Int>& values, const NumerationSystem& u,
                               ReadingOrder order = ReadingOrder::MostSignificantFirst);

struct APTerm {
    unsigned long modulus;  // >= 1
    unsigned long residue;  // < modulus
};

// An integer set given as arithmetic progressions with finite
// adjustments, an explicit finite set, or an automaton over a system.
class IntegerSetSpec {
  public:
    struct APUnion {
        std::vector<APTerm> terms;
        std::vector<unsigned long> add;     // finite inclusions
        std::vector<unsigned long> remove;  // finite exclusions
    };
    struct Finite {
        std::vector<unsigned long> values;
    };
    struct Automaton {
        DigitDFA dfa;
        NumerationSystem system;
    };

    static IntegerSetSpec ap_union(APUnion u);
    static IntegerSetSpec finite(Finite f);
    static IntegerSetSpec automaton(Automaton a);

    bool is_arithmetic() const { return !std::holds_alternative<Automaton>(spec_); }
    const APUnion* as_ap_union() const { return std::get_if<APUnion>(&spec_); }
    const Finite* as_finite() const { return std::get_if<Finite>(&spec_); }
    const Automaton* as_automaton() const { return std::get_if<Automaton>(&spec_); }

    bool contains(unsigned long n) const;
    // Indicator sequence over the alphabet {"0", "1"}.
    LazySequence characteristic_sequence() const;

    std::string describe() const;

  private:
    explicit IntegerSetSpec(std::variant<APUnion, Finite, Automaton> spec)
        : spec_(std::move(spec)) {}
    std::variant<APUnion, Finite, Automaton> spec_;
};

struct GapReport {
    size_t max_gap = 0;
    size_t members = 0;
    bool growing_suspicion = false;  // max gap kept growing with the window
    bool indeterminate = false;      // fewer than two members in the window
};

GapReport syndeticity_gaps(const IntegerSetSpec& set, size_t window);

struct CobhamParams {
    size_t window = 10000;        // characteristic-sequence window
    unsigned long max_exp = 12;   // multiplicative dependence bound
    size_t power_max_len = 20;    // word-power search length cap
    size_t selftest_limit = 5000; // recognizer/arithmetic agreement range
};

enum class Verdict { Consistent, Inconsistent, Inconclusive };

struct RecognizabilityEvidence {
    bool established = false;
    std::string detail;
    std::optional<DigitDFA> recognizer;  // most-significant-first when built
};

struct CobhamReport {
    AlgebraicInterval alpha, beta;
    DependenceResult dependence;
    RecognizabilityEvidence evidence_u, evidence_v;
    std::optional<PeriodicityReport> periodicity;
    size_t power_index = 0;
    GapReport gaps;
    Verdict verdict = Verdict::Inconclusive;
    std::string verdict_reason;
};

// Builds the two Bertrand systems, decides dependence of their bases up
// to the bound, assembles recognizability evidence, and checks the
// arithmetic-progression conclusion on the characteristic sequence.
// "Inconsistent" (hypotheses established, conclusion failed) flags a
// would-be counterexample for human review, and in practice a bug.
CobhamReport cobham_experiment(const IntegerSetSpec& set, const ParryData& parry_u,
                               const ParryData& parry_v, const CobhamParams& params = {});

}  // namespace cobhamlab
