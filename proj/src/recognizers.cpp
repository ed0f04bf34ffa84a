#include "cobhamlab/recognizers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cobhamlab {

bool run_membership(const DigitDFA& d, const Int& n, const NumerationSystem& u) {
    if (d.alphabet_size() != u.digit_count())
        throw DomainError("run_membership: automaton alphabet does not match the system");
    Word rep = greedy_representation(n, u);
    std::vector<int> digits(rep.letters().begin(), rep.letters().end());
    if (d.order() == ReadingOrder::LeastSignificantFirst)
        std::reverse(digits.begin(), digits.end());
    return d.accepts(digits);
}

namespace {

// Eventually periodic structure of U_i mod m, certified by the linear
// recurrence: a repeated k-tuple of residues pins the whole future.
struct ResiduePhases {
    size_t preperiod;
    size_t period;
    std::vector<unsigned long> residues;  // U_i mod m for i < preperiod + period
};

ResiduePhases residue_phases(const NumerationSystem& u, unsigned long m, size_t order) {
    std::map<std::vector<unsigned long>, size_t> seen;
    std::vector<unsigned long> residues;
    auto tuple_at = [&](size_t i) {
        std::vector<unsigned long> t(order);
        for (size_t j = 0; j < order; ++j) t[j] = residues[i + j];
        return t;
    };
    for (size_t i = 0;; ++i) {
        while (residues.size() < i + order) {
            Int r = u.value(residues.size()) % static_cast<long>(m);
            residues.push_back(r.get_ui());
        }
        auto [it, fresh] = seen.emplace(tuple_at(i), i);
        if (!fresh) {
            size_t preperiod = it->second;
            size_t period = i - it->second;
            residues.resize(preperiod + period);
            return ResiduePhases{preperiod, period, std::move(residues)};
        }
        if (i > 4000000) throw DomainError("residue phases did not close");
    }
}

}  // namespace

DigitDFA ap_recognizer(unsigned long modulus, unsigned long residue, const NumerationSystem& u,
                       ReadingOrder order) {
    if (modulus < 1) throw DomainError("ap_recognizer: modulus must be positive");
    if (residue >= modulus) throw DomainError("ap_recognizer: residue must be below the modulus");
    auto fit = detect_linear_recurrence(u, 8, 24);
    if (!fit)
        throw DomainError(
            "ap_recognizer: no linear recurrence detected, residue phases unavailable");
    ResiduePhases ph = residue_phases(u, modulus, fit->coefficients.size());
    size_t phases = ph.preperiod + ph.period;
    size_t digits = u.digit_count();
    // States: (phase index, partial sum mod m), read least significant
    // digit first so position weights follow the phase.
    auto sid = [&](size_t phase, unsigned long sum) { return phase * modulus + sum; };
    size_t n = phases * modulus;
    std::vector<std::vector<uint32_t>> delta(n, std::vector<uint32_t>(digits));
    std::vector<bool> acc(n, false);
    for (size_t phase = 0; phase < phases; ++phase) {
        size_t next_phase = phase + 1 < phases ? phase + 1 : ph.preperiod;
        if (ph.period == 0) throw DomainError("ap_recognizer: empty residue period");
        for (unsigned long sum = 0; sum < modulus; ++sum) {
            for (size_t d = 0; d < digits; ++d) {
                unsigned long nsum = (sum + d * ph.residues[phase]) % modulus;
                delta[sid(phase, sum)][d] = static_cast<uint32_t>(sid(next_phase, nsum));
            }
            acc[sid(phase, sum)] = (sum == residue % modulus);
        }
    }
    DigitDFA lsd(n, digits, sid(0, 0), std::move(delta), std::move(acc),
                 ReadingOrder::LeastSignificantFirst);
    lsd = lsd.minimized();
    DigitDFA out = order == ReadingOrder::LeastSignificantFirst ? lsd : reverse_determinize(lsd);
    // Construction self-test against plain arithmetic.
    for (unsigned long x = 0; x <= 5000; ++x) {
        bool want = (x % modulus) == residue;
        if (run_membership(out, Int(static_cast<long>(x)), u) != want)
            throw DomainError("ap_recognizer: self-test failed at " + std::to_string(x));
    }
    return out;
}

DigitDFA finite_set_recognizer(const std::vector<Int>& values, const NumerationSystem& u,
                               ReadingOrder order) {
    size_t digits = u.digit_count();
    // Trie over most-significant-first representations with a
    // leading-zero loop at the root.
    struct Node {
        std::map<int, size_t> next;
        bool accept = false;
    };
    std::vector<Node> trie(1);
    bool zero_in = false;
    for (const Int& v : values) {
        if (v < 0) throw DomainError("finite_set_recognizer: values must be natural");
        if (v == 0) {
            zero_in = true;
            continue;
        }
        Word rep = greedy_representation(v, u);
        size_t at = 0;
        for (Letter d : rep) {
            auto [it, fresh] = trie[at].next.emplace(d, trie.size());
            if (fresh) trie.emplace_back();
            at = it->second;
        }
        trie[at].accept = true;
    }
    trie[0].accept = zero_in;
    size_t dead = trie.size();
    size_t n = trie.size() + 1;
    std::vector<std::vector<uint32_t>> delta(n, std::vector<uint32_t>(digits,
                                                                      static_cast<uint32_t>(dead)));
    std::vector<bool> acc(n, false);
    for (size_t q = 0; q < trie.size(); ++q) {
        acc[q] = trie[q].accept;
        for (const auto& [d, t] : trie[q].next) delta[q][static_cast<size_t>(d)] = static_cast<uint32_t>(t);
    }
    delta[0][0] = 0;  // leading zeros loop on the root
    DigitDFA msd(n, digits, 0, std::move(delta), std::move(acc),
                 ReadingOrder::MostSignificantFirst);
    msd = msd.minimized();
    return order == ReadingOrder::MostSignificantFirst ? msd : reverse_determinize(msd);
}

IntegerSetSpec IntegerSetSpec::ap_union(APUnion u) {
    for (const APTerm& t : u.terms) {
        if (t.modulus < 1) throw DomainError("arithmetic progression needs modulus >= 1");
        if (t.residue >= t.modulus)
            throw DomainError("arithmetic progression residue must be below its modulus");
    }
    return IntegerSetSpec(std::variant<APUnion, Finite, Automaton>(std::move(u)));
}

IntegerSetSpec IntegerSetSpec::finite(Finite f) {
    return IntegerSetSpec(std::variant<APUnion, Finite, Automaton>(std::move(f)));
}

IntegerSetSpec IntegerSetSpec::automaton(Automaton a) {
    if (a.dfa.alphabet_size() != a.system.digit_count())
        throw DomainError("automaton alphabet does not match its numeration system");
    return IntegerSetSpec(std::variant<APUnion, Finite, Automaton>(std::move(a)));
}

bool IntegerSetSpec::contains(unsigned long n) const {
    if (const APUnion* u = as_ap_union()) {
        for (unsigned long r : u->remove)
            if (r == n) return false;
        for (unsigned long a : u->add)
            if (a == n) return true;
        for (const APTerm& t : u->terms)
            if (n % t.modulus == t.residue) return true;
        return false;
    }
    if (const Finite* f = as_finite())
        return std::find(f->values.begin(), f->values.end(), n) != f->values.end();
    const Automaton& a = *as_automaton();
    return run_membership(a.dfa, Int(static_cast<long>(n)), a.system);
}

LazySequence IntegerSetSpec::characteristic_sequence() const {
    IntegerSetSpec self = *this;
    return LazySequence(Alphabet::decimal(2), [self](std::vector<Letter>& cache, size_t target) {
        while (cache.size() < target)
            cache.push_back(self.contains(static_cast<unsigned long>(cache.size())) ? 1 : 0);
    });
}

std::string IntegerSetSpec::describe() const {
    std::ostringstream out;
    if (const APUnion* u = as_ap_union()) {
        out << "ap_union{";
        for (size_t i = 0; i < u->terms.size(); ++i) {
            if (i) out << ", ";
            out << u->terms[i].residue << " mod " << u->terms[i].modulus;
        }
        if (!u->add.empty()) out << "; +" << u->add.size() << " adjustments";
        if (!u->remove.empty()) out << "; -" << u->remove.size() << " adjustments";
        out << "}";
    } else if (const Finite* f = as_finite()) {
        out << "finite{" << f->values.size() << " values}";
    } else {
        out << "automaton{" << as_automaton()->dfa.state_count() << " states}";
    }
    return out.str();
}

GapReport syndeticity_gaps(const IntegerSetSpec& set, size_t window) {
    if (window < 2) throw DomainError("syndeticity_gaps: window must be >= 2");
    auto max_gap_until = [&](size_t limit, size_t& members) {
        size_t last = 0, best = 0;
        bool have = false;
        members = 0;
        for (size_t n = 0; n < limit; ++n) {
            if (!set.contains(static_cast<unsigned long>(n))) continue;
            ++members;
            if (have && n - last > best) best = n - last;
            last = n;
            have = true;
        }
        return best;
    };
    GapReport report;
    size_t half_members = 0;
    size_t half_gap = max_gap_until(window / 2, half_members);
    report.max_gap = max_gap_until(window, report.members);
    report.indeterminate = report.members < 2;
    report.growing_suspicion = !report.indeterminate && report.max_gap > half_gap;
    return report;
}

namespace {

RecognizabilityEvidence build_arithmetic_recognizer(const IntegerSetSpec& set,
                                                    const NumerationSystem& u,
                                                    size_t selftest_limit) {
    RecognizabilityEvidence ev;
    // Reversal only ever touches the small per-progression atoms; the
    // boolean combinations stay most-significant-first, where products
    // need minimization but never a subset construction.
    DigitDFA msd = [&] {
        if (const IntegerSetSpec::APUnion* ap = set.as_ap_union()) {
            std::optional<DigitDFA> acc;
            for (const APTerm& t : ap->terms) {
                DigitDFA one = ap_recognizer(t.modulus, t.residue, u,
                                             ReadingOrder::MostSignificantFirst);
                acc = acc ? dfa_boolean(SetOp::Union, *acc, one) : one;
            }
            if (!acc) {
                // Empty union: reject everything.
                std::vector<Int> none;
                acc = finite_set_recognizer(none, u);
            }
            if (!ap->add.empty()) {
                std::vector<Int> vals;
                for (unsigned long v : ap->add) vals.emplace_back(static_cast<long>(v));
                acc = dfa_boolean(SetOp::Union, *acc, finite_set_recognizer(vals, u));
            }
            if (!ap->remove.empty()) {
                std::vector<Int> vals;
                for (unsigned long v : ap->remove) vals.emplace_back(static_cast<long>(v));
                acc = dfa_boolean(SetOp::Difference, *acc, finite_set_recognizer(vals, u));
            }
            return *acc;
        }
        const IntegerSetSpec::Finite* f = set.as_finite();
        std::vector<Int> vals;
        for (unsigned long v : f->values) vals.emplace_back(static_cast<long>(v));
        return finite_set_recognizer(vals, u);
    }();
    for (unsigned long n = 0; n <= selftest_limit; ++n) {
        if (run_membership(msd, Int(static_cast<long>(n)), u) != set.contains(n))
            throw DomainError("recognizer disagrees with arithmetic membership at " +
                              std::to_string(n));
    }
    if (!msd.padding_invariant())
        throw DomainError("constructed recognizer lost padding invariance");
    ev.established = true;
    ev.detail = "constructed recognizer (" + std::to_string(msd.state_count()) +
                " states), verified against arithmetic membership up to " +
                std::to_string(selftest_limit);
    ev.recognizer = std::move(msd);
    return ev;
}

bool same_parry(const ParryData& a, const ParryData& b) { return a == b; }

}  // namespace

CobhamReport cobham_experiment(const IntegerSetSpec& set, const ParryData& parry_u,
                               const ParryData& parry_v, const CobhamParams& params) {
    BetaNumber bu = BetaNumber::from_parry(parry_u);
    BetaNumber bv = BetaNumber::from_parry(parry_v);
    NumerationSystem u = bertrand_system_from_parry(parry_u);
    NumerationSystem v = bertrand_system_from_parry(parry_v);
    CobhamReport report{bu.alpha(), bv.alpha(),
                        multiplicatively_dependent(bu.alpha(), bv.alpha(), params.max_exp),
                        {}, {}, std::nullopt, 0, {}, Verdict::Inconclusive, ""};
    // Recognizability evidence per system.
    auto evidence_for = [&](const NumerationSystem& sys, const ParryData& parry) {
        if (set.is_arithmetic()) return build_arithmetic_recognizer(set, sys, params.selftest_limit);
        RecognizabilityEvidence ev;
        const IntegerSetSpec::Automaton* a = set.as_automaton();
        // A user automaton only certifies the system it was written for.
        bool matches = a->system.digit_count() == sys.digit_count();
        if (matches) {
            // Same scale on a sampled prefix.
            for (size_t i = 0; i < 24 && matches; ++i)
                if (a->system.value(i) != sys.value(i)) matches = false;
        }
        (void)parry;
        if (matches) {
            ev.established = true;
            ev.detail = "user-supplied automaton (" + std::to_string(a->dfa.state_count()) +
                        " states), well-formed" +
                        (a->dfa.padding_invariant() ? ", padding-invariant" : ", NOT padding-invariant");
        } else {
            ev.detail = "not established: no recognizer supplied for this system";
        }
        return ev;
    };
    report.evidence_u = evidence_for(u, parry_u);
    report.evidence_v = evidence_for(v, parry_v);
    // Conclusion side: periodicity of the characteristic sequence, plus
    // the word-power and gap diagnostics.
    LazySequence chi = set.characteristic_sequence();
    report.periodicity = detect_ultimate_periodicity(chi, params.window);
    report.power_index = max_power_index(chi, params.power_max_len, params.window);
    report.gaps = syndeticity_gaps(set, params.window);
    bool dual = report.evidence_u.established && report.evidence_v.established;
    // A detection whose preperiod swallows most of the window is no
    // evidence of ultimate periodicity (any window tail ending in a long
    // run looks periodic); require the periodic part to cover at least
    // half of it.
    bool periodic = report.periodicity && report.periodicity->preperiod <= params.window / 2;
    if (report.dependence.dependent()) {
        report.verdict = Verdict::Consistent;
        report.verdict_reason =
            "bases are multiplicatively dependent, so the theorem places no constraint";
    } else if (periodic) {
        report.verdict = Verdict::Consistent;
        report.verdict_reason = "characteristic sequence is ultimately periodic within the window";
    } else if (!dual) {
        report.verdict = Verdict::Inconclusive;
        report.verdict_reason = "recognizability is not established in both systems";
    } else {
        report.verdict = Verdict::Inconsistent;
        report.verdict_reason =
            "dual recognizability with independent bases, yet no periodicity was detected; "
            "this contradicts the theorem and needs human review";
    }
    if (same_parry(parry_u, parry_v) && !report.dependence.dependent())
        throw DomainError("identical systems reported independent bases");
    return report;
}

}  // namespace cobhamlab
