#include "cobhamlab/numeration.hpp"

#include <algorithm>
#include <sstream>

namespace cobhamlab {

NumerationSystem::NumerationSystem(Extender extender, Rat ratio_bound,
                                   std::optional<std::vector<Int>> recurrence)
    : state_(std::make_shared<State>(State{std::move(extender), {}})),
      ratio_bound_(std::move(ratio_bound)),
      recurrence_(std::move(recurrence)) {
    ensure(1);
    if (state_->values[0] != 1) throw DomainError("numeration system must start at U_0 = 1");
}

void NumerationSystem::ensure(size_t n) const {
    if (state_->values.size() >= n) return;
    size_t before = state_->values.size();
    state_->extend(state_->values, n);
    if (state_->values.size() < n)
        throw TruncationError("numeration system generator failed to extend");
    for (size_t i = std::max<size_t>(before, 1); i < state_->values.size(); ++i) {
        if (!(state_->values[i] > state_->values[i - 1]))
            throw DomainError("numeration system values must increase strictly");
        Rat ratio(state_->values[i], state_->values[i - 1]);
        ratio.canonicalize();
        if (ratio > ratio_bound_)
            throw DomainError("numeration system ratio exceeded its declared bound");
    }
}

const Int& NumerationSystem::value(size_t n) const {
    ensure(n + 1);
    return state_->values[n];
}

size_t NumerationSystem::digit_count() const {
    Int c = rat_ceil(ratio_bound_);
    if (c < 2) throw DomainError("numeration system needs at least two digits");
    return static_cast<size_t>(c.get_ui());
}

size_t NumerationSystem::scale_index(const Int& x) const {
    if (x < 1) throw DomainError("scale_index requires x >= 1");
    size_t n = materialized();
    if (n == 0) n = 1;
    while (value(n - 1) <= x) ++n;
    // Largest i with U_i <= x is now inside the materialized range.
    size_t lo = 0, hi = n - 1;
    while (lo < hi) {
        size_t mid = (lo + hi + 1) / 2;
        if (value(mid) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

NumerationSystem NumerationSystem::base(unsigned long b) {
    if (b < 2) throw DomainError("positional base must be at least 2");
    return from_recurrence({Int(static_cast<long>(b))}, {Int(1)});
}

NumerationSystem NumerationSystem::from_recurrence(std::vector<Int> coefficients,
                                                   std::vector<Int> initial) {
    if (coefficients.empty()) throw DomainError("recurrence needs at least one coefficient");
    if (coefficients.back() == 0) throw DomainError("leading recurrence coefficient must be non-zero");
    if (initial.size() != coefficients.size())
        throw DomainError("recurrence needs as many initial values as coefficients");
    if (initial[0] != 1) throw DomainError("numeration system must start at U_0 = 1");
    size_t k = coefficients.size();
    auto coeff = std::make_shared<std::vector<Int>>(std::move(coefficients));
    auto init = std::make_shared<std::vector<Int>>(std::move(initial));
    Extender extend = [coeff, init, k](std::vector<Int>& values, size_t target) {
        while (values.size() < target) {
            size_t n = values.size();
            if (n < k) {
                values.push_back((*init)[n]);
                continue;
            }
            Int next = 0;
            for (size_t i = 0; i < k; ++i) next += (*coeff)[i] * values[n - 1 - i];
            values.push_back(next);
        }
    };
    // Declared ratio bound: the maximum over an ample sampled prefix.
    std::vector<Int> probe;
    extend(probe, 64);
    Rat bound(0);
    for (size_t i = 1; i < probe.size(); ++i) {
        if (!(probe[i] > probe[i - 1]))
            throw DomainError("recurrence does not produce a strictly increasing scale");
        Rat r(probe[i], probe[i - 1]);
        r.canonicalize();
        bound = std::max(bound, r);
    }
    std::vector<Int> rec = *coeff;
    return NumerationSystem(std::move(extend), bound, std::move(rec));
}

Word greedy_representation(const Int& x, const NumerationSystem& u) {
    if (x < 0) throw DomainError("greedy_representation requires a natural number");
    if (x == 0) return Word{0};
    size_t top = u.scale_index(x);
    Int rest = x;
    Word out;
    for (size_t j = top + 1; j-- > 0;) {
        Int digit, rem;
        mpz_fdiv_qr(digit.get_mpz_t(), rem.get_mpz_t(), rest.get_mpz_t(),
                    u.value(j).get_mpz_t());
        if (digit >= static_cast<long>(u.digit_count()))
            throw DomainError("greedy digit exceeded the digit alphabet");
        out.push_back(static_cast<Letter>(digit.get_si()));
        rest = rem;
    }
    return out;
}

Int digits_value(const Word& w, const NumerationSystem& u) {
    Int total = 0;
    size_t n = w.size();
    for (size_t i = 0; i < n; ++i) {
        Letter d = w[i];
        if (d < 0 || static_cast<size_t>(d) >= u.digit_count())
            throw DomainError("digit outside the system alphabet");
        if (d != 0) total += Int(d) * u.value(n - 1 - i);
    }
    return total;
}

bool is_greedy_word(const Word& w, const NumerationSystem& u) {
    for (Letter d : w)
        if (d < 0 || static_cast<size_t>(d) >= u.digit_count()) return false;
    size_t start = 0;
    while (start < w.size() && w[start] == 0) ++start;
    size_t n = w.size() - start;
    // Suffix condition: sum of a_i U_i over positions <= j stays below
    // U_{j+1}, for every suffix.
    Int sum = 0;
    for (size_t j = 0; j < n; ++j) {
        Letter d = w[w.size() - 1 - j];
        if (d != 0) sum += Int(d) * u.value(j);
        if (sum >= u.value(j + 1)) return false;
    }
    return true;
}

std::optional<RecurrenceFit> detect_linear_recurrence(const NumerationSystem& u,
                                                      size_t max_order, size_t sample) {
    if (sample < 2 * max_order + 4)
        throw DomainError("detect_linear_recurrence: sample must be >= 2*max_order + 4");
    std::vector<Int> v(sample);
    for (size_t i = 0; i < sample; ++i) v[i] = u.value(i);
    for (size_t k = 1; k <= max_order; ++k) {
        // Exact elimination on the stacked rows U_n = sum d_i U_{n-i}.
        size_t rows = sample - k;
        std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(k + 1));
        for (size_t r = 0; r < rows; ++r) {
            size_t n = k + r;
            for (size_t i = 0; i < k; ++i) m[r][i] = Rat(v[n - 1 - i]);
            m[r][k] = Rat(v[n]);
        }
        size_t rank = 0;
        std::vector<size_t> pivot_col;
        for (size_t col = 0; col < k && rank < rows; ++col) {
            size_t pivot = rank;
            while (pivot < rows && m[pivot][col] == 0) ++pivot;
            if (pivot == rows) continue;
            std::swap(m[rank], m[pivot]);
            Rat inv = m[rank][col];
            for (size_t c = col; c <= k; ++c) m[rank][c] /= inv;
            for (size_t r = 0; r < rows; ++r) {
                if (r == rank || m[r][col] == 0) continue;
                Rat f = m[r][col];
                for (size_t c = col; c <= k; ++c) m[r][c] -= f * m[rank][c];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        bool inconsistent = false;
        for (size_t r = rank; r < rows && !inconsistent; ++r)
            if (m[r][k] != 0) inconsistent = true;
        if (inconsistent) continue;
        std::vector<Rat> d(k, Rat(0));  // free variables pinned to zero
        for (size_t r = 0; r < rank; ++r) d[pivot_col[r]] = m[r][k];
        bool integral = true;
        for (const Rat& x : d)
            if (x.get_den() != 1) integral = false;
        if (!integral || d[k - 1] == 0) continue;
        std::vector<Int> coeffs(k);
        for (size_t i = 0; i < k; ++i) coeffs[i] = d[i].get_num();
        // Re-verify on the whole sample.
        bool fits = true;
        for (size_t n = k; n < sample && fits; ++n) {
            Int rhs = 0;
            for (size_t i = 0; i < k; ++i) rhs += coeffs[i] * v[n - 1 - i];
            if (rhs != v[n]) fits = false;
        }
        if (!fits) continue;
        std::vector<Int> poly(k + 1);
        poly[k] = 1;
        for (size_t i = 0; i < k; ++i) poly[k - 1 - i] = -coeffs[i];
        return RecurrenceFit{std::move(coeffs), IntPoly(std::move(poly))};
    }
    return std::nullopt;
}

ParryData::ParryData(std::vector<int> preperiod, std::vector<int> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (preperiod_.empty())
        throw InadmissibleParryError("expansion data needs a non-empty preperiod");
    if (preperiod_[0] < 1)
        throw InadmissibleParryError("first digit of the expansion of 1 must be at least 1");
    for (int d : preperiod_)
        if (d < 0 || d > preperiod_[0])
            throw InadmissibleParryError("expansion digits must lie in [0, a_1]");
    for (int d : period_)
        if (d < 0 || d > preperiod_[0])
            throw InadmissibleParryError("expansion digits must lie in [0, a_1]");
    if (period_.empty()) {
        if (preperiod_.back() == 0)
            throw InadmissibleParryError("finite expansion must end in a non-zero digit");
    } else {
        bool all_zero = std::all_of(period_.begin(), period_.end(), [](int d) { return d == 0; });
        if (all_zero)
            throw InadmissibleParryError("periodic expansion must have a non-zero period digit");
    }
}

int ParryData::digit(size_t i) const {
    if (i == 0 || i > stream_length()) throw DomainError("expansion digit index out of range");
    if (i <= preperiod_.size()) return preperiod_[i - 1];
    return period_[i - 1 - preperiod_.size()];
}

IntPoly parry_polynomial(const ParryData& p) {
    size_t n = p.preperiod().size();
    size_t m = p.period().size();
    if (m == 0) {
        // x^n - a_1 x^{n-1} - ... - a_n
        std::vector<Int> c(n + 1, Int(0));
        c[n] = 1;
        for (size_t i = 1; i <= n; ++i) c[n - i] = -Int(p.digit(i));
        return IntPoly(std::move(c));
    }
    // x^{n+m} - sum a_i x^{n+m-i} - x^n + sum a_i x^{n-i} - sum a_{n+j} x^{m-j}
    std::vector<Int> c(n + m + 1, Int(0));
    c[n + m] = 1;
    for (size_t i = 1; i <= n; ++i) c[n + m - i] -= Int(p.digit(i));
    c[n] -= 1;
    for (size_t i = 1; i <= n; ++i) c[n - i] += Int(p.digit(i));
    for (size_t j = 1; j <= m; ++j) c[m - j] -= Int(p.digit(n + j));
    return IntPoly(std::move(c));
}

namespace {

// Exact arithmetic in Q(alpha): polynomials in alpha reduced modulo the
// (monic) defining polynomial, with signs certified against the
// isolating interval.  The defining polynomial need not be irreducible,
// so zero tests go through a gcd certificate rather than coefficient
// comparison.
struct AlphaField {
    IntPoly defining;
    RatPoly modulus;
    AlgebraicInterval alpha;

    explicit AlphaField(const IntPoly& p, AlgebraicInterval a)
        : defining(p), modulus(RatPoly::from(p)), alpha(std::move(a)) {}

    RatPoly reduce(const RatPoly& g) const { return g.rem(modulus); }

    RatPoly times_alpha(const RatPoly& g) const {
        std::vector<Rat> shifted(g.coeffs().size() + 1, Rat(0));
        for (size_t i = 0; i < g.coeffs().size(); ++i) shifted[i + 1] = g.coeffs()[i];
        return reduce(RatPoly(std::move(shifted)));
    }

    // Interval Horner evaluation over [lo, hi].
    static std::pair<Rat, Rat> eval_interval(const RatPoly& g, const Rat& lo, const Rat& hi) {
        Rat a(0), b(0);
        for (size_t i = g.coeffs().size(); i-- > 0;) {
            Rat products[4] = {a * lo, a * hi, b * lo, b * hi};
            Rat mn = products[0], mx = products[0];
            for (const Rat& v : products) {
                mn = std::min(mn, v);
                mx = std::max(mx, v);
            }
            a = mn + g.coeffs()[i];
            b = mx + g.coeffs()[i];
        }
        return {a, b};
    }

    int sign(const RatPoly& raw) {
        RatPoly g = reduce(raw);
        if (g.is_zero()) return 0;
        if (g.degree() == 0) return sgn(g.coeff(0));
        if (auto r = alpha.rational_value()) return g.sign_at(*r);
        // Clear denominators (positive scalar, sign preserved).
        Int scale = 1;
        for (const Rat& c : g.coeffs()) scale = int_lcm(scale, c.get_den());
        std::vector<Int> zc(g.coeffs().size());
        for (size_t i = 0; i < zc.size(); ++i) {
            Rat scaled = g.coeffs()[i] * Rat(scale);
            zc[i] = scaled.get_num();
        }
        IntPoly gz(std::move(zc));
        IntPoly h = IntPoly::gcd(defining.square_free_part(), gz);
        if (h.degree() >= 1) {
            // Any root of h inside the isolating interval must be alpha.
            if (h.sign_at(alpha.lo()) == 0 || h.sign_at(alpha.hi()) == 0) {
                // An endpoint hit can only be alpha itself when exact;
                // endpoints of a sign-change interval are never roots of
                // the defining polynomial, hence never of h.
                throw PrecisionError("alpha sign test: unexpected endpoint root");
            }
            if (SturmChain(h).count_open(alpha.lo(), alpha.hi()) >= 1) return 0;
        }
        for (int depth = 0; depth < 4096; ++depth) {
            auto [lo, hi] = eval_interval(g, alpha.lo(), alpha.hi());
            if (lo > 0) return 1;
            if (hi < 0) return -1;
            alpha.refine_below(alpha.width() / 2);
        }
        throw PrecisionError("alpha sign test: refinement cap reached");
    }

    bool is_zero(const RatPoly& g) { return sign(g) == 0; }
};

struct ExpansionStep {
    int digit;
    RatPoly remainder;  // reduced
};

ExpansionStep expansion_step(AlphaField& field, const RatPoly& x, int max_digit) {
    RatPoly y = field.times_alpha(x);
    for (int m = 0; m <= max_digit + 1; ++m) {
        RatPoly shifted = y - RatPoly(std::vector<Rat>{Rat(m + 1)});
        if (field.sign(shifted) < 0) {
            // floor(y) == m provided y >= m.
            RatPoly above = y - RatPoly(std::vector<Rat>{Rat(m)});
            if (field.sign(above) < 0)
                throw DomainError("beta expansion: value left [0, alpha]");
            return ExpansionStep{m, field.reduce(above)};
        }
    }
    throw DomainError("beta expansion: digit exceeded its bound");
}

struct CanonicalExpansion {
    std::vector<int> preperiod, period;
};

CanonicalExpansion expansion_of_one(AlphaField& field, int max_digit, size_t cap) {
    std::vector<int> digits;
    std::vector<RatPoly> remainders;  // remainder after digit t (x_{t+1})
    RatPoly x(std::vector<Rat>{Rat(1)});
    for (size_t t = 1; t <= cap; ++t) {
        ExpansionStep step = expansion_step(field, x, max_digit);
        digits.push_back(step.digit);
        x = step.remainder;
        if (field.is_zero(x)) return CanonicalExpansion{digits, {}};
        for (size_t j = 0; j < remainders.size(); ++j) {
            if (remainders[j] == x || field.is_zero(remainders[j] - x)) {
                // Remainder after digit j+1 equals the remainder after
                // digit t, so digits j+2 .. t repeat forever.
                std::vector<int> pre(digits.begin(), digits.begin() + static_cast<long>(j) + 1);
                std::vector<int> per(digits.begin() + static_cast<long>(j) + 1, digits.end());
                return CanonicalExpansion{std::move(pre), std::move(per)};
            }
        }
        remainders.push_back(x);
    }
    throw InadmissibleParryError("expansion of 1 did not close within the iteration cap");
}

}  // namespace

BetaNumber BetaNumber::from_parry(const ParryData& p) {
    IntPoly poly = parry_polynomial(p);
    AlgebraicInterval alpha = AlgebraicInterval::largest_real_root(poly);
    if (alpha.compare(Rat(1)) <= 0)
        throw InadmissibleParryError("expansion data does not induce a base above 1");
    AlphaField field(poly, alpha);
    CanonicalExpansion canonical =
        expansion_of_one(field, p.max_digit(), 4 * p.stream_length() + 64);
    std::vector<int> want_pre = p.preperiod();
    std::vector<int> want_per = p.period();
    if (canonical.preperiod != want_pre || canonical.period != want_per) {
        std::ostringstream msg;
        msg << "expansion data is not the canonical expansion of 1 (canonical: ";
        for (int d : canonical.preperiod) msg << d << ' ';
        msg << "| ";
        for (int d : canonical.period) msg << d << ' ';
        msg << ")";
        throw InadmissibleParryError(msg.str());
    }
    return BetaNumber(p, std::move(alpha));
}

std::vector<int> beta_expansion(const RatPoly& x, const BetaNumber& alpha, size_t count) {
    AlphaField field(parry_polynomial(alpha.parry()), alpha.alpha());
    RatPoly cur = field.reduce(x);
    if (field.sign(cur) < 0 || field.sign(cur - RatPoly(std::vector<Rat>{Rat(1)})) > 0)
        throw DomainError("beta_expansion: value must lie in [0, 1]");
    std::vector<int> digits;
    digits.reserve(count);
    for (size_t t = 0; t < count; ++t) {
        ExpansionStep step = expansion_step(field, cur, alpha.parry().max_digit());
        digits.push_back(step.digit);
        cur = step.remainder;
    }
    return digits;
}

DigitDFA parry_automaton(const ParryData& p) {
    BetaNumber::from_parry(p);  // admissibility gate
    // Quasi-greedy digit cycle: finite data a_1..a_n becomes
    // (a_1 .. a_{n-1} (a_n - 1))^omega, periodic data reads as-is with
    // the cycle closing onto the first period position.
    std::vector<int> track;
    size_t back_to;
    if (p.finite()) {
        track = p.preperiod();
        track.back() -= 1;
        back_to = 0;
    } else {
        track = p.preperiod();
        for (int d : p.period()) track.push_back(d);
        back_to = p.preperiod().size();
    }
    size_t n = track.size();
    // The factor language only ever uses digits up to the first digit of
    // the quasi-greedy track (self-domination), which is a_1 except in
    // the one-digit finite case where it drops to a_1 - 1.
    size_t digits = static_cast<size_t>(track[0]) + 1;
    size_t dead = n;
    std::vector<std::vector<uint32_t>> delta(n + 1, std::vector<uint32_t>(digits));
    std::vector<bool> acc(n + 1, true);
    acc[dead] = false;
    for (size_t q = 0; q < n; ++q) {
        for (size_t d = 0; d < digits; ++d) {
            int c = track[q];
            if (static_cast<int>(d) == c)
                delta[q][d] = static_cast<uint32_t>(q + 1 < n ? q + 1 : back_to);
            else if (static_cast<int>(d) < c)
                delta[q][d] = 0;
            else
                delta[q][d] = static_cast<uint32_t>(dead);
        }
    }
    for (size_t d = 0; d < digits; ++d) delta[dead][d] = static_cast<uint32_t>(dead);
    return DigitDFA(n + 1, digits, 0, std::move(delta), std::move(acc),
                    ReadingOrder::MostSignificantFirst);
}

NumerationSystem bertrand_system_from_parry(const ParryData& p) {
    DigitDFA dfa = parry_automaton(p);
    auto mass = std::make_shared<std::vector<Int>>();
    NumerationSystem::Extender extend = [dfa, mass](std::vector<Int>& values, size_t target) {
        if (values.empty()) {
            mass->assign(dfa.state_count(), Int(0));
            (*mass)[dfa.start()] = 1;
            Int total = 0;
            for (size_t q = 0; q < dfa.state_count(); ++q)
                if (dfa.accepting(q)) total += (*mass)[q];
            values.push_back(total);
        }
        while (values.size() < target) {
            std::vector<Int> next(dfa.state_count(), Int(0));
            for (size_t q = 0; q < dfa.state_count(); ++q) {
                if ((*mass)[q] == 0) continue;
                for (size_t d = 0; d < dfa.alphabet_size(); ++d)
                    next[dfa.next(q, d)] += (*mass)[q];
            }
            *mass = std::move(next);
            Int total = 0;
            for (size_t q = 0; q < dfa.state_count(); ++q)
                if (dfa.accepting(q)) total += (*mass)[q];
            values.push_back(total);
        }
    };
    return NumerationSystem(std::move(extend), Rat(static_cast<long>(dfa.alphabet_size())));
}

Substitution omega_substitution(const ParryData& p) {
    BetaNumber beta = BetaNumber::from_parry(p);
    size_t n = p.preperiod().size();
    size_t m = p.period().size();
    size_t letters = n + m;
    std::vector<std::string> names;
    for (size_t i = 1; i <= letters; ++i) names.push_back(std::to_string(i));
    std::vector<Word> rules(letters);
    for (size_t i = 1; i <= letters; ++i) {
        Word w;
        for (int rep = 0; rep < p.digit(i); ++rep) w.push_back(0);
        if (i < letters)
            w.push_back(static_cast<Letter>(i));  // letter i+1 has id i
        else if (!p.finite())
            w.push_back(static_cast<Letter>(n));  // wrap to letter n+1
        rules[i - 1] = std::move(w);
    }
    Substitution omega(Alphabet(std::move(names)), std::move(rules), 0);
    require_valid(omega);
    if (!is_primitive(omega.incidence_matrix()))
        throw DomainError("omega substitution failed the primitivity check");
    if (!dominant_eigenvalue(omega.incidence_matrix()).equals(beta.alpha()))
        throw DomainError("omega substitution eigenvalue does not match its beta-number");
    return omega;
}

}  // namespace cobhamlab
