#include "cobhamlab/words.hpp"

#include <algorithm>
#include <sstream>

namespace cobhamlab {

Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int rat_ceil(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

std::string decimal_string(const Rat& x, int digits) {
    Rat ax = abs(x);
    Int scale = int_pow(10, static_cast<unsigned long>(digits));
    // round(ax * scale)
    Rat scaled = ax * Rat(scale);
    Int units;
    mpz_fdiv_q(units.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    Rat frac = scaled - Rat(units);
    if (frac * 2 >= 1) units += 1;
    Int ip = units / scale;
    Int fp = units % scale;
    std::ostringstream out;
    if (sgn(x) < 0 && units != 0) out << '-';
    out << ip.get_str();
    if (digits > 0) {
        std::string f = fp.get_str();
        out << '.' << std::string(static_cast<size_t>(digits) - f.size(), '0') << f;
    }
    return out.str();
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i) {
        for (size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j])
                throw DomainError("alphabet has duplicate letter name '" + names_[i] + "'");
        }
    }
}

Alphabet Alphabet::decimal(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return Alphabet(std::move(names));
}

const std::string& Alphabet::name(Letter a) const {
    if (!contains(a)) throw DomainError("letter id out of range");
    return names_[static_cast<size_t>(a)];
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Letter>(i);
    return std::nullopt;
}

void Word::append(const Word& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

Word Word::subword(size_t pos, size_t len) const {
    if (pos + len > letters_.size()) throw DomainError("subword out of range");
    return Word(std::vector<Letter>(letters_.begin() + static_cast<long>(pos),
                                    letters_.begin() + static_cast<long>(pos + len)));
}

bool Word::is_prefix_of(const Word& w) const {
    return size() <= w.size() && std::equal(begin(), end(), w.begin());
}

std::string Word::str(const Alphabet& alphabet) const {
    std::string out;
    for (Letter a : letters_) out += alphabet.name(a);
    return out;
}

Word operator+(const Word& a, const Word& b) {
    Word r = a;
    r.append(b);
    return r;
}

LazySequence::LazySequence(Alphabet alphabet, Extender extender)
    : state_(std::make_shared<State>(State{std::move(alphabet), std::move(extender), {}})) {}

LazySequence LazySequence::from_word(Alphabet alphabet, Word w) {
    auto content = std::make_shared<Word>(std::move(w));
    return LazySequence(std::move(alphabet), [content](std::vector<Letter>& cache, size_t target) {
        if (target > content->size())
            throw TruncationError("sequence has only " + std::to_string(content->size()) +
                                  " letters, " + std::to_string(target) + " requested");
        while (cache.size() < target) cache.push_back((*content)[cache.size()]);
    });
}

LazySequence LazySequence::eventually_periodic(Alphabet alphabet, Word preperiod, Word period) {
    if (period.empty()) throw DomainError("eventually_periodic requires a non-empty period");
    auto pre = std::make_shared<Word>(std::move(preperiod));
    auto per = std::make_shared<Word>(std::move(period));
    return LazySequence(std::move(alphabet), [pre, per](std::vector<Letter>& cache, size_t target) {
        while (cache.size() < target) {
            size_t i = cache.size();
            if (i < pre->size())
                cache.push_back((*pre)[i]);
            else
                cache.push_back((*per)[(i - pre->size()) % per->size()]);
        }
    });
}

void LazySequence::ensure(size_t n) const {
    if (state_->cache.size() >= n) return;
    size_t before = state_->cache.size();
    state_->extend(state_->cache, n);
    if (state_->cache.size() < n)
        throw TruncationError("generator failed to reach requested length");
    for (size_t i = before; i < state_->cache.size(); ++i) {
        if (!state_->alphabet.contains(state_->cache[i]))
            throw DomainError("generator produced a letter outside the alphabet");
    }
}

Letter LazySequence::at(size_t i) const {
    ensure(i + 1);
    return state_->cache[i];
}

Word LazySequence::prefix(size_t n) const {
    ensure(n);
    return Word(std::vector<Letter>(state_->cache.begin(), state_->cache.begin() + static_cast<long>(n)));
}

std::set<Word> factors(const LazySequence& seq, size_t length, size_t window) {
    if (window < length) throw DomainError("factors: window smaller than factor length");
    std::set<Word> out;
    if (length == 0) {
        out.insert(Word{});
        return out;
    }
    Word p = seq.prefix(window);
    for (size_t i = 0; i + length <= window; ++i) out.insert(p.subword(i, length));
    return out;
}

std::vector<size_t> occurrences(const Word& u, const Word& host) {
    if (u.empty()) throw DomainError("occurrences: pattern must be non-empty");
    std::vector<size_t> out;
    if (u.size() > host.size()) return out;
    for (size_t i = 0; i + u.size() <= host.size(); ++i) {
        bool hit = true;
        for (size_t j = 0; j < u.size(); ++j) {
            if (host[i + j] != u[j]) {
                hit = false;
                break;
            }
        }
        if (hit) out.push_back(i);
    }
    return out;
}

std::optional<PeriodicityReport> detect_ultimate_periodicity(const LazySequence& seq,
                                                             size_t window) {
    if (window < 2) throw DomainError("detect_ultimate_periodicity: window must be >= 2");
    Word p = seq.prefix(window);
    const std::vector<Letter>& x = p.letters();
    std::optional<PeriodicityReport> best;
    for (size_t q = 1; 3 * q <= window; ++q) {
        // Last mismatch position for shift q, scanning from the end.
        size_t m = 0;
        for (size_t n = window - q; n-- > 0;) {
            if (x[n] != x[n + q]) {
                m = n + 1;
                break;
            }
        }
        if (m + 3 * q > window) continue;
        if (!best || m < best->preperiod || (m == best->preperiod && q < best->period))
            best = PeriodicityReport{m, q, window};
    }
    return best;
}

size_t max_power_index(const LazySequence& seq, size_t max_len, size_t window) {
    if (max_len < 1) throw DomainError("max_power_index: max_len must be >= 1");
    if (window < 2 * max_len) throw DomainError("max_power_index: window must be >= 2*max_len");
    Word p = seq.prefix(window);
    const std::vector<Letter>& x = p.letters();
    size_t best = 1;  // any single letter is a first power
    std::vector<size_t> run(window);
    for (size_t len = 1; len <= max_len; ++len) {
        // run[i] = number of consecutive positions j >= i with x[j] == x[j+len]
        for (size_t i = window; i-- > 0;) {
            if (i + len >= window)
                run[i] = 0;
            else
                run[i] = (x[i] == x[i + len]) ? run[i + 1] + 1 : 0;
        }
        for (size_t i = 0; i + len < window; ++i) {
            size_t reps = run[i] / len + 1;
            if (reps > best) best = reps;
        }
    }
    return best;
}

std::vector<Rat> letter_frequency_estimate(const LazySequence& seq, size_t window) {
    if (window < 1) throw DomainError("letter_frequency_estimate: window must be >= 1");
    Word p = seq.prefix(window);
    std::vector<long> counts(static_cast<size_t>(seq.alphabet().size()), 0);
    for (Letter a : p) counts[static_cast<size_t>(a)]++;
    std::vector<Rat> out;
    out.reserve(counts.size());
    for (long c : counts) {
        Rat f(c, static_cast<long>(window));
        f.canonicalize();
        out.push_back(f);
    }
    return out;
}

}  // namespace cobhamlab
