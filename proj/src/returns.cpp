#include "cobhamlab/returns.hpp"

#include <algorithm>
#include <set>

namespace cobhamlab {

namespace {

Alphabet one_based_alphabet(size_t card) {
    std::vector<std::string> names;
    names.reserve(card);
    for (size_t k = 1; k <= card; ++k) names.push_back(std::to_string(k));
    return Alphabet(std::move(names));
}

}  // namespace

ReturnWordTable::ReturnWordTable(Word base, std::vector<Word> returns, Alphabet source_alphabet)
    : base_(std::move(base)),
      returns_(std::move(returns)),
      source_alphabet_(std::move(source_alphabet)),
      derived_alphabet_(one_based_alphabet(returns_.size())) {
    for (size_t k = 0; k < returns_.size(); ++k) {
        if (returns_[k].empty()) throw DomainError("return words must be non-empty");
        if (!index_.emplace(returns_[k], static_cast<Letter>(k)).second)
            throw DomainError("duplicate return word in table");
    }
}

const Word& ReturnWordTable::word(Letter k) const {
    if (k < 0 || static_cast<size_t>(k) >= returns_.size())
        throw DomainError("return word index out of range");
    return returns_[static_cast<size_t>(k)];
}

std::optional<Letter> ReturnWordTable::index_of(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Word ReturnWordTable::encode(const Word& derived) const {
    Word out;
    for (Letter k : derived) out.append(word(k));
    return out;
}

std::optional<Word> ReturnWordTable::decompose(const Word& w) const {
    // w followed by the base must split at exactly the occurrences of
    // the base, each gap being a known return word.
    Word extended = w + base_;
    std::vector<size_t> occ = occurrences(base_, extended);
    if (occ.empty() || occ.front() != 0 || occ.back() != w.size()) return std::nullopt;
    Word out;
    for (size_t t = 0; t + 1 < occ.size(); ++t) {
        Word piece = extended.subword(occ[t], occ[t + 1] - occ[t]);
        auto k = index_of(piece);
        if (!k) return std::nullopt;
        out.push_back(*k);
    }
    return out;
}

namespace {

// Return words seen within the prefix of the given length, in
// first-occurrence order.
std::vector<Word> scan_returns(const LazySequence& seq, const Word& u, size_t prefix_len) {
    Word prefix = seq.prefix(prefix_len);
    std::vector<size_t> occ = occurrences(u, prefix);
    std::vector<Word> found;
    std::set<Word> seen;
    for (size_t t = 0; t + 1 < occ.size(); ++t) {
        Word w = prefix.subword(occ[t], occ[t + 1] - occ[t]);
        if (seen.insert(w).second) found.push_back(w);
    }
    return found;
}

}  // namespace

ReturnWordTable return_words(const LazySequence& seq, const Word& u, size_t stability_window) {
    if (u.empty()) throw DomainError("return_words: base word must be non-empty");
    size_t len = std::max<size_t>({64, 4 * u.size(), stability_window / 4});
    size_t cap = std::max<size_t>(static_cast<size_t>(1) << 22, 256 * stability_window);
    std::vector<Word> prev2, prev1, cur;
    cur = scan_returns(seq, u, len);
    while (true) {
        if (!cur.empty() && cur == prev1 && prev1 == prev2 && len >= stability_window)
            return ReturnWordTable(u, cur, seq.alphabet());
        if (len >= cap) {
            if (occurrences(u, seq.prefix(len)).empty())
                throw DomainError("return_words: base word is not a factor within the window");
            throw DomainError(
                "return_words: table did not stabilize; sequence does not look uniformly "
                "recurrent within the window");
        }
        len *= 2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
        cur = scan_returns(seq, u, len);
    }
}

DerivedSequence derived_sequence(const LazySequence& seq, const Word& prefix,
                                 size_t stability_window) {
    if (prefix.empty()) throw DomainError("derived_sequence: prefix must be non-empty");
    if (!(seq.prefix(prefix.size()) == prefix))
        throw DomainError("derived_sequence: word is not a prefix of the sequence");
    ReturnWordTable table = return_words(seq, prefix, stability_window);
    LazySequence source = seq;
    Word base = prefix;
    ReturnWordTable coder = table;
    LazySequence derived(
        table.derived_alphabet(),
        [source, base, coder](std::vector<Letter>& cache, size_t target) {
            // Position of the next undecoded occurrence of the base.
            size_t pos = 0;
            for (Letter k : cache) pos += coder.word(k).size();
            size_t max_ret = 0;
            for (size_t k = 0; k < coder.size(); ++k)
                max_ret = std::max(max_ret, coder.word(static_cast<Letter>(k)).size());
            while (cache.size() < target) {
                // Find the next occurrence after pos; widen a few times
                // before giving up, since a gap beyond every table entry
                // already means the table missed a return word.
                size_t next = SIZE_MAX;
                for (int widen = 0; widen < 3 && next == SIZE_MAX; ++widen) {
                    size_t horizon = pos + ((max_ret + base.size() + 1) << widen);
                    Word window = source.prefix(horizon);
                    for (size_t i = pos + 1; i + base.size() <= window.size(); ++i) {
                        bool hit = true;
                        for (size_t j = 0; j < base.size() && hit; ++j)
                            if (window[i + j] != base[j]) hit = false;
                        if (hit) {
                            next = i;
                            break;
                        }
                    }
                }
                if (next == SIZE_MAX)
                    throw DomainError(
                        "derived_sequence: no further occurrence of the prefix within the "
                        "return-length bound");
                Word window = source.prefix(next + base.size());
                Word piece = window.subword(pos, next - pos);
                auto k = coder.index_of(piece);
                if (!k)
                    throw DomainError(
                        "derived_sequence: encountered a return word missing from the table");
                cache.push_back(*k);
                pos = next;
            }
        });
    return DerivedSequence{std::move(derived), std::move(table)};
}

Substitution derived_substitution(const Substitution& s, const Word& prefix,
                                  size_t stability_window) {
    require_valid(s);
    LazySequence x = s.fixed_point();
    if (!(x.prefix(prefix.size()) == prefix))
        throw DomainError("derived_substitution: word is not a prefix of the fixed point");
    ReturnWordTable table = return_words(x, prefix, stability_window);
    std::vector<Word> rules(table.size());
    for (size_t k = 0; k < table.size(); ++k) {
        Word image = s.apply(table.word(static_cast<Letter>(k)));
        auto decomposed = table.decompose(image);
        if (!decomposed)
            throw DomainError(
                "derived_substitution: image of a return word does not decompose over the table");
        rules[k] = std::move(*decomposed);
    }
    Substitution derived(table.derived_alphabet(), std::move(rules), 0);
    require_valid(derived);
    return derived;
}

std::optional<DetectedSubstitutive> detect_primitive_substitutive(const LazySequence& seq,
                                                                  size_t max_prefixes,
                                                                  size_t compare_window) {
    if (max_prefixes < 2) throw DomainError("detect_primitive_substitutive: need >= 2 prefixes");
    // Doubling lengths first for fast coverage, then the intermediate
    // lengths between the last two powers while the budget lasts.
    std::vector<size_t> lengths;
    size_t doubling = std::max<size_t>(2, (max_prefixes + 1) / 2);
    for (size_t len = 1; lengths.size() < doubling; len *= 2) lengths.push_back(len);
    size_t lo = lengths[lengths.size() - 2], hi = lengths.back();
    for (size_t len = lo + 1; len < hi && lengths.size() < max_prefixes; ++len)
        lengths.push_back(len);
    struct Entry {
        Word prefix;
        ReturnWordTable table;
        Word derived_prefix;
    };
    std::vector<Entry> entries;
    size_t inspected = 0;
    for (size_t len : lengths) {
        ++inspected;
        Word u = seq.prefix(len);
        DerivedSequence d = derived_sequence(seq, u);
        Word dp = d.seq.prefix(compare_window);
        for (const Entry& e : entries) {
            if (e.table.size() != d.table.size()) continue;
            if (!(e.derived_prefix == dp)) continue;
            if (e.prefix == u) continue;
            // Extract sigma via decomposition of the larger table's
            // return words over the smaller table.
            std::vector<Word> rules(d.table.size());
            bool ok = true;
            for (size_t k = 0; k < d.table.size() && ok; ++k) {
                auto piece = e.table.decompose(d.table.word(static_cast<Letter>(k)));
                if (!piece)
                    ok = false;
                else
                    rules[k] = std::move(*piece);
            }
            if (!ok) continue;
            Substitution sigma(d.table.derived_alphabet(), std::move(rules), 0);
            if (!validate(sigma).ok) continue;
            if (!is_primitive(sigma.incidence_matrix())) continue;
            // The fixed point must reproduce the derived sequence.
            if (!(sigma.fixed_point().prefix(compare_window) == dp)) continue;
            return DetectedSubstitutive{std::move(sigma), e.prefix,        u,
                                        e.table,          std::move(d.table), inspected};
        }
        entries.push_back(Entry{std::move(u), std::move(d.table), std::move(dp)});
    }
    return std::nullopt;
}

LinRecReport linrec_survey(const Substitution& s, size_t prefix_count, size_t stability_window) {
    require_valid(s);
    if (!is_primitive(s.incidence_matrix()))
        throw DomainError("linrec_survey: substitution must be primitive");
    if (prefix_count < 1) throw DomainError("linrec_survey: need at least one prefix");
    LazySequence x = s.fixed_point();
    LinRecReport report;
    Rat best(1);
    size_t max_card = 1;
    for (size_t len = 1; len <= prefix_count; ++len) {
        Word u = x.prefix(len);
        ReturnWordTable table = return_words(x, u, stability_window);
        size_t mn = SIZE_MAX, mx = 0;
        for (size_t k = 0; k < table.size(); ++k) {
            size_t w = table.word(static_cast<Letter>(k)).size();
            mn = std::min(mn, w);
            mx = std::max(mx, w);
        }
        report.samples.push_back(LinRecSample{len, mn, mx, table.size()});
        max_card = std::max(max_card, table.size());
        Rat lo(static_cast<long>(len), static_cast<long>(mn));
        lo.canonicalize();
        Rat hi(static_cast<long>(mx), static_cast<long>(len));
        hi.canonicalize();
        best = std::max({best, lo, hi});
    }
    // Bump to the least integer satisfying the cardinality bound if the
    // length ratios alone fall short of card <= K(K+1)^2.
    Rat k = best;
    auto card_ok = [&](const Rat& v) { return v * (v + 1) * (v + 1) >= Rat(static_cast<long>(max_card)); };
    if (!card_ok(k)) {
        Int m = rat_ceil(k);
        while (!card_ok(Rat(m))) m += 1;
        k = Rat(m);
    }
    report.K = k;
    return report;
}

}  // namespace cobhamlab
