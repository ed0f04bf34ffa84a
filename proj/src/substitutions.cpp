#include "cobhamlab/substitutions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cobhamlab {

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> rules)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), rules_(std::move(rules)) {
    if (rules_.size() != static_cast<size_t>(domain_.size()))
        throw DomainError("morphism must define an image for every domain letter");
    for (const Word& w : rules_)
        for (Letter a : w)
            if (!codomain_.contains(a))
                throw DomainError("morphism image contains a letter outside the codomain");
}

const Word& Morphism::rule(Letter a) const {
    if (!domain_.contains(a)) throw DomainError("letter outside the morphism domain");
    return rules_[static_cast<size_t>(a)];
}

Word Morphism::apply(const Word& w) const {
    Word out;
    for (Letter a : w) out.append(rule(a));
    return out;
}

LazySequence Morphism::apply(const LazySequence& seq) const {
    if (!is_non_erasing())
        throw DomainError("image of an infinite sequence requires a non-erasing morphism");
    Morphism self = *this;
    LazySequence src = seq;
    return LazySequence(codomain_, [self, src](std::vector<Letter>& cache, size_t target) {
        // Recover how many source letters are already expanded.
        size_t consumed = 0, produced = 0;
        while (produced < cache.size()) {
            produced += self.rule(src.at(consumed)).size();
            ++consumed;
        }
        while (cache.size() < target) {
            const Word& img = self.rule(src.at(consumed));
            for (Letter a : img) cache.push_back(a);
            ++consumed;
        }
    });
}

bool Morphism::is_non_erasing() const {
    return std::all_of(rules_.begin(), rules_.end(), [](const Word& w) { return !w.empty(); });
}

bool Morphism::is_letter_to_letter() const {
    std::vector<bool> hit(static_cast<size_t>(codomain_.size()), false);
    for (const Word& w : rules_) {
        if (w.size() != 1) return false;
        hit[static_cast<size_t>(w[0])] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

IntMatrix Morphism::incidence_matrix() const {
    if (codomain_.size() != domain_.size())
        throw DomainError("incidence_matrix requires equal domain and codomain sizes");
    IntMatrix m(static_cast<size_t>(domain_.size()));
    for (size_t j = 0; j < rules_.size(); ++j)
        for (Letter a : rules_[j])
            m.set(static_cast<size_t>(a), j, m.at(static_cast<size_t>(a), j) + 1);
    return m;
}

Morphism Morphism::compose(const Morphism& inner) const {
    if (!(domain_ == inner.codomain_))
        throw DomainError("compose: domain/codomain mismatch");
    std::vector<Word> rules;
    rules.reserve(static_cast<size_t>(inner.domain_.size()));
    for (Letter a = 0; a < inner.domain_.size(); ++a) rules.push_back(apply(inner.rule(a)));
    return Morphism(inner.domain_, codomain_, std::move(rules));
}

Substitution::Substitution(Alphabet alphabet, std::vector<Word> rules, Letter start)
    : morphism_(alphabet, alphabet, std::move(rules)), start_(start) {
    if (!this->alphabet().contains(start_))
        throw DomainError("substitution start letter outside the alphabet");
}

Substitution Substitution::power(unsigned long k) const {
    if (k == 0) throw DomainError("substitution power must be positive");
    Morphism m = morphism_;
    for (unsigned long i = 1; i < k; ++i) m = m.compose(morphism_);
    std::vector<Word> rules;
    for (Letter a = 0; a < alphabet().size(); ++a) rules.push_back(m.rule(a));
    return Substitution(alphabet(), std::move(rules), start_);
}

LazySequence Substitution::fixed_point() const {
    require_valid(*this);
    Morphism m = morphism_;
    Letter start = start_;
    return LazySequence(alphabet(), [m, start](std::vector<Letter>& cache, size_t target) {
        if (cache.empty())
            for (Letter a : m.rule(start)) cache.push_back(a);
        // Invariant: cache == tau(x_0 .. x_{k-1}); recover k, then keep
        // appending images of the next fixed-point letters.
        size_t k = 0, produced = 0;
        while (produced < cache.size()) {
            produced += m.rule(cache[k]).size();
            ++k;
        }
        while (cache.size() < target) {
            const Word& img = m.rule(cache[k]);
            for (Letter a : img) cache.push_back(a);
            ++k;
        }
    });
}

ValidationReport validate(const Substitution& s) {
    ValidationReport report;
    const Alphabet& alphabet = s.alphabet();
    int n = alphabet.size();
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.issues.push_back(msg);
    };
    for (Letter a = 0; a < n; ++a)
        if (s.rule(a).empty()) fail("image of letter '" + alphabet.name(a) + "' is empty");
    if (!report.ok) return report;
    if (s.rule(s.start())[0] != s.start())
        fail("image of start letter '" + alphabet.name(s.start()) +
             "' does not begin with the start letter");
    // Growth: |tau^k(b)| strictly increases somewhere in [n^2, 2n^2].
    // Length vectors are the column sums of M^k, tracked exactly.
    size_t lo = static_cast<size_t>(n) * static_cast<size_t>(n);
    std::vector<Int> len(static_cast<size_t>(n), Int(1));
    auto advance = [&](std::vector<Int>& v) {
        std::vector<Int> next(static_cast<size_t>(n), Int(0));
        for (Letter b = 0; b < n; ++b) {
            Int total = 0;
            for (Letter c : s.rule(b)) total += v[static_cast<size_t>(c)];
            next[static_cast<size_t>(b)] = total;
        }
        v = std::move(next);
    };
    for (size_t k = 0; k < lo; ++k) advance(len);
    std::vector<bool> grew(static_cast<size_t>(n), false);
    std::vector<Int> cur = len;
    for (size_t k = lo; k < 2 * lo + 1; ++k) {
        std::vector<Int> prev = cur;
        advance(cur);
        for (Letter b = 0; b < n; ++b)
            if (cur[static_cast<size_t>(b)] > prev[static_cast<size_t>(b)])
                grew[static_cast<size_t>(b)] = true;
    }
    for (Letter b = 0; b < n; ++b)
        if (!grew[static_cast<size_t>(b)])
            fail("letter '" + alphabet.name(b) + "' is not growing");
    // Reachability of every letter from the start.
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<Letter> todo{s.start()};
    seen[static_cast<size_t>(s.start())] = true;
    while (!todo.empty()) {
        Letter a = todo.back();
        todo.pop_back();
        for (Letter b : s.rule(a))
            if (!seen[static_cast<size_t>(b)]) {
                seen[static_cast<size_t>(b)] = true;
                todo.push_back(b);
            }
    }
    for (Letter b = 0; b < n; ++b)
        if (!seen[static_cast<size_t>(b)])
            fail("letter '" + alphabet.name(b) + "' never occurs in the fixed point");
    return report;
}

void require_valid(const Substitution& s) {
    ValidationReport r = validate(s);
    if (r.ok) return;
    std::string msg = "invalid substitution:";
    for (const std::string& issue : r.issues) msg += " " + issue + ";";
    throw DomainError(msg);
}

RebasedSubstitution rebase_under_morphism(const Substitution& s, const Morphism& phi) {
    if (!(phi.domain() == s.alphabet()))
        throw DomainError("rebase_under_morphism: morphism domain must match the alphabet");
    if (!phi.is_non_erasing())
        throw DomainError("rebase_under_morphism: morphism must be non-erasing");
    require_valid(s);
    const Alphabet& src = s.alphabet();
    int n_letters = src.size();
    // Smallest n >= 1 with |s^n(c)| >= |phi(c)| for every c.
    unsigned long n = 1;
    std::vector<Word> expanded(static_cast<size_t>(n_letters));
    for (Letter c = 0; c < n_letters; ++c) expanded[static_cast<size_t>(c)] = s.rule(c);
    auto long_enough = [&] {
        for (Letter c = 0; c < n_letters; ++c)
            if (expanded[static_cast<size_t>(c)].size() < phi.rule(c).size()) return false;
        return true;
    };
    while (!long_enough()) {
        for (Letter c = 0; c < n_letters; ++c)
            expanded[static_cast<size_t>(c)] = s.apply(expanded[static_cast<size_t>(c)]);
        ++n;
    }
    // Paired alphabet D = {(c, k) : 0 <= k < |phi(c)|}.
    std::vector<std::pair<Letter, size_t>> pairs;
    std::vector<std::vector<Letter>> pair_id(static_cast<size_t>(n_letters));
    std::vector<std::string> names;
    for (Letter c = 0; c < n_letters; ++c) {
        for (size_t k = 0; k < phi.rule(c).size(); ++k) {
            pair_id[static_cast<size_t>(c)].push_back(static_cast<Letter>(pairs.size()));
            pairs.emplace_back(c, k);
            names.push_back(src.name(c) + ":" + std::to_string(k));
        }
    }
    Alphabet paired(names);
    auto psi = [&](const Word& w) {
        Word out;
        for (Letter c : w)
            for (Letter d : pair_id[static_cast<size_t>(c)]) out.push_back(d);
        return out;
    };
    std::vector<Word> rules(pairs.size());
    for (size_t d = 0; d < pairs.size(); ++d) {
        auto [c, k] = pairs[d];
        const Word& target = expanded[static_cast<size_t>(c)];
        size_t cut = phi.rule(c).size() - 1;
        if (k < cut)
            rules[d] = psi(target.subword(k, 1));
        else
            rules[d] = psi(target.subword(cut, target.size() - cut));
    }
    Letter start = pair_id[static_cast<size_t>(s.start())][0];
    Substitution rebased(paired, std::move(rules), start);
    std::vector<Word> chi_rules(pairs.size());
    for (size_t d = 0; d < pairs.size(); ++d) {
        auto [c, k] = pairs[d];
        chi_rules[d] = Word{phi.rule(c)[k]};
    }
    Morphism chi(paired, phi.codomain(), std::move(chi_rules));
    return RebasedSubstitution{std::move(rebased), std::move(chi)};
}

BlockSubstitutionResult block_substitution(const Substitution& s, size_t n) {
    if (n < 1) throw DomainError("block_substitution: n must be >= 1");
    require_valid(s);
    LazySequence x = s.fixed_point();
    size_t growth = 1;
    for (Letter a = 0; a < s.alphabet().size(); ++a)
        growth = std::max(growth, s.rule(a).size());
    size_t window = std::max<size_t>(4 * n * growth, 64);
    for (int attempt = 0;; ++attempt) {
        // Blocks in first-occurrence order within the window.
        std::vector<Word> blocks;
        std::map<Word, Letter> block_id;
        Word prefix = x.prefix(window);
        for (size_t i = 0; i + n <= window; ++i) {
            Word b = prefix.subword(i, n);
            if (block_id.emplace(b, static_cast<Letter>(blocks.size())).second)
                blocks.push_back(b);
        }
        bool missing = false;
        std::vector<Word> rules(blocks.size());
        for (size_t id = 0; id < blocks.size() && !missing; ++id) {
            Word image = s.apply(blocks[id]);
            size_t count = s.rule(blocks[id][0]).size();
            Word out;
            for (size_t i = 0; i < count; ++i) {
                Word piece = image.subword(i, n);
                auto it = block_id.find(piece);
                if (it == block_id.end()) {
                    missing = true;
                    break;
                }
                out.push_back(it->second);
            }
            rules[id] = std::move(out);
        }
        if (missing) {
            if (attempt >= 2)
                throw DomainError("block_substitution: block alphabet did not close within the window cap");
            window *= 2;
            continue;
        }
        std::vector<std::string> names;
        names.reserve(blocks.size());
        for (const Word& b : blocks) names.push_back(b.str(s.alphabet()));
        Alphabet block_alphabet(names);
        Letter start = block_id.at(prefix.subword(0, n));
        Substitution subst(block_alphabet, std::move(rules), start);
        std::vector<Word> first_rules;
        first_rules.reserve(blocks.size());
        for (const Word& b : blocks) first_rules.push_back(Word{b[0]});
        Morphism first(block_alphabet, s.alphabet(), std::move(first_rules));
        return BlockSubstitutionResult{std::move(subst), std::move(blocks), std::move(first)};
    }
}

namespace {

struct ProjectionSearch {
    const Substitution& s;
    const Substitution& t;
    std::vector<Letter> assignment;  // s-letter -> t-letter or -1

    bool propagate(std::vector<Letter>& work, Letter c, Letter d) {
        if (assignment[static_cast<size_t>(c)] == d) return true;
        if (assignment[static_cast<size_t>(c)] != -1) return false;
        if (s.rule(c).size() != t.rule(d).size()) return false;
        assignment[static_cast<size_t>(c)] = d;
        work.push_back(c);
        return true;
    }

    // Propagate positionwise constraints until a fixed point.
    bool close(std::vector<Letter> work) {
        while (!work.empty()) {
            Letter c = work.back();
            work.pop_back();
            Letter d = assignment[static_cast<size_t>(c)];
            const Word& sc = s.rule(c);
            const Word& td = t.rule(d);
            for (size_t i = 0; i < sc.size(); ++i)
                if (!propagate(work, sc[i], td[i])) return false;
        }
        return true;
    }

    bool solve() {
        // Most-constrained unassigned letter first.
        Letter best = -1;
        size_t best_options = SIZE_MAX;
        for (Letter c = 0; c < s.alphabet().size(); ++c) {
            if (assignment[static_cast<size_t>(c)] != -1) continue;
            size_t options = 0;
            for (Letter d = 0; d < t.alphabet().size(); ++d)
                if (s.rule(c).size() == t.rule(d).size()) ++options;
            if (options < best_options) {
                best_options = options;
                best = c;
            }
        }
        if (best == -1) return onto();
        for (Letter d = 0; d < t.alphabet().size(); ++d) {
            if (s.rule(best).size() != t.rule(d).size()) continue;
            std::vector<Letter> saved = assignment;
            std::vector<Letter> work;
            if (propagate(work, best, d) && close(std::move(work)) && solve()) return true;
            assignment = std::move(saved);
        }
        return false;
    }

    bool onto() const {
        std::vector<bool> hit(static_cast<size_t>(t.alphabet().size()), false);
        for (Letter d : assignment) hit[static_cast<size_t>(d)] = true;
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }
};

}  // namespace

std::optional<ProjectionWitness> projects_onto(const Substitution& s, const Substitution& t) {
    require_valid(s);
    require_valid(t);
    ProjectionSearch search{s, t, std::vector<Letter>(static_cast<size_t>(s.alphabet().size()), -1)};
    std::vector<Letter> work;
    if (!search.propagate(work, s.start(), t.start()) || !search.close(std::move(work)))
        return std::nullopt;
    if (!search.solve()) return std::nullopt;
    std::vector<Word> rules;
    rules.reserve(search.assignment.size());
    for (Letter d : search.assignment) rules.push_back(Word{d});
    Morphism phi(s.alphabet(), t.alphabet(), std::move(rules));
    // Commutation must hold exactly on every letter.
    for (Letter c = 0; c < s.alphabet().size(); ++c)
        if (phi.apply(s.rule(c)) != t.rule(phi.rule(c)[0]))
            throw DomainError("projects_onto: witness failed the commutation check");
    return ProjectionWitness{std::move(phi)};
}

}  // namespace cobhamlab
