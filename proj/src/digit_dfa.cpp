#include "cobhamlab/digit_dfa.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace cobhamlab {

DigitDFA::DigitDFA(size_t states, size_t alphabet_size, size_t start,
                   std::vector<std::vector<uint32_t>> delta, std::vector<bool> accepting,
                   ReadingOrder order)
    : alphabet_size_(alphabet_size),
      start_(start),
      delta_(std::move(delta)),
      accepting_(std::move(accepting)),
      order_(order) {
    if (states == 0) throw DomainError("automaton needs at least one state");
    if (delta_.size() != states || accepting_.size() != states)
        throw DomainError("automaton table sizes disagree with the state count");
    if (start_ >= states) throw DomainError("automaton start state out of range");
    for (const auto& row : delta_) {
        if (row.size() != alphabet_size_)
            throw DomainError("automaton transition row has the wrong arity");
        for (uint32_t q : row)
            if (q >= states) throw DomainError("automaton transition target out of range");
    }
}

uint32_t DigitDFA::next(size_t q, size_t digit) const {
    if (digit >= alphabet_size_) throw DomainError("digit outside the automaton alphabet");
    return delta_[q][digit];
}

bool DigitDFA::accepts(const std::vector<int>& digits) const {
    size_t q = start_;
    for (int d : digits) {
        if (d < 0 || static_cast<size_t>(d) >= alphabet_size_)
            throw DomainError("digit outside the automaton alphabet");
        q = delta_[q][static_cast<size_t>(d)];
    }
    return accepting_[q];
}

Int DigitDFA::count_words(size_t length) const {
    std::vector<Int> mass(state_count(), Int(0));
    mass[start_] = 1;
    for (size_t step = 0; step < length; ++step) {
        std::vector<Int> next(state_count(), Int(0));
        for (size_t q = 0; q < state_count(); ++q) {
            if (mass[q] == 0) continue;
            for (size_t d = 0; d < alphabet_size_; ++d) next[delta_[q][d]] += mass[q];
        }
        mass = std::move(next);
    }
    Int total = 0;
    for (size_t q = 0; q < state_count(); ++q)
        if (accepting_[q]) total += mass[q];
    return total;
}

DigitDFA DigitDFA::minimized() const {
    // Reachable trim.
    std::vector<long> reach(state_count(), -1);
    std::vector<size_t> order_found;
    std::queue<size_t> bfs;
    bfs.push(start_);
    reach[start_] = 0;
    while (!bfs.empty()) {
        size_t q = bfs.front();
        bfs.pop();
        order_found.push_back(q);
        for (size_t d = 0; d < alphabet_size_; ++d) {
            uint32_t t = delta_[q][d];
            if (reach[t] == -1) {
                reach[t] = 0;
                bfs.push(t);
            }
        }
    }
    std::vector<size_t> alive = order_found;
    std::vector<long> alive_id(state_count(), -1);
    for (size_t i = 0; i < alive.size(); ++i) alive_id[alive[i]] = static_cast<long>(i);
    // Moore refinement over the reachable part.
    std::vector<size_t> cls(alive.size());
    for (size_t i = 0; i < alive.size(); ++i) cls[i] = accepting_[alive[i]] ? 1 : 0;
    size_t classes = 2;
    while (true) {
        std::map<std::vector<size_t>, size_t> sig_to_class;
        std::vector<size_t> next_cls(alive.size());
        for (size_t i = 0; i < alive.size(); ++i) {
            std::vector<size_t> sig;
            sig.reserve(alphabet_size_ + 1);
            sig.push_back(cls[i]);
            for (size_t d = 0; d < alphabet_size_; ++d)
                sig.push_back(cls[static_cast<size_t>(alive_id[delta_[alive[i]][d]])]);
            auto [it, fresh] = sig_to_class.emplace(std::move(sig), sig_to_class.size());
            next_cls[i] = it->second;
            (void)fresh;
        }
        size_t next_count = sig_to_class.size();
        cls = std::move(next_cls);
        if (next_count == classes) break;
        classes = next_count;
    }
    // Canonical numbering: breadth-first over classes from the start.
    std::vector<long> new_id(classes, -1);
    std::vector<size_t> rep;
    std::queue<size_t> cq;
    auto class_of_state = [&](size_t q) { return cls[static_cast<size_t>(alive_id[q])]; };
    new_id[class_of_state(start_)] = 0;
    rep.push_back(start_);
    cq.push(start_);
    while (!cq.empty()) {
        size_t q = cq.front();
        cq.pop();
        for (size_t d = 0; d < alphabet_size_; ++d) {
            size_t t = delta_[q][d];
            size_t c = class_of_state(t);
            if (new_id[c] == -1) {
                new_id[c] = static_cast<long>(rep.size());
                rep.push_back(t);
                cq.push(t);
            }
        }
    }
    size_t n = rep.size();
    std::vector<std::vector<uint32_t>> delta(n, std::vector<uint32_t>(alphabet_size_));
    std::vector<bool> acc(n);
    for (size_t i = 0; i < n; ++i) {
        acc[i] = accepting_[rep[i]];
        for (size_t d = 0; d < alphabet_size_; ++d)
            delta[i][d] = static_cast<uint32_t>(new_id[class_of_state(delta_[rep[i]][d])]);
    }
    return DigitDFA(n, alphabet_size_, 0, std::move(delta), std::move(acc), order_);
}

bool DigitDFA::padding_invariant() const {
    DigitDFA m = minimized();
    if (order_ == ReadingOrder::MostSignificantFirst) {
        // Leading zeros: the zero-successor of the start must be
        // language-equivalent to the start.
        return m.next(m.start(), 0) == m.start();
    }
    // Trailing zeros: every reachable state agrees with its
    // zero-successor on acceptance.
    for (size_t q = 0; q < m.state_count(); ++q)
        if (m.accepting(q) != m.accepting(m.next(q, 0))) return false;
    return true;
}

bool DigitDFA::same_language(const DigitDFA& other) const {
    if (alphabet_size_ != other.alphabet_size_ || order_ != other.order_) return false;
    DigitDFA a = minimized();
    DigitDFA b = other.minimized();
    if (a.state_count() != b.state_count()) return false;
    if (a.accepting_ != b.accepting_) return false;
    return a.delta_ == b.delta_ && a.start_ == b.start_;
}

DigitDFA dfa_boolean(SetOp op, const DigitDFA& a, const DigitDFA& b) {
    if (a.alphabet_size() != b.alphabet_size())
        throw DomainError("dfa_boolean: alphabet mismatch");
    if (a.order() != b.order()) throw DomainError("dfa_boolean: reading-order mismatch");
    size_t d = a.alphabet_size();
    std::map<std::pair<size_t, size_t>, size_t> id;
    std::vector<std::pair<size_t, size_t>> pairs;
    auto intern = [&](size_t qa, size_t qb) {
        auto [it, fresh] = id.emplace(std::make_pair(qa, qb), pairs.size());
        if (fresh) pairs.emplace_back(qa, qb);
        return it->second;
    };
    intern(a.start(), b.start());
    std::vector<std::vector<uint32_t>> delta;
    std::vector<bool> acc;
    for (size_t self = 0; self < pairs.size(); ++self) {
        auto [qa, qb] = pairs[self];
        std::vector<uint32_t> row(d);
        for (size_t digit = 0; digit < d; ++digit)
            row[digit] = static_cast<uint32_t>(intern(a.next(qa, digit), b.next(qb, digit)));
        delta.push_back(std::move(row));
        bool fa = a.accepting(qa), fb = b.accepting(qb);
        switch (op) {
            case SetOp::Union: acc.push_back(fa || fb); break;
            case SetOp::Intersection: acc.push_back(fa && fb); break;
            case SetOp::Difference: acc.push_back(fa && !fb); break;
        }
    }
    DigitDFA product(pairs.size(), d, 0, std::move(delta), std::move(acc), a.order());
    return product.minimized();
}

DigitDFA reverse_determinize(const DigitDFA& d, size_t state_cap) {
    size_t n = d.state_count();
    size_t k = d.alphabet_size();
    // Reversed transitions.
    std::vector<std::vector<std::vector<uint32_t>>> rev(n,
                                                        std::vector<std::vector<uint32_t>>(k));
    for (size_t q = 0; q < n; ++q)
        for (size_t digit = 0; digit < k; ++digit)
            rev[d.next(q, digit)][digit].push_back(static_cast<uint32_t>(q));
    using StateSet = std::vector<bool>;
    std::map<StateSet, size_t> id;
    std::vector<StateSet> sets;
    auto intern = [&](const StateSet& s) {
        auto [it, fresh] = id.emplace(s, sets.size());
        if (fresh) {
            sets.push_back(s);
            if (sets.size() > state_cap)
                throw DomainError("reverse_determinize: subset construction exceeded " +
                                  std::to_string(state_cap) + " states");
        }
        return it->second;
    };
    StateSet initial(n, false);
    for (size_t q = 0; q < n; ++q)
        if (d.accepting(q)) initial[q] = true;
    intern(initial);
    std::vector<std::vector<uint32_t>> delta;
    std::vector<bool> acc;
    for (size_t self = 0; self < sets.size(); ++self) {
        StateSet cur = sets[self];
        std::vector<uint32_t> row(k);
        for (size_t digit = 0; digit < k; ++digit) {
            StateSet nxt(n, false);
            for (size_t q = 0; q < n; ++q)
                if (cur[q])
                    for (uint32_t p : rev[q][digit]) nxt[p] = true;
            row[digit] = static_cast<uint32_t>(intern(nxt));
        }
        delta.push_back(std::move(row));
        acc.push_back(cur[d.start()]);
    }
    ReadingOrder flipped = d.order() == ReadingOrder::MostSignificantFirst
                               ? ReadingOrder::LeastSignificantFirst
                               : ReadingOrder::MostSignificantFirst;
    DigitDFA out(sets.size(), k, 0, std::move(delta), std::move(acc), flipped);
    return out.minimized();
}

}  // namespace cobhamlab
