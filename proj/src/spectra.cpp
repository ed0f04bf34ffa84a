#include "cobhamlab/spectra.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace cobhamlab {

namespace {

// Digraph on letters: edge j -> i when M(i, j) > 0 ("j produces i").
std::vector<std::vector<size_t>> production_graph(const IntMatrix& m) {
    size_t n = m.size();
    std::vector<std::vector<size_t>> adj(n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i)
            if (m.at(i, j) > 0) adj[j].push_back(i);
    return adj;
}

// Iterative Tarjan; components come out in reverse topological order.
std::vector<std::vector<size_t>> strongly_connected_components(
    const std::vector<std::vector<size_t>>& adj) {
    size_t n = adj.size();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<size_t> stack;
    std::vector<std::vector<size_t>> sccs;
    int counter = 0;
    struct Frame {
        size_t v;
        size_t next_child;
    };
    for (size_t root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next_child < adj[f.v].size()) {
                size_t w = adj[f.v][f.next_child++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                size_t v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == index[v]) {
                    std::vector<size_t> comp;
                    while (true) {
                        size_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    sccs.push_back(std::move(comp));
                }
            }
        }
    }
    return sccs;
}

// gcd of cycle lengths inside one SCC via BFS level differences;
// 1 when the component carries no cycle.
unsigned long scc_period(const std::vector<std::vector<size_t>>& adj,
                         const std::vector<size_t>& comp) {
    std::vector<bool> in_comp(adj.size(), false);
    for (size_t v : comp) in_comp[v] = true;
    std::vector<long> level(adj.size(), -1);
    std::queue<size_t> bfs;
    bfs.push(comp[0]);
    level[comp[0]] = 0;
    long g = 0;
    while (!bfs.empty()) {
        size_t v = bfs.front();
        bfs.pop();
        for (size_t w : adj[v]) {
            if (!in_comp[w]) continue;
            if (level[w] == -1) {
                level[w] = level[v] + 1;
                bfs.push(w);
            } else {
                g = std::gcd(g, std::abs(level[v] + 1 - level[w]));
            }
        }
    }
    return g == 0 ? 1 : static_cast<unsigned long>(g);
}

}  // namespace

PrimitiveDecomposition primitive_decomposition(const IntMatrix& m) {
    size_t n = m.size();
    if (n == 0) throw DomainError("primitive_decomposition: empty matrix");
    if (m.has_zero_column()) throw DomainError("primitive_decomposition: matrix has a zero column");
    auto adj = production_graph(m);
    unsigned long p = 1;
    for (const auto& comp : strongly_connected_components(adj))
        p = std::lcm(p, scc_period(adj, comp));
    IntMatrix mp = m.pow(p);
    auto padj = production_graph(mp);
    auto comps = strongly_connected_components(padj);
    size_t c = comps.size();
    // Component index per letter, cross-component edges.
    std::vector<size_t> comp_of(n);
    for (size_t i = 0; i < c; ++i)
        for (size_t v : comps[i]) comp_of[v] = i;
    std::vector<std::vector<bool>> feeds(c, std::vector<bool>(c, false));
    for (size_t j = 0; j < n; ++j)
        for (size_t i : padj[j])
            if (comp_of[j] != comp_of[i]) feeds[comp_of[j]][comp_of[i]] = true;
    std::vector<bool> is_principal(c);
    for (size_t i = 0; i < c; ++i)
        is_principal[i] = std::none_of(feeds[i].begin(), feeds[i].end(), [](bool b) { return b; });
    // Topological order (producers before consumers), smallest letter
    // first among the ready ones, then non-principal before principal.
    std::vector<size_t> indeg(c, 0);
    for (size_t i = 0; i < c; ++i)
        for (size_t j = 0; j < c; ++j)
            if (feeds[i][j]) indeg[j]++;
    std::vector<size_t> order;
    std::vector<bool> done(c, false);
    while (order.size() < c) {
        size_t pick = c;
        for (size_t i = 0; i < c; ++i) {
            if (done[i] || indeg[i] != 0) continue;
            if (pick == c || comps[i][0] < comps[pick][0]) pick = i;
        }
        if (pick == c) throw DomainError("primitive_decomposition: cyclic condensation");
        done[pick] = true;
        order.push_back(pick);
        for (size_t j = 0; j < c; ++j)
            if (feeds[pick][j]) indeg[j]--;
    }
    std::stable_partition(order.begin(), order.end(),
                          [&](size_t i) { return !is_principal[i]; });
    PrimitiveDecomposition out;
    out.p = p;
    for (size_t i : order) {
        std::vector<Letter> letters;
        for (size_t v : comps[i]) letters.push_back(static_cast<Letter>(v));
        out.partition.push_back(std::move(letters));
        out.principal.push_back(is_principal[i]);
    }
    out.q = static_cast<size_t>(std::count(out.principal.begin(), out.principal.end(), false));
    // Verification of the block form on M^p.
    std::vector<size_t> pos_of(c);
    for (size_t idx = 0; idx < order.size(); ++idx) pos_of[order[idx]] = idx;
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) {
            if (mp.at(i, j) == 0 || comp_of[i] == comp_of[j]) continue;
            size_t from = pos_of[comp_of[j]], to = pos_of[comp_of[i]];
            if (out.principal[from])
                throw DomainError("primitive_decomposition: principal component produces outside itself");
            if (to <= from)
                throw DomainError("primitive_decomposition: component feeds an earlier component");
        }
    }
    for (size_t idx = 0; idx < out.partition.size(); ++idx) {
        std::vector<size_t> letters(out.partition[idx].begin(), out.partition[idx].end());
        IntMatrix block = mp.submatrix(letters);
        if (!block.is_zero() && !is_primitive(block))
            throw DomainError("primitive_decomposition: diagonal block neither primitive nor zero");
        if (!out.principal[idx]) {
            bool feeds_later = false;
            for (size_t jdx = idx + 1; jdx < out.partition.size() && !feeds_later; ++jdx)
                for (size_t a : letters)
                    for (Letter b : out.partition[jdx])
                        if (mp.at(static_cast<size_t>(b), a) > 0) {
                            feeds_later = true;
                            break;
                        }
            if (!feeds_later)
                throw DomainError("primitive_decomposition: non-principal component feeds nothing");
        }
    }
    return out;
}

namespace {

// Filter a word onto a component (the erasing morphism phi_i).
Word filter_to(const Word& w, const std::vector<bool>& keep) {
    Word out;
    for (Letter a : w)
        if (keep[static_cast<size_t>(a)]) out.push_back(a);
    return out;
}

struct ConditionCCheck {
    bool ok = false;
    std::string failure;
    PrimitiveDecomposition decomposition;
};

ConditionCCheck check_condition_C(const Substitution& s) {
    ConditionCCheck out;
    IntMatrix m = s.incidence_matrix();
    PrimitiveDecomposition d = primitive_decomposition(m);
    if (d.p != 1) {
        out.failure = "C1: block form requires power " + std::to_string(d.p);
        return out;
    }
    size_t n = static_cast<size_t>(s.alphabet().size());
    for (size_t idx = 0; idx < d.partition.size(); ++idx) {
        std::vector<size_t> letters(d.partition[idx].begin(), d.partition[idx].end());
        IntMatrix block = m.submatrix(letters);
        if (block.is_zero()) continue;
        if (!block.all_positive()) {
            out.failure = "C2: diagonal block of component " + std::to_string(idx + 1) +
                          " is neither zero nor strictly positive";
            return out;
        }
        // C3: a letter a_i whose (filtered) image starts with a_i, with
        // a non-empty tail exactly when the block is not [1].
        std::vector<bool> keep(n, false);
        for (Letter a : d.partition[idx]) keep[static_cast<size_t>(a)] = true;
        bool block_is_one = letters.size() == 1 && block.at(0, 0) == 1;
        bool found = false;
        for (Letter a : d.partition[idx]) {
            Word image = d.principal[idx] ? s.rule(a) : filter_to(s.rule(a), keep);
            if (!image.empty() && image[0] == a) {
                bool tail_empty = image.size() == 1;
                if (tail_empty == block_is_one) {
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            out.failure = "C3: component " + std::to_string(idx + 1) +
                          " has no fixed starting letter";
            return out;
        }
    }
    out.ok = true;
    out.decomposition = std::move(d);
    return out;
}

}  // namespace

ConditionCPower condition_C_power(const Substitution& s, unsigned long max_k) {
    require_valid(s);
    std::string last_failure;
    for (unsigned long k = 1; k <= max_k; ++k) {
        Substitution sk = s.power(k);
        ConditionCCheck check = check_condition_C(sk);
        if (check.ok) return ConditionCPower{k, std::move(check.decomposition)};
        last_failure = check.failure;
    }
    throw DomainError("condition_C_power: no power up to " + std::to_string(max_k) +
                      " satisfies the normal form (last failure: " + last_failure + ")");
}

std::vector<SubSubstitution> sub_substitutions(const Substitution& s) {
    require_valid(s);
    ConditionCCheck check = check_condition_C(s);
    if (!check.ok)
        throw DomainError("sub_substitutions: substitution violates the normal form: " +
                          check.failure);
    const PrimitiveDecomposition& d = check.decomposition;
    IntMatrix m = s.incidence_matrix();
    size_t n = static_cast<size_t>(s.alphabet().size());
    std::vector<SubSubstitution> out;
    for (size_t idx = 0; idx < d.partition.size(); ++idx) {
        std::vector<size_t> letters(d.partition[idx].begin(), d.partition[idx].end());
        IntMatrix block = m.submatrix(letters);
        if (block.is_zero()) continue;
        if (letters.size() == 1 && block.at(0, 0) == 1) continue;  // the [1] block
        std::vector<bool> keep(n, false);
        std::vector<Letter> dense(n, -1);
        for (size_t i = 0; i < letters.size(); ++i) {
            keep[letters[i]] = true;
            dense[letters[i]] = static_cast<Letter>(i);
        }
        std::vector<std::string> names;
        for (size_t a : letters) names.push_back(s.alphabet().name(static_cast<Letter>(a)));
        std::vector<Word> rules(letters.size());
        Letter start_parent = -1;
        for (size_t i = 0; i < letters.size(); ++i) {
            Letter a = static_cast<Letter>(letters[i]);
            Word image = d.principal[idx] ? s.rule(a) : filter_to(s.rule(a), keep);
            Word local;
            for (Letter b : image) {
                if (dense[static_cast<size_t>(b)] == -1)
                    throw DomainError("sub_substitutions: principal image leaves its component");
                local.push_back(dense[static_cast<size_t>(b)]);
            }
            if (!local.empty() && local[0] == static_cast<Letter>(i) && start_parent == -1)
                start_parent = a;
            rules[i] = std::move(local);
        }
        if (start_parent == -1)
            throw DomainError("sub_substitutions: component has no fixed starting letter");
        Substitution restriction(Alphabet(names), std::move(rules),
                                 dense[static_cast<size_t>(start_parent)]);
        if (!is_primitive(restriction.incidence_matrix()))
            throw DomainError("sub_substitutions: component restriction is not primitive");
        std::vector<Letter> component;
        for (size_t a : letters) component.push_back(static_cast<Letter>(a));
        out.push_back(SubSubstitution{std::move(component), std::move(restriction), start_parent,
                                      d.principal[idx]});
    }
    return out;
}

std::vector<std::pair<Rat, Rat>> frequency_vector(const Substitution& s, const Rat& tolerance) {
    if (!(tolerance > 0)) throw DomainError("frequency_vector: tolerance must be positive");
    IntMatrix m = s.incidence_matrix();
    if (!is_primitive(m)) throw DomainError("frequency_vector: incidence matrix is not primitive");
    size_t n = m.size();
    if (n == 1) return {{Rat(1), Rat(1)}};
    // Raise to a strictly positive power, then keep multiplying: the
    // normalized columns of M^k form a shrinking hull around the Perron
    // vector, giving certified componentwise bounds.
    IntMatrix power = m;
    while (!power.all_positive()) power = power * m;
    for (unsigned long round = 0; round < 20000; ++round) {
        std::vector<Rat> lo(n, Rat(1)), hi(n, Rat(0));
        for (size_t j = 0; j < n; ++j) {
            Int colsum = 0;
            for (size_t i = 0; i < n; ++i) colsum += power.at(i, j);
            for (size_t i = 0; i < n; ++i) {
                Rat v(power.at(i, j), colsum);
                v.canonicalize();
                if (v < lo[i]) lo[i] = v;
                if (v > hi[i]) hi[i] = v;
            }
        }
        bool tight = true;
        for (size_t i = 0; i < n && tight; ++i)
            if (hi[i] - lo[i] > tolerance) tight = false;
        if (tight) {
            std::vector<std::pair<Rat, Rat>> out;
            for (size_t i = 0; i < n; ++i) out.emplace_back(lo[i], hi[i]);
            return out;
        }
        power = power * m;
    }
    throw PrecisionError("frequency_vector: hull iteration did not reach the tolerance");
}

}  // namespace cobhamlab
