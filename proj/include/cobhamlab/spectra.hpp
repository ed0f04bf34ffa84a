// Structure theory of non-negative incidence matrices: decomposition
// into primitive components, the condition (C) normal form, principal
// and non-principal sub-substitutions, and exact Perron frequency
// vectors.
#pragma once

#include <cstddef>
#include <vector>

#include "cobhamlab/algebraic.hpp"
#include "cobhamlab/matrix.hpp"
#include "cobhamlab/substitutions.hpp"

namespace cobhamlab {

struct PrimitiveDecomposition {
    unsigned long p = 1;                    // power at which the block form holds
    std::vector<std::vector<Letter>> partition;  // components, non-principal first
    size_t q = 0;                           // number of non-principal components
    std::vector<bool> principal;            // per component

    size_t component_count() const { return partition.size(); }
};

// Decomposes M^p (p = lcm of the cycle periods of M's strongly connected
// components) into primitive-or-zero diagonal blocks over a partition of
// the letters, ordered so that every non-principal component only feeds
// later components.  Verified on construction; throws on violations.
PrimitiveDecomposition primitive_decomposition(const IntMatrix& m);

// Least k <= max_k such that s^k satisfies the normal form: block
// structure at power 1, diagonal blocks strictly positive or zero, and a
// fixed starting letter inside every non-zero component.  Returns the
// witnessing power together with its decomposition.
struct ConditionCPower {
    unsigned long k;
    PrimitiveDecomposition decomposition;
};
ConditionCPower condition_C_power(const Substitution& s, unsigned long max_k);

struct SubSubstitution {
    std::vector<Letter> component;  // parent letters, in component order
    Substitution restriction;       // over the dense component sub-alphabet
    Letter start_parent;            // fixed letter a_i in parent ids
    bool principal;
};

// One sub-substitution per component of s (which must satisfy the normal
// form itself, i.e. condition_C_power(s, 1) succeeds) whose diagonal
// block is non-zero and differs from [1].  Principal components restrict
// s; non-principal ones erase everything outside the component first.
// Every returned restriction is primitive.
std::vector<SubSubstitution> sub_substitutions(const Substitution& s);

// Interval enclosure of the Perron eigenvector of a primitive incidence
// matrix, normalized to sum 1; each component interval is narrower than
// the tolerance and certified to contain the true frequency.
std::vector<std::pair<Rat, Rat>> frequency_vector(const Substitution& s, const Rat& tolerance);

}  // namespace cobhamlab
