// Exactly represented real algebraic numbers: an integer polynomial plus
// a rational isolating interval.  Equality and ordering are decided by
// polynomial gcds and Sturm counts, never by floating point.
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cobhamlab/matrix.hpp"
#include "cobhamlab/polynomial.hpp"

namespace cobhamlab {

class AlgebraicInterval {
  public:
    // Exactly the rational r (poly = den*x - num, degenerate interval).
    static AlgebraicInterval exact(const Rat& r);
    // Isolate the largest real root of p; the polynomial is reduced to
    // its square-free primitive part and the interval is refined to the
    // requested width with Sturm count exactly 1.
    static AlgebraicInterval largest_real_root(const IntPoly& p,
                                               const Rat& width = default_width());

    static Rat default_width();  // 10^-12

    const IntPoly& poly() const { return poly_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    bool is_exact() const { return lo_ == hi_; }
    Rat width() const { return hi_ - lo_; }
    Rat midpoint() const { return (lo_ + hi_) / 2; }

    // Exact rational value when the root is rational, else nullopt.
    std::optional<Rat> rational_value() const;

    // Shrink the isolating interval below the given width (dyadic
    // bisection; may collapse to an exact rational root).
    void refine_below(const Rat& width);

    // Exact decision procedures.
    bool equals(const AlgebraicInterval& other) const;
    // -1, 0, +1 comparing the two represented numbers.
    int compare(const AlgebraicInterval& other) const;
    int compare(const Rat& r) const;

    // The p-th power of the represented number, exactly represented.
    AlgebraicInterval power(unsigned long p) const;

    std::string str(int digits = 12) const;

  private:
    AlgebraicInterval(IntPoly poly, Rat lo, Rat hi);
    void bisect_step();

    IntPoly poly_;  // square-free, primitive, positive leading coefficient
    Rat lo_, hi_;   // lo == hi (exact) or sign change across [lo, hi]
};

enum class DependenceStatus {
    Dependent,            // a^p = b^q exactly, witness attached
    IndependentUpToBound, // no pair within 1..max_exp
    Independent,          // certified (integer unique-factorization case)
};

struct DependenceResult {
    DependenceStatus status;
    // Present iff status == Dependent: smallest (p, q) lexicographically.
    std::optional<std::pair<unsigned long, unsigned long>> exponents;
    unsigned long searched_up_to = 0;

    bool dependent() const { return status == DependenceStatus::Dependent; }
};

// Decide whether a^p = b^q for some 1 <= p, q <= max_exp (both numbers
// must exceed 1).  Power polynomials go through resultants; candidate
// equalities are certified by gcd root location.  When both numbers are
// rational integers the decision is exact and unbounded.
DependenceResult multiplicatively_dependent(const AlgebraicInterval& a,
                                            const AlgebraicInterval& b,
                                            unsigned long max_exp);

// Perron eigenvalue of a non-negative matrix without zero columns, as
// the largest real root of its characteristic polynomial.
AlgebraicInterval dominant_eigenvalue(const IntMatrix& m,
                                      const Rat& width = AlgebraicInterval::default_width());

}  // namespace cobhamlab
