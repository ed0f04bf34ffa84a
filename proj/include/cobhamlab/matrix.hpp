// Square matrices of non-negative arbitrary-precision integers, indexed
// by letter id.
#pragma once

#include <cstddef>
#include <vector>

#include "cobhamlab/numbers.hpp"
#include "cobhamlab/polynomial.hpp"

namespace cobhamlab {

class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(size_t n) : n_(n), a_(n * n, Int(0)) {}
    IntMatrix(size_t n, std::vector<Int> entries);

    size_t size() const { return n_; }
    const Int& at(size_t i, size_t j) const { return a_[i * n_ + j]; }
    void set(size_t i, size_t j, Int v);

    static IntMatrix identity(size_t n);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    IntMatrix pow(unsigned long e) const;
    IntMatrix submatrix(const std::vector<size_t>& idx) const;

    bool is_zero() const;
    bool all_positive() const;
    bool has_zero_column() const;
    bool has_zero_row() const;
    Int max_row_sum() const;

    bool operator==(const IntMatrix&) const = default;

  private:
    size_t n_ = 0;
    std::vector<Int> a_;
};

// Exact characteristic polynomial det(xI - M), monic, via the
// Faddeev-LeVerrier recurrence (all divisions exact over Z).
IntPoly char_poly(const IntMatrix& m);

// True iff some power M^k, k <= (n-1)^2 + 1, is entrywise positive.
bool is_primitive(const IntMatrix& m);

}  // namespace cobhamlab
