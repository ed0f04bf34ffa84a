#include "cobhamlab/matrix.hpp"

#include <algorithm>

namespace cobhamlab {

IntMatrix::IntMatrix(size_t n, std::vector<Int> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw DomainError("matrix entry count does not match size");
    for (const Int& v : a_)
        if (sgn(v) < 0) throw DomainError("matrix entries must be non-negative");
}

void IntMatrix::set(size_t i, size_t j, Int v) {
    if (sgn(v) < 0) throw DomainError("matrix entries must be non-negative");
    a_[i * n_ + j] = std::move(v);
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw DomainError("matrix size mismatch");
    IntMatrix c(a.n_);
    for (size_t i = 0; i < a.n_; ++i)
        for (size_t k = 0; k < a.n_; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < a.n_; ++j) c.a_[i * a.n_ + j] += aik * b.at(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw DomainError("matrix size mismatch");
    IntMatrix c(a.n_);
    for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
    IntMatrix result = identity(n_);
    IntMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

IntMatrix IntMatrix::submatrix(const std::vector<size_t>& idx) const {
    IntMatrix s(idx.size());
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) s.set(i, j, at(idx[i], idx[j]));
    return s;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v == 0; });
}

bool IntMatrix::all_positive() const {
    return n_ > 0 && std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v > 0; });
}

bool IntMatrix::has_zero_column() const {
    for (size_t j = 0; j < n_; ++j) {
        bool zero = true;
        for (size_t i = 0; i < n_ && zero; ++i)
            if (at(i, j) != 0) zero = false;
        if (zero) return true;
    }
    return false;
}

bool IntMatrix::has_zero_row() const {
    for (size_t i = 0; i < n_; ++i) {
        bool zero = true;
        for (size_t j = 0; j < n_ && zero; ++j)
            if (at(i, j) != 0) zero = false;
        if (zero) return true;
    }
    return false;
}

Int IntMatrix::max_row_sum() const {
    Int best = 0;
    for (size_t i = 0; i < n_; ++i) {
        Int s = 0;
        for (size_t j = 0; j < n_; ++j) s += at(i, j);
        if (s > best) best = s;
    }
    return best;
}

IntPoly char_poly(const IntMatrix& m) {
    size_t n = m.size();
    if (n == 0) return IntPoly::constant(1);
    // Faddeev-LeVerrier: B_0 = I, A_k = M B_{k-1}, c_k = -tr(A_k)/k,
    // B_k = A_k + c_k I; char(x) = x^n + c_1 x^{n-1} + ... + c_n.
    // Intermediates are signed, so they live in plain vectors.
    std::vector<Int> coeffs(n + 1, Int(0));
    coeffs[n] = 1;
    std::vector<Int> b(n * n, Int(0));
    for (size_t i = 0; i < n; ++i) b[i * n + i] = 1;
    std::vector<Int> a(n * n);
    for (size_t k = 1; k <= n; ++k) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Int s = 0;
                for (size_t t = 0; t < n; ++t) s += m.at(i, t) * b[t * n + j];
                a[i * n + j] = s;
            }
        Int tr = 0;
        for (size_t i = 0; i < n; ++i) tr += a[i * n + i];
        if (!mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k)))
            throw DomainError("char_poly: inexact trace division");
        Int ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        ck = -ck;
        coeffs[n - k] = ck;
        b = a;
        for (size_t i = 0; i < n; ++i) b[i * n + i] += ck;
    }
    return IntPoly(std::move(coeffs));
}

bool is_primitive(const IntMatrix& m) {
    size_t n = m.size();
    if (n == 0) return false;
    if (m.has_zero_row() || m.has_zero_column()) return false;
    // Positivity pattern as bitsets; once positive, powers stay positive
    // (no zero row/column), so squaring up to the Wielandt bound decides.
    std::vector<std::vector<bool>> b(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) b[i][j] = m.at(i, j) > 0;
    auto all_ones = [&](const std::vector<std::vector<bool>>& p) {
        for (const auto& row : p)
            for (bool v : row)
                if (!v) return false;
        return true;
    };
    auto bool_mul = [&](const std::vector<std::vector<bool>>& x,
                        const std::vector<std::vector<bool>>& y) {
        std::vector<std::vector<bool>> z(n, std::vector<bool>(n, false));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k)
                if (x[i][k])
                    for (size_t j = 0; j < n; ++j)
                        if (y[k][j]) z[i][j] = true;
        return z;
    };
    unsigned long wielandt = (static_cast<unsigned long>(n) - 1) * (static_cast<unsigned long>(n) - 1) + 1;
    unsigned long covered = 1;
    while (true) {
        if (all_ones(b)) return true;
        if (covered >= wielandt) return false;
        b = bool_mul(b, b);
        covered *= 2;
    }
}

}  // namespace cobhamlab
