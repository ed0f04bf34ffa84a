// Exact univariate polynomial arithmetic over Z and Q: gcd, square-free
// parts, Sturm chains, and the resultant construction that maps roots to
// their integer powers.  Exact arithmetic throughout, no floats.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cobhamlab/numbers.hpp"

namespace cobhamlab {

// Dense integer polynomial, coeffs_[i] = coefficient of x^i, no trailing
// zero coefficients (zero polynomial has an empty vector, degree -1).
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(Int c);
    static IntPoly x();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Int& coeff(int i) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const;

    IntPoly derivative() const;
    Int content() const;                 // gcd of coefficients, >= 0
    IntPoly primitive_part() const;      // content removed, leading coeff > 0
    // p / gcd(p, p'), primitive with positive leading coefficient.
    IntPoly square_free_part() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly scaled(const Int& c) const;

    // Exact division; throws DomainError if the division is not exact.
    IntPoly divexact(const IntPoly& d) const;

    bool operator==(const IntPoly&) const = default;

    // gcd of the primitive parts, primitive, positive leading coefficient.
    static IntPoly gcd(IntPoly a, IntPoly b);

    std::string str(std::string_view var = "x") const;
    // Accepts forms like "x^2-3x+1", "2", "-x^3 + 4".
    static IntPoly parse(std::string_view text);

  private:
    void trim();
    std::vector<Int> coeffs_;
};

// Polynomial whose roots are the p-th powers of the roots of `poly`,
// computed as Res_y(poly(y), x - y^p) and reduced to its primitive
// square-free part.
IntPoly power_roots_poly(const IntPoly& poly, unsigned long p);

// Dense rational polynomial, used for remainder sequences.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    static RatPoly from(const IntPoly& p);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const;

    RatPoly derivative() const;
    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly scaled(const Rat& c) const;

    // Euclidean remainder of *this by d (d non-zero).
    RatPoly rem(const RatPoly& d) const;
    // Euclidean quotient.
    RatPoly quo(const RatPoly& d) const;

    bool operator==(const RatPoly&) const = default;

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Sturm chain of a square-free integer polynomial.  count_open(a, b)
// requires non-root endpoints and returns the number of real roots in
// the open interval (a, b).
class SturmChain {
  public:
    explicit SturmChain(const IntPoly& square_free);
    int variations_at(const Rat& x) const;
    int count_open(const Rat& a, const Rat& b) const;

  private:
    std::vector<RatPoly> chain_;
};

}  // namespace cobhamlab
