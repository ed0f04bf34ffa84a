// Exact arithmetic aliases and shared error types.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cobhamlab {

using Int = mpz_class;
using Rat = mpq_class;

// Base error for all domain failures raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A lazily generated object was asked for more material than its
// generator can produce (finite generators only).
struct TruncationError : Error {
    using Error::Error;
};

// Preconditions or invariants of a library operation were violated.
struct DomainError : Error {
    using Error::Error;
};

// Exact sign determination could not complete within the refinement cap.
struct PrecisionError : Error {
    using Error::Error;
};

// Parry data failed the admissibility round trip.
struct InadmissibleParryError : DomainError {
    using DomainError::DomainError;
};

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

inline Rat make_rat(long num, long den) { return Rat(num, den); }

// floor(x) as an integer.
Int rat_floor(const Rat& x);
Int rat_ceil(const Rat& x);

Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, unsigned long e);

Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);

// Fixed-point decimal rendering of a rational, round-to-nearest,
// e.g. decimal_string(13/8, 3) == "1.625".
std::string decimal_string(const Rat& x, int digits);

}  // namespace cobhamlab
