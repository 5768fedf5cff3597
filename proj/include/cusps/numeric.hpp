#pragma once
// Exact arithmetic backbone.  All lattice pairings, genera and bark
// coefficients are computed over GMP integers and rationals; nothing in
// the library touches floating point.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cusps {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructor; every widening goes through here.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

// Checked narrowing, used at serialization boundaries.
inline long long to_int64(const Int& v, const char* what = "value") {
  if (!v.fits_slong_p())
    throw std::domain_error(std::string(what) + " does not fit in 64 bits: " + v.get_str());
  return static_cast<long long>(v.get_si());
}

// "3/2" for proper fractions, "2" for integers.
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace cusps
