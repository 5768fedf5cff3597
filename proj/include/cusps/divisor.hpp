#pragma once
// Divisor classes on a Hirzebruch surface F_e.
//
// Pic(F_e) = Z L + Z M where L is the fiber class and M a section class
// with L^2 = 0, L.M = 1, M^2 = e.  The canonical class is
// K = (e-2)L - 2M, so K^2 = 8 for every e.  A class never forgets which
// surface it lives on; mixing classes from different surfaces is an
// error, not a silent coercion.

#include <stdexcept>
#include <string>
#include <utility>

#include "cusps/numeric.hpp"

namespace cusps {

struct SurfaceParam {
  int e;
  explicit SurfaceParam(int e_) : e(e_) {
    if (e_ < 0)
      throw std::invalid_argument("surface parameter e must be non-negative, got " +
                                  std::to_string(e_));
  }
  friend bool operator==(const SurfaceParam&, const SurfaceParam&) = default;
};

struct DivisorClass {
  int e;     // surface the class lives on
  Int a, b;  // the class a*L + b*M

  DivisorClass(SurfaceParam s, Int a_, Int b_) : e(s.e), a(std::move(a_)), b(std::move(b_)) {}
};

namespace detail {
inline void same_surface(const DivisorClass& x, const DivisorClass& y, const char* op) {
  if (x.e != y.e)
    throw std::invalid_argument(std::string("surface mismatch in ") + op + ": e=" +
                                std::to_string(x.e) + " vs e=" + std::to_string(y.e));
}
}  // namespace detail

inline DivisorClass fiber_class(SurfaceParam s) { return {s, 1, 0}; }
inline DivisorClass section_class(SurfaceParam s) { return {s, 0, 1}; }

// K = (e-2)L - 2M
inline DivisorClass canonical_class(SurfaceParam s) { return {s, Int(s.e) - 2, Int(-2)}; }

inline DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  detail::same_surface(x, y, "addition");
  return {SurfaceParam(x.e), x.a + y.a, x.b + y.b};
}

inline DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
  detail::same_surface(x, y, "subtraction");
  return {SurfaceParam(x.e), x.a - y.a, x.b - y.b};
}

inline DivisorClass operator*(const Int& n, const DivisorClass& x) {
  return {SurfaceParam(x.e), n * x.a, n * x.b};
}

inline bool operator==(const DivisorClass& x, const DivisorClass& y) {
  detail::same_surface(x, y, "equality");
  return x.a == y.a && x.b == y.b;
}

// (aL + bM).(a'L + b'M) = ab' + a'b + e bb'
inline Int pairing(const DivisorClass& x, const DivisorClass& y) {
  detail::same_surface(x, y, "pairing");
  return x.a * y.b + y.a * x.b + Int(x.e) * x.b * y.b;
}

// Positivity against the moving class L + M.  Not a full ampleness test;
// it is the screen the enumeration uses.
inline bool is_ample_pairing_positive(const DivisorClass& x) {
  return pairing(x, fiber_class(SurfaceParam(x.e)) + section_class(SurfaceParam(x.e))) > 0;
}

// The type of an irreducible curve C ~ aL + bM other than a fiber or the
// negative section: b > 0 and a >= 0.
struct CurveType {
  int e;
  Int a, b;

  CurveType(SurfaceParam s, Int a_, Int b_) : e(s.e), a(std::move(a_)), b(std::move(b_)) {
    if (b <= 0)
      throw std::invalid_argument("curve type needs b > 0, got b=" + b.get_str());
    if (a < 0)
      throw std::invalid_argument("curve type needs a >= 0, got a=" + a.get_str());
  }

  DivisorClass divisor() const { return {SurfaceParam(e), a, b}; }
};

// Genus of a smooth member: (b-1)(2a-2+be)/2.  Agrees with the adjunction
// value C.(C+K)/2 + 1; the numerator is always even.
inline Int arithmetic_genus(const CurveType& c) {
  return (c.b - 1) * (2 * c.a - 2 + c.b * Int(c.e)) / 2;
}

}  // namespace cusps
