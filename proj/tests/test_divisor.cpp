#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cusps/divisor.hpp"

using namespace cusps;

TEST_CASE("basis pairing relations") {
  for (int e = 0; e <= 6; ++e) {
    const SurfaceParam s(e);
    CHECK(pairing(fiber_class(s), fiber_class(s)) == 0);
    CHECK(pairing(fiber_class(s), section_class(s)) == 1);
    CHECK(pairing(section_class(s), section_class(s)) == e);
  }
}

TEST_CASE("pairing is bilinear and symmetric") {
  const SurfaceParam s(2);
  const DivisorClass h = fiber_class(s) + section_class(s);
  CHECK(pairing(h, h) == 4);

  const DivisorClass x(s, 3, -1);
  const DivisorClass y(s, -2, 5);
  CHECK(pairing(x, y) == pairing(y, x));
  CHECK(pairing(x + y, h) == pairing(x, h) + pairing(y, h));
  CHECK(pairing(Int(7) * x, y) == 7 * pairing(x, y));

  const DivisorClass zero(s, 0, 0);
  CHECK(pairing(zero, y) == 0);
}

TEST_CASE("canonical class") {
  CHECK(canonical_class(SurfaceParam(0)) == DivisorClass(SurfaceParam(0), -2, -2));
  CHECK(canonical_class(SurfaceParam(2)) == DivisorClass(SurfaceParam(2), 0, -2));
  for (int e = 0; e <= 8; ++e) {
    const DivisorClass k = canonical_class(SurfaceParam(e));
    CHECK(pairing(k, k) == 8);
  }
}

TEST_CASE("surface mixing is an error") {
  const DivisorClass x(SurfaceParam(1), 1, 1);
  const DivisorClass y(SurfaceParam(2), 1, 1);
  CHECK_THROWS_AS(pairing(x, y), std::invalid_argument);
  CHECK_THROWS_AS(x + y, std::invalid_argument);
  CHECK_THROWS_AS(x - y, std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(x == y), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceParam(-1), std::invalid_argument);
}

TEST_CASE("smooth genus") {
  for (int e = 0; e <= 4; ++e)
    for (int a = 0; a <= 5; ++a)
      CHECK(arithmetic_genus(CurveType(SurfaceParam(e), a, 1)) == 0);
  CHECK(arithmetic_genus(CurveType(SurfaceParam(1), 2, 3)) == 5);
  CHECK(arithmetic_genus(CurveType(SurfaceParam(0), 2, 3)) == 2);
}

TEST_CASE("genus numerator is always even") {
  for (int e = 0; e <= 5; ++e)
    for (int a = 0; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b) {
        const Int num = (Int(b) - 1) * (2 * Int(a) - 2 + Int(b) * e);
        CHECK(num % 2 == 0);
      }
}

TEST_CASE("genus agrees with adjunction") {
  for (int e = 0; e <= 4; ++e)
    for (int a = 0; a <= 5; ++a)
      for (int b = 1; b <= 5; ++b) {
        const CurveType c(SurfaceParam(e), a, b);
        const DivisorClass d = c.divisor();
        const Int adj = pairing(d, d + canonical_class(SurfaceParam(e))) / 2 + 1;
        CHECK(arithmetic_genus(c) == adj);
      }
}

TEST_CASE("ample screen") {
  CHECK(is_ample_pairing_positive(DivisorClass(SurfaceParam(1), 1, 1)));
  CHECK(pairing(DivisorClass(SurfaceParam(1), 1, 1),
                fiber_class(SurfaceParam(1)) + section_class(SurfaceParam(1))) == 3);
  CHECK_FALSE(is_ample_pairing_positive(DivisorClass(SurfaceParam(1), 0, 0)));
  const DivisorClass k = canonical_class(SurfaceParam(1));
  CHECK_FALSE(is_ample_pairing_positive(k));
  CHECK(pairing(k, fiber_class(SurfaceParam(1)) + section_class(SurfaceParam(1))) == -5);
}

TEST_CASE("curve type validation") {
  CHECK_THROWS_AS(CurveType(SurfaceParam(1), 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(CurveType(SurfaceParam(1), 1, -2), std::invalid_argument);
  CHECK_THROWS_AS(CurveType(SurfaceParam(1), -1, 2), std::invalid_argument);
  const CurveType c(SurfaceParam(3), 0, 2);
  CHECK(c.divisor() == DivisorClass(SurfaceParam(3), 0, 2));
}
