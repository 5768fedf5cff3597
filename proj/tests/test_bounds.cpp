#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cusps/bounds.hpp"
#include "cusps/resolution.hpp"

using namespace cusps;

namespace {

CuspidalConfig many_cusps(const std::string& type_key, int count, const std::string& cusp) {
  std::vector<MultiplicitySequence> cusps(static_cast<size_t>(count),
                                          MultiplicitySequence::parse(cusp));
  auto base = CuspidalConfig::parse_key(type_key + "|");
  return CuspidalConfig(base.type, std::move(cusps));
}

}  // namespace

TEST_CASE("euler number of the complement") {
  CHECK(euler_complement(Int(0)) == 2);
  CHECK(euler_complement(Int(1)) == 4);
  CHECK(euler_complement(Int(5)) == 12);
  for (int g = 0; g <= 100; ++g) CHECK(euler_complement(Int(g)) == 2 * g + 2);
  CHECK_THROWS_AS(euler_complement(Int(-1)), std::domain_error);
}

TEST_CASE("cusp count bound") {
  CHECK(max_cusps(Int(0)) == 14);
  CHECK(max_cusps(Int(1)) == 25);
  CHECK(max_cusps(Int(2)) == 35);
  CHECK_THROWS_AS(max_cusps(Int(-1)), std::domain_error);
}

TEST_CASE("twig bound") {
  CHECK(twig_bound(Int(2), Int(0)) == 29);
  CHECK(twig_bound(Int(4), Int(1)) == 50);
  CHECK_THROWS_AS(twig_bound(Int(0), Int(0)), std::domain_error);
  CHECK_THROWS_AS(twig_bound(Int(-1), Int(0)), std::domain_error);
}

TEST_CASE("bound chain identities") {
  // 12(2g+2-n) + 5 - 3g == 21g + 29 - 12n as polynomials, on a grid.
  for (int g = -5; g <= 20; ++g)
    for (int n = -5; n <= 20; ++n)
      CHECK(12 * (2 * g + 2 - n) + 5 - 3 * g == 21 * g + 29 - 12 * n);

  // The proof chain at n = 0: 2s <= l gives the cusp bound.
  for (int g = 0; g <= 50; ++g) {
    CHECK(twig_bound(euler_complement(Int(g)), Int(g)) == 21 * g + 29);
    CHECK(max_cusps(Int(g)) == twig_bound(euler_complement(Int(g)), Int(g)) / 2);
  }
}

TEST_CASE("dimension count lower bound") {
  CHECK(h0_lower_bound(1, Int(2), Int(1), {Int(1)}) == 6);
  CHECK(h0_lower_bound(0, Int(1), Int(1), {Int(2)}) == 1);
  for (int e = 0; e <= 3; ++e)
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        CHECK(h0_lower_bound(e, Int(a), Int(b), {}) ==
              (Int(b) + 1) * (2 * a + 2 + b * Int(e)) / 2);
}

TEST_CASE("kodaira verdicts, frozen examples") {
  CHECK(kodaira_classify(CurveType(SurfaceParam(2), 1, 3), Int(1), 0) == KodairaVerdict::Two);
  CHECK(kodaira_classify(CurveType(SurfaceParam(1), 1, 3), Int(0), 3) == KodairaVerdict::Two);
  CHECK(kodaira_classify(CurveType(SurfaceParam(1), 1, 3), Int(0), 2) ==
        KodairaVerdict::AtLeastZero);
  CHECK(kodaira_classify(CurveType(SurfaceParam(1), 1, 2), Int(0), 5) ==
        KodairaVerdict::Unknown);
  // 2a > 4 - be fails at e=0, a=2.
  CHECK(kodaira_classify(CurveType(SurfaceParam(0), 2, 3), Int(0), 2) ==
        KodairaVerdict::Unknown);
  CHECK_THROWS_AS(kodaira_classify(CurveType(SurfaceParam(1), 1, 3), Int(-1), 0),
                  std::domain_error);
  CHECK_THROWS_AS(kodaira_classify(CurveType(SurfaceParam(1), 1, 3), Int(0), -1),
                  std::domain_error);
}

TEST_CASE("kodaira verdict never weakens as cusps are added") {
  auto rank = [](KodairaVerdict v) {
    switch (v) {
      case KodairaVerdict::Unknown: return 0;
      case KodairaVerdict::AtLeastZero: return 1;
      case KodairaVerdict::Two: return 2;
    }
    return 0;
  };
  for (int e = 0; e <= 2; ++e)
    for (int a = 0; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        int prev = 0;
        for (long long s = 0; s <= 6; ++s) {
          const int cur =
              rank(kodaira_classify(CurveType(SurfaceParam(e), a, b), Int(0), s));
          CHECK(cur >= prev);
          prev = cur;
        }
      }
}

TEST_CASE("log B-M-Y check, frozen examples") {
  const auto smooth = ResolutionLattice::build(CuspidalConfig::parse_key("1,2,3|"));
  const auto v1 = kodaira_classify(smooth.config().type, smooth.genus(), 0);
  CHECK(v1 == KodairaVerdict::Two);
  const auto b1 = bmy_check(smooth, v1);
  CHECK(b1.applicable);
  CHECK(b1.left == 3);
  CHECK(b1.right == 36);
  CHECK(b1.pass);

  const auto one = ResolutionLattice::build(CuspidalConfig::parse_key("1,2,3|[2]"));
  const auto b2 = bmy_check(one, kodaira_classify(one.config().type, one.genus(), 1));
  CHECK(b2.applicable);
  CHECK(b2.left == 2);
  CHECK(b2.right == 30);
  CHECK(b2.pass);

  const auto b3 = bmy_check(one, KodairaVerdict::Unknown);
  CHECK_FALSE(b3.applicable);
}

TEST_CASE("a configuration the B-M-Y inequality rules out") {
  const auto cfg = many_cusps("0,6,6", 25, "[2]");
  CHECK(genus_of_config(cfg) == 0);
  const auto lat = ResolutionLattice::build(cfg);
  const auto verdict = kodaira_classify(cfg.type, Int(0), 25);
  CHECK(verdict == KodairaVerdict::Two);
  const auto bmy = bmy_check(lat, verdict);
  CHECK(bmy.applicable);
  CHECK(bmy.left == 7);
  CHECK(bmy.right == 6);
  CHECK_FALSE(bmy.pass);
}

TEST_CASE("bound reports") {
  const auto rep = bound_report(CuspidalConfig::parse_key("0,2,3|[2],[2]"));
  CHECK(rep.g == 0);
  CHECK(rep.s == 2);
  CHECK(rep.bound == 14);
  CHECK(rep.satisfied);
  CHECK(rep.euler_complement == 2);
  CHECK(rep.kodaira == KodairaVerdict::Unknown);
  CHECK_FALSE(rep.bmy_applicable);

  const auto smooth = bound_report(CuspidalConfig::parse_key("1,2,3|"));
  CHECK(smooth.s == 0);
  CHECK(smooth.satisfied);
  CHECK(smooth.bmy_applicable);
  CHECK(smooth.bmy_left == 3);
  CHECK(smooth.bmy_right == 36);

  // A genus-0 configuration with more cusps than the bound allows.
  const auto over = bound_report(many_cusps("2,2,4", 15, "[2]"));
  CHECK(over.g == 0);
  CHECK(over.s == 15);
  CHECK(over.bound == 14);
  CHECK_FALSE(over.satisfied);

  CHECK_THROWS_AS(bound_report(CuspidalConfig::parse_key("0,2,3|[2,2],[2]")),
                  std::domain_error);
}

TEST_CASE("bound report serialization") {
  const auto doc = to_json(bound_report(CuspidalConfig::parse_key("0,2,3|[2],[2]")));
  CHECK(doc["schema"] == "bound-report/1");
  CHECK(doc["g"] == 0);
  CHECK(doc["s"] == 2);
  CHECK(doc["bound"] == 14);
  CHECK(doc["satisfied"] == true);
  CHECK(doc["kodaira_verdict"] == "Unknown");
  CHECK(doc["bmy_applicable"] == false);
}

TEST_CASE("verdict names") {
  CHECK(std::string(to_string(KodairaVerdict::Two)) == "Two");
  CHECK(std::string(to_string(KodairaVerdict::AtLeastZero)) == "AtLeastZero");
  CHECK(std::string(to_string(KodairaVerdict::Unknown)) == "Unknown");
}
