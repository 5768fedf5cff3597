#pragma once
// The numerology around the cusp-count bound.
//
//   euler_complement(g) = 2g + 2, the Euler number of the curve's
//                         complement in the surface
//   log B-M-Y            (K_V + D)^2 <= 3 * euler_complement = 6g + 6,
//                         applicable once the log Kodaira dimension is
//                         known to be >= 0
//   twig_bound           l <= 12 euler + 5 - 3 pa, the count of rational
//                         maximal twigs on an almost minimal model
//   max_cusps(g)         floor((21g + 29) / 2); 14, 25, 35 for g = 0,1,2
//
// The Kodaira classifier encodes the case table for the log surface of a
// cuspidal curve: under the hypotheses b > 2, 2a > 4 - be, a > 0 the
// verdict is Two for positive genus or at least three cusps, AtLeastZero
// for exactly two cusps at genus zero, and Unknown otherwise (the table
// says nothing outside its hypotheses).

#include <vector>

#include <json.hpp>

#include "cusps/multiplicity.hpp"
#include "cusps/numeric.hpp"
#include "cusps/resolution.hpp"

namespace cusps {

enum class KodairaVerdict { Two, AtLeastZero, Unknown };

const char* to_string(KodairaVerdict v);

Int euler_complement(const Int& g);  // 2g + 2; domain error for g < 0

Int max_cusps(const Int& g);  // floor((21g + 29)/2); domain error for g < 0

// 12 * euler + 5 - 3 * pa; domain error when euler <= 0.
Int twig_bound(const Int& euler, const Int& pa);

// Lower bound for h^0 of the sub-linear system of curves of sub-type
// (a_hat, b_hat) passing through points with multiplicities n_i:
// (b_hat + 1)(2 a_hat + 2 + b_hat e)/2 - sum n_i (n_i + 1)/2.
Int h0_lower_bound(int e, const Int& a_hat, const Int& b_hat, const std::vector<Int>& n);

KodairaVerdict kodaira_classify(const CurveType& type, const Int& g, long long s);

struct BmyResult {
  bool applicable = false;  // verdict was not Unknown
  Int left, right;          // (K_V + D)^2 and 6g + 6
  bool pass = false;        // left <= right (reported even when not applicable)
};

BmyResult bmy_check(const ResolutionLattice& lat, KodairaVerdict verdict);

struct BoundReport {
  Int g;
  long long s = 0;
  Int bound;
  bool satisfied = false;
  Int euler_complement;
  Int bmy_left, bmy_right;
  bool bmy_applicable = false;
  KodairaVerdict kodaira = KodairaVerdict::Unknown;
};

// Full report for one configuration (cusps may be absent).  Domain error
// when the configuration's genus is negative.
BoundReport bound_report(const CuspidalConfig& cfg);

nlohmann::ordered_json to_json(const BoundReport& rep);

}  // namespace cusps
