#include "cusps/bounds.hpp"

#include <stdexcept>

namespace cusps {

const char* to_string(KodairaVerdict v) {
  switch (v) {
    case KodairaVerdict::Two: return "Two";
    case KodairaVerdict::AtLeastZero: return "AtLeastZero";
    case KodairaVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

Int euler_complement(const Int& g) {
  if (g < 0) throw std::domain_error("euler_complement: genus must be non-negative");
  return 2 * g + 2;
}

Int max_cusps(const Int& g) {
  if (g < 0) throw std::domain_error("max_cusps: genus must be non-negative");
  return (21 * g + 29) / 2;
}

Int twig_bound(const Int& euler, const Int& pa) {
  if (euler <= 0) throw std::domain_error("twig_bound: euler number must be positive");
  return 12 * euler + 5 - 3 * pa;
}

Int h0_lower_bound(int e, const Int& a_hat, const Int& b_hat, const std::vector<Int>& n) {
  Int out = (b_hat + 1) * (2 * a_hat + 2 + b_hat * Int(e)) / 2;
  for (const auto& ni : n) out -= ni * (ni + 1) / 2;
  return out;
}

KodairaVerdict kodaira_classify(const CurveType& type, const Int& g, long long s) {
  if (g < 0) throw std::domain_error("kodaira_classify: genus must be non-negative");
  if (s < 0) throw std::domain_error("kodaira_classify: cusp count must be non-negative");
  const bool hypotheses =
      type.b > 2 && 2 * type.a > 4 - type.b * Int(type.e) && type.a > 0;
  if (!hypotheses) return KodairaVerdict::Unknown;
  if (g > 0) return KodairaVerdict::Two;
  if (s >= 3) return KodairaVerdict::Two;
  if (s == 2) return KodairaVerdict::AtLeastZero;
  return KodairaVerdict::Unknown;
}

BmyResult bmy_check(const ResolutionLattice& lat, KodairaVerdict verdict) {
  BmyResult out;
  out.applicable = verdict != KodairaVerdict::Unknown;
  out.left = log_class_squared(lat);
  out.right = 6 * lat.genus() + 6;
  out.pass = out.left <= out.right;
  return out;
}

BoundReport bound_report(const CuspidalConfig& cfg) {
  BoundReport rep;
  rep.g = genus_of_config(cfg);
  if (rep.g < 0)
    throw std::domain_error("configuration does not fit on the curve: genus " + rep.g.get_str());
  rep.s = static_cast<long long>(cfg.cusps.size());
  rep.bound = max_cusps(rep.g);
  rep.satisfied = make_int(rep.s) <= rep.bound;
  rep.euler_complement = euler_complement(rep.g);
  rep.kodaira = kodaira_classify(cfg.type, rep.g, rep.s);
  rep.bmy_left = log_class_squared(cfg);  // O(t) path, no lattice needed
  rep.bmy_right = 6 * rep.g + 6;
  rep.bmy_applicable = rep.kodaira != KodairaVerdict::Unknown;
  return rep;
}

nlohmann::ordered_json to_json(const BoundReport& rep) {
  nlohmann::ordered_json doc;
  doc["schema"] = "bound-report/1";
  doc["g"] = to_int64(rep.g, "genus");
  doc["s"] = rep.s;
  doc["bound"] = to_int64(rep.bound, "bound");
  doc["satisfied"] = rep.satisfied;
  doc["euler_complement"] = to_int64(rep.euler_complement, "euler number");
  doc["bmy_left"] = to_int64(rep.bmy_left, "B-M-Y left side");
  doc["bmy_right"] = to_int64(rep.bmy_right, "B-M-Y right side");
  doc["bmy_applicable"] = rep.bmy_applicable;
  doc["kodaira_verdict"] = to_string(rep.kodaira);
  return doc;
}

}  // namespace cusps
