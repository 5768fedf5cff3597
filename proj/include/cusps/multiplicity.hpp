#pragma once
// Multiplicity sequences of unibranch plane curve germs and cuspidal
// configurations on a Hirzebruch surface.
//
// A sequence is kept in full form m_0 >= m_1 >= ... >= m_{t-1} = 1 with
// m_0 >= 2, one entry per point blown up in the minimal embedded
// resolution.  The proximity relations are forced by the entries: the
// points proximate to p_i form the contiguous block p_{i+1}..p_{i+k} whose
// multiplicities sum to exactly m_i.  A block that cannot close exactly
// (overshoot) or a point proximate to more than two earlier points means
// the entries are not the multiplicity sequence of any germ.
//
// Compact notation lists only the entries >= 2, with repetition counts:
// [6_2,3_3,2] stands for [6,6,3,3,3,2] followed by its trailing ones.
// The full form always carries exactly m_{q-1} trailing ones, where q is
// the index of the first 1.

#include <string>
#include <vector>

#include "cusps/divisor.hpp"
#include "cusps/numeric.hpp"

namespace cusps {

class MultiplicitySequence {
 public:
  // Validates a full-form sequence; throws std::invalid_argument naming
  // the violated condition.
  static MultiplicitySequence validate_full(std::vector<long long> entries);

  // Entries >= 2 only; appends the trailing ones the proximity relations
  // force, then validates.
  static MultiplicitySequence from_compact(const std::vector<long long>& body);

  // Inverse of notation().
  static MultiplicitySequence parse(const std::string& text);

  const std::vector<long long>& entries() const { return entries_; }
  long long length() const { return static_cast<long long>(entries_.size()); }  // t

  // Index of the first entry equal to 1.
  long long smooth_index() const { return q_; }

  // The points proximate to p_i are p_{i+1} .. p_{i+prox_len(i)}.
  long long prox_len(long long i) const { return prox_len_.at(static_cast<size_t>(i)); }

  std::vector<long long> compact() const;
  std::string notation() const;

  friend bool operator==(const MultiplicitySequence& x, const MultiplicitySequence& y) {
    return x.entries_ == y.entries_;
  }

 private:
  MultiplicitySequence() = default;
  std::vector<long long> entries_;
  std::vector<long long> prox_len_;
  long long q_ = 0;
};

// delta = sum of m_i (m_i - 1) / 2.
Int delta_invariant(const MultiplicitySequence& s);

// Canonical order: lexicographic on the entries, larger sequences first.
bool canonical_before(const MultiplicitySequence& x, const MultiplicitySequence& y);

// A curve type plus a multiset of cusps, one multiplicity sequence per
// cusp, stored largest-first.  Construction checks m_0 <= b for every
// cusp (a fiber through the cusp meets the curve with multiplicity b);
// it does not require the resulting genus to be non-negative, so that
// enumeration code can test feasibility itself.
struct CuspidalConfig {
  CurveType type;
  std::vector<MultiplicitySequence> cusps;

  CuspidalConfig(CurveType t, std::vector<MultiplicitySequence> c);

  // "[2_2],[2]"; empty string for a smooth configuration.
  std::string cusp_notation() const;

  // "e,a,b|[2_2],[2]", the canonical census key; parse_key inverts it.
  std::string key() const;
  static CuspidalConfig parse_key(const std::string& key);
};

Int total_delta(const CuspidalConfig& cfg);

// Smooth genus minus total delta.  Negative means the configuration does
// not fit on the curve type; callers that need feasibility check the sign.
Int genus_of_config(const CuspidalConfig& cfg);

}  // namespace cusps
