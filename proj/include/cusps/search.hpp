#pragma once
// Pruned exhaustive census of cuspidal configurations.
//
// Cells (e, a, b) are walked in ascending order.  Inside a cell, valid
// multiplicity sequences are enumerated up to the delta budget (with the
// m_0 <= b pruning), and multisets of them are emitted in descending
// lexicographic order on the canonically sorted cusp tuple; the smooth
// configuration, when it qualifies, comes last.  The order, and therefore
// the output bytes, do not depend on the worker count: workers fill
// per-cell buffers that are merged in cell order.
//
// Resume: each record has a canonical key "e,a,b|cusps"; a run given the
// key of the last emitted record skips everything up to and including it.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cusps/bounds.hpp"
#include "cusps/multiplicity.hpp"
#include "cusps/numeric.hpp"

namespace cusps {

struct SearchSpec {
  long long e_lo = 0, e_hi = 0;
  long long a_lo = 0, a_hi = 0;
  long long b_lo = 1, b_hi = 1;
  std::optional<long long> genus;              // keep only this genus
  std::optional<long long> max_delta_per_cusp;
  bool require_bmy = false;  // drop records that fail an applicable B-M-Y check
  int threads = 1;
  std::optional<std::string> resume_after;  // canonical key of the last record already emitted
};

struct CensusRecord {
  int e = 0;
  long long a = 0, b = 1;
  std::string cusps;  // canonical cusp notation, "" when smooth
  Int g;
  long long s = 0;
  enum class Bmy { pass, fail, na } bmy = Bmy::na;
  KodairaVerdict kodaira = KodairaVerdict::Unknown;
  bool bound_ok = false;

  std::string key() const;
};

// Every valid sequence with delta <= budget and m_0 <= m_cap, descending
// lexicographic order.
std::vector<MultiplicitySequence> enumerate_sequences(const Int& delta_budget, long long m_cap);

// Streams the census; the callback returning false stops the run after
// the current record.
void enumerate_configs(const SearchSpec& spec,
                       const std::function<bool(const CensusRecord&)>& emit);

std::string to_jsonl(const CensusRecord& rec);
std::string csv_header();
std::string to_csv(const CensusRecord& rec);

}  // namespace cusps
