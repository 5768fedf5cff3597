#include "cusps/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "cusps/resolution.hpp"

namespace cusps {

std::string CensusRecord::key() const {
  return std::to_string(e) + "," + std::to_string(a) + "," + std::to_string(b) + "|" + cusps;
}

namespace {

// Largest m with m(m-1)/2 <= budget.
long long largest_multiplicity(const Int& budget) {
  if (budget < 1) return 1;
  const Int s = sqrt(8 * budget + 1);
  return to_int64((1 + s) / 2, "multiplicity cap");
}

}  // namespace

std::vector<MultiplicitySequence> enumerate_sequences(const Int& delta_budget, long long m_cap) {
  std::vector<MultiplicitySequence> out;
  if (delta_budget < 1 || m_cap < 2) return out;
  std::vector<long long> prefix;
  // Children before the prefix itself keeps the order descending
  // lexicographic; compact forms that fail validation (overshoot, triple
  // proximity) are skipped but their extensions may still be valid.
  auto gen = [&](auto&& self, const Int& used) -> void {
    long long hi = prefix.empty() ? m_cap : prefix.back();
    hi = std::min(hi, largest_multiplicity(delta_budget - used));
    for (long long v = hi; v >= 2; --v) {
      prefix.push_back(v);
      self(self, Int(used + make_int(v) * (make_int(v) - 1) / 2));
      prefix.pop_back();
    }
    if (!prefix.empty()) {
      try {
        out.push_back(MultiplicitySequence::from_compact(prefix));
      } catch (const std::invalid_argument&) {
      }
    }
  };
  gen(gen, Int(0));
  return out;
}

namespace {

struct SeqInfo {
  MultiplicitySequence seq;
  Int delta;
  Int drop;
  std::string notation;
};

std::vector<CensusRecord> census_cell(const SearchSpec& spec, int e, long long a, long long b) {
  std::vector<CensusRecord> out;
  const CurveType type(SurfaceParam(e), make_int(a), make_int(b));
  const Int g0 = arithmetic_genus(type);

  Int budget;
  std::optional<Int> target;
  if (spec.genus) {
    target = g0 - make_int(*spec.genus);
    if (*target < 0) return out;
    budget = *target;
  } else {
    if (g0 < 0) return out;
    budget = g0;
  }
  Int per_cusp = budget;
  if (spec.max_delta_per_cusp && make_int(*spec.max_delta_per_cusp) < per_cusp)
    per_cusp = make_int(*spec.max_delta_per_cusp);

  std::vector<SeqInfo> pool;
  for (auto& s : enumerate_sequences(per_cusp, b)) {
    SeqInfo info{std::move(s), Int(), Int(), {}};
    info.delta = delta_invariant(info.seq);
    info.drop = log_drop(info.seq);
    info.notation = info.seq.notation();
    pool.push_back(std::move(info));
  }

  const Int lm_a = type.a + type.e - 2;
  const Int lm_b = type.b - 2;
  const Int lm_square = 2 * lm_a * lm_b + Int(type.e) * lm_b * lm_b;

  std::vector<size_t> chosen;
  auto emit_current = [&](const Int& used, const Int& drops) {
    if (target && used != *target) return;
    CensusRecord rec;
    rec.e = e;
    rec.a = a;
    rec.b = b;
    rec.g = g0 - used;
    rec.s = static_cast<long long>(chosen.size());
    for (size_t i = 0; i < chosen.size(); ++i) {
      if (i) rec.cusps += ',';
      rec.cusps += pool[chosen[i]].notation;
    }
    rec.kodaira = kodaira_classify(type, rec.g, rec.s);
    const Int left = lm_square - drops;
    const Int right = 6 * rec.g + 6;
    if (rec.kodaira == KodairaVerdict::Unknown)
      rec.bmy = CensusRecord::Bmy::na;
    else
      rec.bmy = left <= right ? CensusRecord::Bmy::pass : CensusRecord::Bmy::fail;
    if (spec.require_bmy && rec.bmy == CensusRecord::Bmy::fail) return;
    rec.bound_ok = rec.g >= 0 && make_int(rec.s) <= max_cusps(rec.g);
    out.push_back(std::move(rec));
  };

  auto compose = [&](auto&& self, size_t start, const Int& used, const Int& drops) -> void {
    for (size_t k = start; k < pool.size(); ++k) {
      if (pool[k].delta > budget - used) continue;
      chosen.push_back(k);
      self(self, k, Int(used + pool[k].delta), Int(drops + pool[k].drop));
      chosen.pop_back();
    }
    emit_current(used, drops);
  };
  compose(compose, 0, Int(0), Int(0));
  return out;
}

}  // namespace

void enumerate_configs(const SearchSpec& spec,
                       const std::function<bool(const CensusRecord&)>& emit) {
  if (spec.e_lo < 0) throw std::invalid_argument("census: e must be non-negative");
  if (spec.a_lo < 0) throw std::invalid_argument("census: a must be non-negative");
  if (spec.b_lo < 1) throw std::invalid_argument("census: b must be positive");
  if (spec.e_lo > spec.e_hi || spec.a_lo > spec.a_hi || spec.b_lo > spec.b_hi)
    throw std::invalid_argument("census: empty range");
  if (spec.genus && *spec.genus < 0) throw std::invalid_argument("census: genus must be non-negative");
  if (spec.threads < 1) throw std::invalid_argument("census: thread count must be positive");

  struct Cell {
    int e;
    long long a, b;
  };
  std::vector<Cell> cells;
  for (long long e = spec.e_lo; e <= spec.e_hi; ++e)
    for (long long a = spec.a_lo; a <= spec.a_hi; ++a)
      for (long long b = spec.b_lo; b <= spec.b_hi; ++b)
        cells.push_back({static_cast<int>(e), a, b});

  std::vector<std::vector<CensusRecord>> results(cells.size());
  const size_t workers =
      std::max<size_t>(1, std::min<size_t>(static_cast<size_t>(spec.threads), cells.size()));
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        results[i] = census_cell(spec, cells[i].e, cells[i].a, cells[i].b);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (size_t w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto& th : threads) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  bool skipping = spec.resume_after.has_value();
  for (const auto& cell : results)
    for (const auto& rec : cell) {
      if (skipping) {
        if (rec.key() == *spec.resume_after) skipping = false;
        continue;
      }
      if (!emit(rec)) return;
    }
  if (skipping)
    throw std::domain_error("checkpoint key not found in the census stream: " +
                            *spec.resume_after);
}

namespace {

const char* bmy_name(CensusRecord::Bmy b) {
  switch (b) {
    case CensusRecord::Bmy::pass: return "pass";
    case CensusRecord::Bmy::fail: return "fail";
    case CensusRecord::Bmy::na: return "na";
  }
  return "na";
}

}  // namespace

std::string to_jsonl(const CensusRecord& rec) {
  nlohmann::ordered_json doc;
  doc["config"] = rec.key();
  doc["g"] = to_int64(rec.g, "genus");
  doc["s"] = rec.s;
  doc["bmy"] = bmy_name(rec.bmy);
  doc["kodaira"] = to_string(rec.kodaira);
  doc["bound_ok"] = rec.bound_ok;
  return doc.dump();
}

std::string csv_header() { return "config,g,s,bmy,kodaira,bound_ok"; }

std::string to_csv(const CensusRecord& rec) {
  return "\"" + rec.key() + "\"," + rec.g.get_str() + "," + std::to_string(rec.s) + "," +
         bmy_name(rec.bmy) + "," + to_string(rec.kodaira) + "," +
         (rec.bound_ok ? "true" : "false");
}

}  // namespace cusps
