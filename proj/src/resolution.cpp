#include "cusps/resolution.hpp"

#include <stdexcept>
#include <string>

namespace cusps {

namespace {

void same_length(const LatticeClass& x, const LatticeClass& y) {
  if (x.E.size() != y.E.size())
    throw std::invalid_argument("lattice classes live in different lattices");
}

}  // namespace

LatticeClass operator+(const LatticeClass& x, const LatticeClass& y) {
  same_length(x, y);
  LatticeClass out;
  out.L = x.L + y.L;
  out.M = x.M + y.M;
  out.E.resize(x.E.size());
  for (size_t i = 0; i < x.E.size(); ++i) out.E[i] = x.E[i] + y.E[i];
  return out;
}

LatticeClass operator-(const LatticeClass& x, const LatticeClass& y) {
  same_length(x, y);
  LatticeClass out;
  out.L = x.L - y.L;
  out.M = x.M - y.M;
  out.E.resize(x.E.size());
  for (size_t i = 0; i < x.E.size(); ++i) out.E[i] = x.E[i] - y.E[i];
  return out;
}

bool operator==(const LatticeClass& x, const LatticeClass& y) {
  same_length(x, y);
  return x.L == y.L && x.M == y.M && x.E == y.E;
}

ResolutionLattice::ResolutionLattice(CuspidalConfig cfg)
    : cfg_(std::move(cfg)), genus_(genus_of_config(cfg_)) {}

ResolutionLattice ResolutionLattice::build(const CuspidalConfig& cfg) {
  ResolutionLattice lat(cfg);
  if (lat.genus_ < 0)
    throw std::domain_error("configuration does not fit on the curve: genus " +
                            lat.genus_.get_str());

  for (const auto& s : lat.cfg_.cusps) {
    lat.offsets_.push_back(lat.t_);
    lat.t_ += s.length();
  }

  const size_t t = static_cast<size_t>(lat.t_);
  auto zero = [&] {
    LatticeClass c;
    c.E.assign(t, Int(0));
    return c;
  };

  lat.c_tilde_ = zero();
  lat.c_tilde_.L = lat.cfg_.type.a;
  lat.c_tilde_.M = lat.cfg_.type.b;
  lat.k_v_ = zero();
  lat.k_v_.L = Int(lat.cfg_.type.e) - 2;
  lat.k_v_.M = -2;
  for (size_t i = 0; i < t; ++i) lat.k_v_.E[i] = 1;

  lat.e_prime_.assign(t, LatticeClass{});
  for (size_t c = 0; c < lat.cfg_.cusps.size(); ++c) {
    const auto& seq = lat.cfg_.cusps[c];
    const size_t off = static_cast<size_t>(lat.offsets_[c]);
    for (long long i = 0; i < seq.length(); ++i) {
      lat.c_tilde_.E[off + static_cast<size_t>(i)] = -make_int(seq.entries()[i]);
      LatticeClass ep = zero();
      ep.E[off + static_cast<size_t>(i)] = 1;
      for (long long j = i + 1; j <= i + seq.prox_len(i); ++j)
        ep.E[off + static_cast<size_t>(j)] = -1;
      lat.e_prime_[off + static_cast<size_t>(i)] = std::move(ep);
    }
  }

  lat.d_ = lat.c_tilde_;
  for (const auto& ep : lat.e_prime_) lat.d_ = lat.d_ + ep;
  return lat;
}

LatticeClass ResolutionLattice::basis_vector(long long i) const {
  if (i < 0 || i >= t_) throw std::invalid_argument("blowup index out of range");
  LatticeClass c;
  c.E.assign(static_cast<size_t>(t_), Int(0));
  c.E[static_cast<size_t>(i)] = 1;
  return c;
}

LatticeClass ResolutionLattice::log_class() const { return d_ + k_v_; }

Int ResolutionLattice::pair(const LatticeClass& x, const LatticeClass& y) const {
  same_length(x, y);
  if (x.E.size() != static_cast<size_t>(t_))
    throw std::invalid_argument("lattice class does not belong to this lattice");
  Int out = x.L * y.M + y.L * x.M + Int(cfg_.type.e) * x.M * y.M;
  for (size_t i = 0; i < x.E.size(); ++i) out -= x.E[i] * y.E[i];
  return out;
}

Int log_class_squared(const ResolutionLattice& lat) {
  const LatticeClass lc = lat.log_class();
  return lat.pair(lc, lc);
}

Int log_drop(const MultiplicitySequence& s) {
  // Coefficient of E_{i+1} in the cusp's block of D + K_V:
  //   +1 from its own E', -1 per block containing the point, +1 from K_V,
  //   -(m_i) from C~; in total 2 - #blocks - m_i.
  const long long t = s.length();
  std::vector<long long> containers(static_cast<size_t>(t), 0);
  for (long long i = 0; i < t; ++i)
    for (long long j = i + 1; j <= i + s.prox_len(i); ++j) ++containers[static_cast<size_t>(j)];
  Int drop = 0;
  for (long long i = 0; i < t; ++i) {
    const Int c = make_int(2 - containers[static_cast<size_t>(i)] - s.entries()[i]);
    drop += c * c;
  }
  return drop;
}

Int log_class_squared(const CuspidalConfig& cfg) {
  const Int lm_a = cfg.type.a + cfg.type.e - 2;
  const Int lm_b = cfg.type.b - 2;
  Int out = 2 * lm_a * lm_b + Int(cfg.type.e) * lm_b * lm_b;
  for (const auto& s : cfg.cusps) out -= log_drop(s);
  return out;
}

SncGraph dual_graph(const ResolutionLattice& lat) {
  const size_t t = static_cast<size_t>(lat.total_blowups());
  std::vector<SncVertex> vertices;
  vertices.reserve(t + 1);
  SncVertex ct;
  ct.self_intersection = lat.pair(lat.strict_transform(), lat.strict_transform());
  ct.genus = lat.genus();
  ct.label = "C~";
  vertices.push_back(std::move(ct));
  for (size_t i = 0; i < t; ++i) {
    SncVertex v;
    v.self_intersection = lat.pair(lat.reduced_exceptional(static_cast<long long>(i)),
                                   lat.reduced_exceptional(static_cast<long long>(i)));
    v.label = "E" + std::to_string(i + 1) + "'";
    vertices.push_back(std::move(v));
  }

  std::vector<SncEdge> edges;
  for (size_t i = 0; i < t; ++i) {
    const Int m = lat.pair(lat.strict_transform(), lat.reduced_exceptional(static_cast<long long>(i)));
    if (m < 0) throw std::logic_error("dual graph: negative pairing against C~");
    if (m > 0) edges.push_back({0, static_cast<int>(i + 1), m});
  }
  // Cusp blocks are orthogonal to each other, so only pairs inside one
  // cusp can meet.
  for (size_t c = 0; c < lat.config().cusps.size(); ++c) {
    const long long off = lat.cusp_offset(c);
    const long long len = lat.config().cusps[c].length();
    for (long long i = off; i < off + len; ++i)
      for (long long j = i + 1; j < off + len; ++j) {
        const Int m = lat.pair(lat.reduced_exceptional(i), lat.reduced_exceptional(j));
        if (m < 0) throw std::logic_error("dual graph: negative exceptional pairing");
        if (m > 0)
          edges.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1), m});
      }
  }
  return SncGraph(std::move(vertices), std::move(edges));
}

namespace {

nlohmann::ordered_json class_to_json(const LatticeClass& c) {
  nlohmann::ordered_json jc;
  jc["L"] = to_int64(c.L, "L coefficient");
  jc["M"] = to_int64(c.M, "M coefficient");
  jc["E"] = nlohmann::ordered_json::array();
  for (const auto& v : c.E) jc["E"].push_back(to_int64(v, "E coefficient"));
  return jc;
}

}  // namespace

nlohmann::ordered_json resolution_to_json(const ResolutionLattice& lat) {
  nlohmann::ordered_json doc;
  doc["schema"] = "resolution/1";
  doc["e"] = lat.surface_e();
  doc["a"] = to_int64(lat.config().type.a, "a");
  doc["b"] = to_int64(lat.config().type.b, "b");
  doc["config"] = lat.config().cusp_notation();
  doc["genus"] = to_int64(lat.genus(), "genus");
  doc["total_blowups"] = lat.total_blowups();
  doc["log_class_squared"] = to_int64(log_class_squared(lat), "log class square");
  nlohmann::ordered_json classes;
  classes["C_tilde"] = class_to_json(lat.strict_transform());
  classes["K_V"] = class_to_json(lat.canonical());
  classes["D"] = class_to_json(lat.reduced_total());
  classes["log"] = class_to_json(lat.log_class());
  classes["E_prime"] = nlohmann::ordered_json::array();
  for (long long i = 0; i < lat.total_blowups(); ++i)
    classes["E_prime"].push_back(class_to_json(lat.reduced_exceptional(i)));
  doc["classes"] = std::move(classes);
  doc["graph"] = dual_graph(lat).to_json();
  return doc;
}

}  // namespace cusps
