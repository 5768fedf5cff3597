#pragma once
// The Picard lattice of the minimal embedded resolution of a cuspidal
// configuration, in the orthogonal blowup basis.
//
// Basis: L, M from the Hirzebruch surface plus one vector E_i per blowup
// with E_i.E_i = -1, E_i.E_j = 0, E_i.L = E_i.M = 0.  Blowups are
// numbered cusp by cusp (cusps in canonical order) and point by point
// inside each cusp.  The reduced exceptional curves are
// E'_i = E_i - sum of E_j over the points proximate to p_i; the strict
// transform is C~ = aL + bM - sum m_{i-1} E_i, the canonical class
// K_V = (e-2)L - 2M + sum E_i, and the reduced total transform
// D = C~ + sum E'_i.
//
// Classes are stored dense, so building a lattice is O(t^2) in the total
// number of blowups; log_class_squared has a separate O(t) path that
// never materializes class vectors.

#include <vector>

#include <json.hpp>

#include "cusps/multiplicity.hpp"
#include "cusps/numeric.hpp"
#include "cusps/snc.hpp"

namespace cusps {

struct LatticeClass {
  Int L = 0, M = 0;
  std::vector<Int> E;  // one coefficient per blowup
};

LatticeClass operator+(const LatticeClass& x, const LatticeClass& y);
LatticeClass operator-(const LatticeClass& x, const LatticeClass& y);
bool operator==(const LatticeClass& x, const LatticeClass& y);

class ResolutionLattice {
 public:
  // Throws std::domain_error when the configuration's genus is negative.
  static ResolutionLattice build(const CuspidalConfig& cfg);

  const CuspidalConfig& config() const { return cfg_; }
  int surface_e() const { return cfg_.type.e; }
  Int genus() const { return genus_; }
  long long total_blowups() const { return t_; }

  // Global blowup index of cusp c's first point.
  long long cusp_offset(size_t c) const { return offsets_.at(c); }

  LatticeClass basis_vector(long long i) const;            // E_{i+1}
  const LatticeClass& reduced_exceptional(long long i) const {  // E'_{i+1}
    return e_prime_.at(static_cast<size_t>(i));
  }
  const LatticeClass& strict_transform() const { return c_tilde_; }
  const LatticeClass& canonical() const { return k_v_; }
  const LatticeClass& reduced_total() const { return d_; }
  LatticeClass log_class() const;  // D + K_V

  Int pair(const LatticeClass& x, const LatticeClass& y) const;

 private:
  explicit ResolutionLattice(CuspidalConfig cfg);
  CuspidalConfig cfg_;
  Int genus_;
  long long t_ = 0;
  std::vector<long long> offsets_;
  std::vector<LatticeClass> e_prime_;
  LatticeClass c_tilde_, k_v_, d_;
};

Int log_class_squared(const ResolutionLattice& lat);

// Same value through the O(t) path: the cusp blocks of D + K_V are
// orthogonal to each other and to the L,M part.
Int log_class_squared(const CuspidalConfig& cfg);

// Minus the square of one cusp's block of D + K_V; what the cusp
// subtracts from the smooth-curve value.
Int log_drop(const MultiplicitySequence& s);

// Dual graph of C~ and the E'_i: vertex 0 is C~ (carrying the
// configuration's genus), then the E'_i in blowup order; edges carry
// intersection numbers.  Exactly one E' per cusp is a (-1)-curve and it
// is the one meeting C~.
SncGraph dual_graph(const ResolutionLattice& lat);

nlohmann::ordered_json resolution_to_json(const ResolutionLattice& lat);

}  // namespace cusps
