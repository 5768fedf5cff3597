#pragma once
// Weighted dual graphs of simple normal crossing divisors.
//
// A vertex is an irreducible component, weighted by self-intersection and
// geometric genus; an edge of multiplicity k means the two components meet
// in k points.  The branching number beta(D_i) is the total edge
// multiplicity at D_i.  Chains, twigs, rods and forks follow the usual
// open-surface vocabulary:
//
//   tip        beta = 1
//   isolated   beta = 0
//   branching  beta >= 3
//   rod        a connected component that is a linear chain (a single
//              vertex counts as a rod of length one)
//   maximal twig   a chain grown from a tip through beta = 2 vertices,
//              stopping just before a branching vertex
//   fork       a star component: a center carrying three rational
//              admissible maximal twigs, whose bark B satisfies
//              (K + F - B).F_1 < 0 at the center F_1
//
// "Admissible" means every self-intersection is <= -2, "rational" means
// every genus is 0.  Barks solve the linear system
// N(bark) . D_i = (K + D) . D_i exactly over the rationals; the right
// side comes from adjunction, 2 genus - 2 + beta.

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "cusps/numeric.hpp"

namespace cusps {

struct SncVertex {
  Int self_intersection;
  Int genus = 0;
  std::string label;
};

struct SncEdge {
  int i = 0, j = 0;
  Int multiplicity = 1;
};

class SncGraph {
 public:
  SncGraph(std::vector<SncVertex> vertices, std::vector<SncEdge> edges);

  int size() const { return static_cast<int>(vertices_.size()); }
  const SncVertex& vertex(int i) const { return vertices_.at(static_cast<size_t>(i)); }
  const std::vector<SncEdge>& edges() const { return edges_; }
  const std::vector<std::pair<int, Int>>& adjacent(int i) const {
    return adj_.at(static_cast<size_t>(i));
  }

  bool connected() const;

  nlohmann::ordered_json to_json() const;
  static SncGraph from_json(const nlohmann::json& doc);

 private:
  std::vector<SncVertex> vertices_;
  std::vector<SncEdge> edges_;
  std::vector<std::vector<std::pair<int, Int>>> adj_;
};

// Total edge multiplicity at vertex i.
Int branching_number(const SncGraph& g, int i);

// A chain inside the graph, tip first.  attached_to is the branching
// vertex a maximal twig ends against, -1 for rods.
struct Chain {
  std::vector<int> vertices;
  int attached_to = -1;
};

struct Fork {
  int center = -1;
  std::array<std::vector<int>, 3> twigs;  // each tip first, center-adjacent last
  bool admissible = false;                // center self-intersection <= -2 as well
  bool contractible = false;              // the whole star is negative definite
};

struct Classification {
  std::vector<int> isolated;   // beta = 0
  std::vector<int> tips;       // beta = 1
  std::vector<int> branching;  // beta >= 3
  std::vector<Chain> rods;
  std::vector<Chain> maximal_twigs;
  std::vector<Fork> forks;
};

Classification classify(const SncGraph& g);

// Alternating-sign test on leading principal minors, integer Bareiss
// elimination, no rounding.  The empty subset is vacuously negative
// definite.
bool is_negative_definite(const SncGraph& g, const std::vector<int>& subset);

struct Bark {
  std::vector<int> support;       // vertex indices
  std::vector<Rat> coefficients;  // parallel to support
};

// Solves the chain's tridiagonal system exactly.  The chain must be
// rational and admissible (domain error otherwise); rods, maximal twigs
// and isolated vertices are all chains in this sense.
Bark bark_of_chain(const SncGraph& g, const std::vector<int>& chain);

// Sum of the three twig barks; supports are disjoint.
Bark bark_of_fork(const SncGraph& g, const Fork& fork);

// (K + F - B).F_1 at the center of a star; negative means fork.
Rat fork_center_excess(const SncGraph& g, int center,
                       const std::array<std::vector<int>, 3>& twigs);

// Sum over all rational admissible rods and maximal twigs; supports are
// pairwise disjoint and never contain a (-1)-vertex.
Bark bark_total(const SncGraph& g);

// Arithmetic genus of the reduced divisor the graph encodes:
// sum of genera + sum of edge multiplicities - #vertices + 1.
// Domain error when the graph is not connected.
Int pa_of_divisor(const SncGraph& g);

// (K + D - Bk(D)) . M for a class M given by rational coefficients over
// the graph's components; the almost-minimality screen for candidate
// curves inside the divisor's span.
Rat log_minus_bark_pairing(const SncGraph& g, const std::vector<Rat>& m_class);

struct ZariskiFujitaReport {
  bool negative_part_ok = false;        // N = 0, or N effective with negative definite support
  bool nef_on_components_partial = false;  // H.D_i >= 0, checked against D-components only
  bool orthogonality_ok = false;        // H.D_i = 0 on the support of N
};

// H and N are rational coefficient vectors over the graph's components
// with H + N pairing like K + D against every component (domain error
// otherwise, and on length mismatch).
ZariskiFujitaReport verify_zariski_fujita(const SncGraph& g, const std::vector<Rat>& h,
                                          const std::vector<Rat>& n);

nlohmann::ordered_json to_json(const SncGraph& g, const Classification& c, const Bark& total);

}  // namespace cusps
