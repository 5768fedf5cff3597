#include "cusps/snc.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace cusps {

namespace {

[[noreturn]] void bad_graph(const std::string& what) {
  throw std::invalid_argument("invalid dual graph: " + what);
}

int sign_of(const Int& v) { return sgn(v); }

}  // namespace

SncGraph::SncGraph(std::vector<SncVertex> vertices, std::vector<SncEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = size();
  std::set<std::pair<int, int>> seen;
  for (const auto& v : vertices_)
    if (v.genus < 0) bad_graph("negative genus");
  for (auto& ed : edges_) {
    if (ed.i < 0 || ed.i >= n || ed.j < 0 || ed.j >= n) bad_graph("edge endpoint out of range");
    if (ed.i == ed.j) bad_graph("self-loop");
    if (ed.multiplicity < 1) bad_graph("edge multiplicity must be >= 1");
    if (ed.i > ed.j) std::swap(ed.i, ed.j);
    if (!seen.insert({ed.i, ed.j}).second) bad_graph("duplicate edge");
  }
  adj_.assign(static_cast<size_t>(n), {});
  for (const auto& ed : edges_) {
    adj_[static_cast<size_t>(ed.i)].push_back({ed.j, ed.multiplicity});
    adj_[static_cast<size_t>(ed.j)].push_back({ed.i, ed.multiplicity});
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) {
    return x.first < y.first;
  });
}

bool SncGraph::connected() const {
  if (size() == 0) return true;
  std::vector<char> seen(static_cast<size_t>(size()), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& [w, mult] : adjacent(v))
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == size();
}

Int branching_number(const SncGraph& g, int i) {
  Int beta = 0;
  for (const auto& [w, mult] : g.adjacent(i)) beta += mult;
  return beta;
}

namespace {

// Multiplicity of the edge between u and v, 0 when absent.
Int edge_mult(const SncGraph& g, int u, int v) {
  for (const auto& [w, mult] : g.adjacent(u))
    if (w == v) return mult;
  return 0;
}

std::vector<int> component_of(const SncGraph& g, int start) {
  std::vector<char> seen(static_cast<size_t>(g.size()), 0);
  std::vector<int> comp;
  std::queue<int> q;
  q.push(start);
  seen[static_cast<size_t>(start)] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    comp.push_back(v);
    for (const auto& [w, mult] : g.adjacent(v))
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        q.push(w);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

bool rational_admissible(const SncGraph& g, const std::vector<int>& vs) {
  for (int v : vs)
    if (g.vertex(v).genus != 0 || g.vertex(v).self_intersection > -2) return false;
  return true;
}

}  // namespace

Classification classify(const SncGraph& g) {
  Classification out;
  const int n = g.size();
  std::vector<Int> beta(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) beta[static_cast<size_t>(i)] = branching_number(g, i);

  for (int i = 0; i < n; ++i) {
    if (beta[static_cast<size_t>(i)] == 0) {
      out.isolated.push_back(i);
      out.rods.push_back({{i}, -1});
    } else if (beta[static_cast<size_t>(i)] == 1) {
      out.tips.push_back(i);
    } else if (beta[static_cast<size_t>(i)] >= 3) {
      out.branching.push_back(i);
    }
  }

  // Grow a chain from every tip.  A beta-2 vertex entered along a simple
  // edge always has exactly one simple edge onward, so the walk is
  // deterministic; it ends at another tip (rod) or just before a
  // branching vertex (maximal twig).
  std::vector<char> used(static_cast<size_t>(n), 0);
  for (int tip : out.tips) {
    if (used[static_cast<size_t>(tip)]) continue;
    std::vector<int> chain{tip};
    used[static_cast<size_t>(tip)] = 1;
    int prev = -1, cur = tip;
    for (;;) {
      int next = -1;
      for (const auto& [w, mult] : g.adjacent(cur))
        if (w != prev && mult == 1) next = w;
      if (next == -1) break;  // double edge onward: impossible off a simple entry
      const Int& b = beta[static_cast<size_t>(next)];
      if (b >= 3) {
        out.maximal_twigs.push_back({chain, next});
        break;
      }
      chain.push_back(next);
      used[static_cast<size_t>(next)] = 1;
      if (b == 1) {
        out.rods.push_back({chain, -1});
        break;
      }
      prev = cur;
      cur = next;
    }
  }

  // Star components: a beta-3 center whose three attached maximal twigs,
  // all rational and admissible, exhaust the component.  The star is a
  // fork when the bark leaves the center's log degree negative.
  for (int c : out.branching) {
    if (beta[static_cast<size_t>(c)] != 3) continue;
    std::vector<const Chain*> attached;
    for (const auto& tw : out.maximal_twigs)
      if (tw.attached_to == c) attached.push_back(&tw);
    if (attached.size() != 3) continue;
    size_t star = 1;
    for (const auto* tw : attached) star += tw->vertices.size();
    if (component_of(g, c).size() != star) continue;
    bool ok = true;
    for (const auto* tw : attached) ok = ok && rational_admissible(g, tw->vertices);
    if (!ok) continue;

    std::array<std::vector<int>, 3> twigs{attached[0]->vertices, attached[1]->vertices,
                                          attached[2]->vertices};
    // Convention: twigs ordered by descending length, ties by vertex label.
    std::sort(twigs.begin(), twigs.end(), [](const auto& x, const auto& y) {
      if (x.size() != y.size()) return x.size() > y.size();
      return x < y;
    });
    if (fork_center_excess(g, c, twigs) >= 0) continue;

    Fork f;
    f.center = c;
    f.twigs = twigs;
    f.admissible = g.vertex(c).genus == 0 && g.vertex(c).self_intersection <= -2;
    std::vector<int> whole{c};
    for (const auto& tw : f.twigs) whole.insert(whole.end(), tw.begin(), tw.end());
    f.contractible = is_negative_definite(g, whole);
    out.forks.push_back(std::move(f));
  }
  return out;
}

bool is_negative_definite(const SncGraph& g, const std::vector<int>& subset) {
  const size_t n = subset.size();
  if (n == 0) return true;
  std::set<int> dedup(subset.begin(), subset.end());
  if (dedup.size() != n) bad_graph("negative definiteness: repeated vertex in subset");
  for (int v : subset)
    if (v < 0 || v >= g.size()) bad_graph("negative definiteness: vertex out of range");

  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, Int(0)));
  for (size_t i = 0; i < n; ++i) {
    a[i][i] = g.vertex(subset[i]).self_intersection;
    for (size_t j = i + 1; j < n; ++j) {
      a[i][j] = edge_mult(g, subset[i], subset[j]);
      a[j][i] = a[i][j];
    }
  }

  // Fraction-free elimination; after step k the pivot is the leading
  // principal minor of order k+1, whose sign must alternate starting
  // negative.
  Int prev = 1;
  for (size_t k = 0; k < n; ++k) {
    const int want = (k % 2 == 0) ? -1 : 1;
    if (sign_of(a[k][k]) != want) return false;
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return true;
}

Bark bark_of_chain(const SncGraph& g, const std::vector<int>& chain) {
  const size_t n = chain.size();
  if (n == 0) throw std::domain_error("bark: empty chain");
  std::set<int> dedup(chain.begin(), chain.end());
  if (dedup.size() != n) throw std::domain_error("bark: repeated vertex in chain");
  for (int v : chain) {
    if (v < 0 || v >= g.size()) throw std::domain_error("bark: vertex out of range");
    if (g.vertex(v).genus != 0) throw std::domain_error("bark: chain is not rational");
    if (g.vertex(v).self_intersection > -2) throw std::domain_error("bark: chain is not admissible");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const Int m = edge_mult(g, chain[i], chain[j]);
      if (j == i + 1 ? m != 1 : m != 0) throw std::domain_error("bark: not a linear chain");
    }

  std::vector<Rat> diag(n), rhs(n), coeff(n);
  for (size_t i = 0; i < n; ++i) {
    diag[i] = Rat(g.vertex(chain[i]).self_intersection);
    rhs[i] = Rat(Int(branching_number(g, chain[i]) - 2));
  }
  // N c = rhs with unit off-diagonal; forward eliminate, back substitute.
  for (size_t k = 1; k < n; ++k) {
    if (diag[k - 1] == 0) throw std::logic_error("bark: singular chain system");
    diag[k] -= 1 / diag[k - 1];
    rhs[k] -= rhs[k - 1] / diag[k - 1];
  }
  if (diag[n - 1] == 0) throw std::logic_error("bark: singular chain system");
  coeff[n - 1] = rhs[n - 1] / diag[n - 1];
  for (size_t k = n - 1; k-- > 0;) coeff[k] = (rhs[k] - coeff[k + 1]) / diag[k];

  Bark b;
  b.support = chain;
  b.coefficients = std::move(coeff);
  return b;
}

Rat fork_center_excess(const SncGraph& g, int center,
                       const std::array<std::vector<int>, 3>& twigs) {
  if (center < 0 || center >= g.size()) throw std::domain_error("fork: center out of range");
  Rat inside = 0;  // beta of the center within the star
  Rat bark_at_center = 0;
  for (const auto& tw : twigs) {
    if (tw.empty()) throw std::domain_error("fork: empty twig");
    const Bark b = bark_of_chain(g, tw);
    for (size_t i = 0; i < tw.size(); ++i) {
      const Int m = edge_mult(g, center, tw[i]);
      inside += Rat(m);
      bark_at_center += b.coefficients[i] * Rat(m);
    }
  }
  const Rat log_degree = Rat(Int(2 * g.vertex(center).genus - 2)) + inside;
  return log_degree - bark_at_center;
}

Bark bark_of_fork(const SncGraph& g, const Fork& fork) {
  Bark out;
  for (const auto& tw : fork.twigs) {
    if (tw.empty()) throw std::domain_error("fork: empty twig");
    Bark b = bark_of_chain(g, tw);
    out.support.insert(out.support.end(), b.support.begin(), b.support.end());
    out.coefficients.insert(out.coefficients.end(), b.coefficients.begin(), b.coefficients.end());
  }
  std::set<int> dedup(out.support.begin(), out.support.end());
  if (dedup.size() != out.support.size()) throw std::domain_error("fork: twigs overlap");
  return out;
}

Bark bark_total(const SncGraph& g) {
  const Classification c = classify(g);
  Bark out;
  auto absorb = [&](const std::vector<int>& piece) {
    if (!rational_admissible(g, piece)) return;
    Bark b = bark_of_chain(g, piece);
    out.support.insert(out.support.end(), b.support.begin(), b.support.end());
    out.coefficients.insert(out.coefficients.end(), b.coefficients.begin(), b.coefficients.end());
  };
  for (const auto& rod : c.rods) absorb(rod.vertices);
  for (const auto& tw : c.maximal_twigs) absorb(tw.vertices);
  return out;
}

Int pa_of_divisor(const SncGraph& g) {
  if (g.size() == 0) throw std::domain_error("arithmetic genus: empty graph");
  if (!g.connected()) throw std::domain_error("arithmetic genus: graph is not connected");
  Int pa = 1 - g.size();
  for (int i = 0; i < g.size(); ++i) pa += g.vertex(i).genus;
  for (const auto& ed : g.edges()) pa += ed.multiplicity;
  return pa;
}

namespace {

// Pairings of a rational combination of components against every component.
std::vector<Rat> pair_against_components(const SncGraph& g, const std::vector<Rat>& x) {
  const size_t n = static_cast<size_t>(g.size());
  std::vector<Rat> out(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    out[i] = x[i] * Rat(g.vertex(static_cast<int>(i)).self_intersection);
    for (const auto& [w, mult] : g.adjacent(static_cast<int>(i)))
      out[i] += x[static_cast<size_t>(w)] * Rat(mult);
  }
  return out;
}

}  // namespace

Rat log_minus_bark_pairing(const SncGraph& g, const std::vector<Rat>& m_class) {
  if (m_class.size() != static_cast<size_t>(g.size()))
    throw std::domain_error("class vector length does not match the graph");
  const Bark bk = bark_total(g);
  std::vector<Rat> bk_vec(static_cast<size_t>(g.size()), Rat(0));
  for (size_t i = 0; i < bk.support.size(); ++i)
    bk_vec[static_cast<size_t>(bk.support[i])] = bk.coefficients[i];
  const std::vector<Rat> bk_pair = pair_against_components(g, bk_vec);
  Rat out = 0;
  for (int i = 0; i < g.size(); ++i) {
    const Rat log_degree =
        Rat(Int(2 * g.vertex(i).genus - 2 + branching_number(g, i)));  // (K+D).D_i by adjunction
    out += m_class[static_cast<size_t>(i)] * (log_degree - bk_pair[static_cast<size_t>(i)]);
  }
  return out;
}

ZariskiFujitaReport verify_zariski_fujita(const SncGraph& g, const std::vector<Rat>& h,
                                          const std::vector<Rat>& n) {
  const size_t sz = static_cast<size_t>(g.size());
  if (h.size() != sz || n.size() != sz)
    throw std::domain_error("zariski-fujita: coefficient vector length does not match the graph");
  const std::vector<Rat> hd = pair_against_components(g, h);
  const std::vector<Rat> nd = pair_against_components(g, n);
  for (size_t i = 0; i < sz; ++i) {
    const Rat adj = Rat(Int(2 * g.vertex(static_cast<int>(i)).genus - 2 +
                            branching_number(g, static_cast<int>(i))));
    if (hd[i] + nd[i] != adj)
      throw std::domain_error("zariski-fujita: H + N does not pair like K + D against component " +
                              std::to_string(i));
  }

  ZariskiFujitaReport rep;
  std::vector<int> supp;
  bool effective = true;
  for (size_t i = 0; i < sz; ++i) {
    if (n[i] < 0) effective = false;
    if (n[i] != 0) supp.push_back(static_cast<int>(i));
  }
  rep.negative_part_ok = supp.empty() || (effective && is_negative_definite(g, supp));
  rep.nef_on_components_partial = true;
  for (size_t i = 0; i < sz; ++i)
    if (hd[i] < 0) rep.nef_on_components_partial = false;
  rep.orthogonality_ok = true;
  for (int i : supp)
    if (hd[static_cast<size_t>(i)] != 0) rep.orthogonality_ok = false;
  return rep;
}

nlohmann::ordered_json SncGraph::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema"] = "snc-graph/1";
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : vertices_) {
    nlohmann::ordered_json jv;
    jv["label"] = v.label;
    jv["self_intersection"] = to_int64(v.self_intersection, "self-intersection");
    jv["genus"] = to_int64(v.genus, "genus");
    doc["vertices"].push_back(std::move(jv));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& ed : edges_) {
    nlohmann::ordered_json je;
    je["i"] = ed.i;
    je["j"] = ed.j;
    je["multiplicity"] = to_int64(ed.multiplicity, "edge multiplicity");
    doc["edges"].push_back(std::move(je));
  }
  return doc;
}

SncGraph SncGraph::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    bad_graph("document needs vertices and edges");
  if (doc.contains("schema") && doc["schema"] != "snc-graph/1")
    bad_graph("unsupported schema " + doc["schema"].dump());
  std::vector<SncVertex> vs;
  for (const auto& jv : doc["vertices"]) {
    SncVertex v;
    v.label = jv.value("label", std::string());
    v.self_intersection = make_int(jv.at("self_intersection").get<long long>());
    v.genus = make_int(jv.value("genus", 0LL));
    vs.push_back(std::move(v));
  }
  std::vector<SncEdge> es;
  for (const auto& je : doc["edges"]) {
    SncEdge ed;
    ed.i = je.at("i").get<int>();
    ed.j = je.at("j").get<int>();
    ed.multiplicity = make_int(je.value("multiplicity", 1LL));
    es.push_back(ed);
  }
  return SncGraph(std::move(vs), std::move(es));
}

nlohmann::ordered_json to_json(const SncGraph& g, const Classification& c, const Bark& total) {
  nlohmann::ordered_json doc;
  doc["schema"] = "snc-classification/1";
  doc["isolated"] = c.isolated;
  doc["tips"] = c.tips;
  doc["branching"] = c.branching;
  auto chain_list = [](const std::vector<Chain>& chains, bool twig) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& ch : chains) {
      nlohmann::ordered_json jc;
      jc["vertices"] = ch.vertices;
      if (twig) jc["attached_to"] = ch.attached_to;
      arr.push_back(std::move(jc));
    }
    return arr;
  };
  doc["rods"] = chain_list(c.rods, false);
  doc["maximal_twigs"] = chain_list(c.maximal_twigs, true);
  doc["forks"] = nlohmann::ordered_json::array();
  for (const auto& f : c.forks) {
    nlohmann::ordered_json jf;
    jf["center"] = f.center;
    jf["twigs"] = {f.twigs[0], f.twigs[1], f.twigs[2]};
    jf["admissible"] = f.admissible;
    jf["contractible"] = f.contractible;
    doc["forks"].push_back(std::move(jf));
  }
  nlohmann::ordered_json jb;
  jb["support"] = total.support;
  jb["coefficients"] = nlohmann::ordered_json::array();
  for (const auto& q : total.coefficients) jb["coefficients"].push_back(to_string(q));
  doc["bark_total"] = std::move(jb);
  doc["labels"] = nlohmann::ordered_json::array();
  for (int i = 0; i < g.size(); ++i) doc["labels"].push_back(g.vertex(i).label);
  return doc;
}

}  // namespace cusps
