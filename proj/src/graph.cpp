#include "btq/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "btq/parallel.hpp"

#include "json.hpp"

namespace btq {

namespace {

int kind_rank(EdgeKind k) {
  switch (k) {
    case EdgeKind::Line: return 0;
    case EdgeKind::Extra: return 1;
    case EdgeKind::Loop: return 2;
  }
  return 3;
}

bool edge_less(const MultiEdge& a, const MultiEdge& b) {
  if (a.i != b.i) return a.i < b.i;
  if (a.j != b.j) return a.j < b.j;
  return kind_rank(a.kind) < kind_rank(b.kind);
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

const char* kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Line: return "line";
    case EdgeKind::Extra: return "extra";
    case EdgeKind::Loop: return "loop";
  }
  return "?";
}

EdgeKind kind_from_name(const std::string& s) {
  if (s == "line") return EdgeKind::Line;
  if (s == "extra") return EdgeKind::Extra;
  if (s == "loop") return EdgeKind::Loop;
  throw std::invalid_argument("unknown edge kind: " + s);
}

// Per-vertex multiplicity maps target class -> number of orbits.
using MultMap = std::map<int, long long>;

std::vector<MultMap> brute_multiplicities(int p, int d, int window,
                                          long long budget, int threads) {
  Place P = Place::finite(enumerate_monic_irreducibles(p, d).front());
  long long q = 1;
  for (int k = 0; k < d; ++k) q *= p;
  if (q > budget) throw BudgetExceeded("build_cgraph: p^d exceeds budget");
  std::vector<MultMap> mult(window);
  parallel_for(window, threads, [&](long long v) {
    OrbitDecomposition dec = orbit_decomposition(static_cast<int>(v), P, budget);
    for (const Orbit& o : dec.orbits) mult[v][o.gap] += 1;
  });
  return mult;
}

std::vector<MultMap> closed_form_multiplicities(int p, int d, int window) {
  NMatrix nd = nd_recurrence(p, d, window);
  std::vector<MultMap> mult(window);
  for (int v = 0; v < window; ++v) {
    int up = v + d;
    int down = std::abs(v - d);
    int r = split_order_type(v, d).r;
    for (int j = 0; j < window; ++j) {
      if (std::abs(v - j) > d || (v + j + d) % 2 != 0) continue;
      long long n = static_cast<long long>(nd.at(v, j));
      long long m;
      if (v == 0) {
        // Vertex of type I: the full Moebius action (case C). For even d the
        // quadratic-point orbit lands on the vertex itself, so the loop uses
        // the exceptional column.
        if (j == up) m = multiplicity_closed_form(MultCase::C2, MultTarget::BPlusP, n, p, r);
        else if (j == 0) m = multiplicity_closed_form(MultCase::C2, MultTarget::Exceptional, n, p, r);
        else m = multiplicity_closed_form(MultCase::C2, MultTarget::Other, n, p, r);
      } else {
        // Case A; the class below is exceptional (it receives the whole
        // residue subspace as one orbit), and at v = d/2 it is the vertex
        // itself, closing the folded line into a loop.
        if (j == up) m = multiplicity_closed_form(MultCase::A, MultTarget::BPlusP, n, p, r);
        else if (j == down) m = multiplicity_closed_form(MultCase::A, MultTarget::Exceptional, n, p, r);
        else m = multiplicity_closed_form(MultCase::A, MultTarget::Other, n, p, r);
      }
      if (m < 0) throw std::logic_error("closed-form multiplicity went negative");
      if (m > 0) mult[v][j] = m;
    }
  }
  return mult;
}

}  // namespace

const MultiEdge* QuotientGraph::find_edge(int i, int j, EdgeKind kind) const {
  if (i > j) std::swap(i, j);
  for (const MultiEdge& e : edges)
    if (e.i == i && e.j == j && e.kind == kind) return &e;
  return nullptr;
}

long long QuotientGraph::multiplicity_between(int i, int j) const {
  if (i > j) std::swap(i, j);
  long long m = 0;
  for (const MultiEdge& e : edges)
    if (e.i == i && e.j == j) m += e.m;
  return m;
}

long long QuotientGraph::vertex_degree(int v) const {
  long long s = 0;
  for (const MultiEdge& e : edges) {
    if (e.i == v && e.j == v) s += e.m;  // orbit-end counting
    else if (e.i == v || e.j == v) s += e.m;
  }
  return s;
}

int QuotientGraph::component_count() const {
  if (vertices.empty()) return 0;
  Dsu dsu(static_cast<int>(vertices.size()));
  std::map<std::pair<int, int>, int> pos;  // (index, side) -> position
  for (size_t k = 0; k < vertices.size(); ++k)
    pos[{vertices[k].index, vertices[k].side}] = static_cast<int>(k);
  for (const MultiEdge& e : edges) {
    if (!sgraph) {
      dsu.unite(pos.at({e.i, 0}), pos.at({e.j, 0}));
    } else {
      // S-graph edges are stored on encoded ids 2*class + side.
      dsu.unite(pos.at({e.i / 2, e.i % 2}), pos.at({e.j / 2, e.j % 2}));
    }
  }
  std::set<int> roots;
  for (size_t k = 0; k < vertices.size(); ++k) roots.insert(dsu.find(static_cast<int>(k)));
  return static_cast<int>(roots.size());
}

bool QuotientGraph::operator==(const QuotientGraph& o) const {
  return p == o.p && d == o.d && window == o.window && sgraph == o.sgraph &&
         vertices == o.vertices && edges == o.edges;
}

std::vector<MultiEdge> line_skeleton(int p, int d, int window) {
  if (window < d + 1) throw std::invalid_argument("line_skeleton: window must be >= d+1");
  if (!is_prime(p)) throw std::invalid_argument("line_skeleton: p must be prime");
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < window; ++i) {
    if (i + d < window) pairs.insert({i, i + d});
    int down = std::abs(i - d);
    pairs.insert({std::min(i, down), std::max(i, down)});
  }
  std::vector<MultiEdge> edges;
  for (const auto& [i, j] : pairs)
    edges.push_back(MultiEdge{i, j, 1, i == j ? EdgeKind::Loop : EdgeKind::Line});
  std::sort(edges.begin(), edges.end(), edge_less);
  return edges;
}

bool order_is_ramified(int class_index, int d) {
  (void)d;
  // 0 ~ 2B requires 2*index = 0 in the divisor class group Z, so only the
  // principal class satisfies it, and that one is exempt.
  bool two_b_principal = (2 * class_index == 0);
  bool b_principal = (class_index == 0);
  return two_b_principal && !b_principal;
}

QuotientGraph build_cgraph(int p, int d, int window, BuildMethod method,
                           long long budget, int threads) {
  if (window < d + 1) throw std::invalid_argument("build_cgraph: window must be >= d+1");
  std::vector<MultMap> mult = method == BuildMethod::BruteForce
                                  ? brute_multiplicities(p, d, window, budget, threads)
                                  : closed_form_multiplicities(p, d, window);

  // Edge multiplicities must agree from both endpoints.
  for (int i = 0; i < window; ++i)
    for (int j = i + 1; j < window; ++j) {
      long long mij = mult[i].count(j) ? mult[i].at(j) : 0;
      long long mji = mult[j].count(i) ? mult[j].at(i) : 0;
      if (mij != mji)
        throw std::logic_error("build_cgraph: side symmetry violated between " +
                               std::to_string(i) + " and " + std::to_string(j));
    }

  std::set<std::pair<int, int>> skeleton;
  for (const MultiEdge& e : line_skeleton(p, d, window)) skeleton.insert({e.i, e.j});

  QuotientGraph g;
  g.p = p;
  g.d = d;
  g.window = window;
  for (int v = 0; v < window; ++v) {
    VertexClass vc;
    vc.index = v;
    vc.type = split_order_type(v, d);
    vc.component = (d % 2 == 0) ? v % 2 : 0;
    vc.complete = v + d < window;
    if (method == BuildMethod::BruteForce) {
      long long orbits = 0;
      for (const auto& [j, m] : mult[v]) orbits += m;
      vc.valency = orbits;
    } else {
      // The true valency; near the window edge some of its edges point at
      // classes outside the window.
      vc.valency = valency_closed_form(vc.type, p, d);
    }
    g.vertices.push_back(vc);
  }
  for (int v = 0; v < window; ++v) {
    for (const auto& [j, m] : mult[v]) {
      if (j < v || j >= window) continue;
      if (j == v) {
        g.edges.push_back(MultiEdge{v, v, m, EdgeKind::Loop});
      } else if (skeleton.count({v, j})) {
        g.edges.push_back(MultiEdge{v, j, 1, EdgeKind::Line});
        if (m > 1) g.edges.push_back(MultiEdge{v, j, m - 1, EdgeKind::Extra});
      } else {
        g.edges.push_back(MultiEdge{v, j, m, EdgeKind::Extra});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), edge_less);
  return g;
}

QuotientGraph derive_sgraph(const QuotientGraph& g) {
  if (g.sgraph) throw std::invalid_argument("derive_sgraph: already an S-graph");
  if (g.d % 2 == 1) return g;
  QuotientGraph s;
  s.p = g.p;
  s.d = g.d;
  s.window = g.window;
  s.sgraph = true;
  for (const VertexClass& v : g.vertices)
    for (int side = 0; side < 2; ++side) {
      VertexClass w = v;
      w.side = side;
      s.vertices.push_back(w);
    }
  auto id = [](int index, int side) { return 2 * index + side; };
  for (const MultiEdge& e : g.edges) {
    if (e.i == e.j) {
      // Both side-crossing lifts of a loop join the same pair of vertices.
      s.edges.push_back(MultiEdge{id(e.i, 0), id(e.i, 1), 2 * e.m, e.kind});
    } else {
      s.edges.push_back(MultiEdge{id(e.i, 0), id(e.j, 1), e.m, e.kind});
      s.edges.push_back(MultiEdge{id(e.i, 1), id(e.j, 0), e.m, e.kind});
    }
  }
  for (MultiEdge& e : s.edges)
    if (e.i > e.j) std::swap(e.i, e.j);
  std::sort(s.edges.begin(), s.edges.end(), edge_less);
  return s;
}

std::string emit_dot(const QuotientGraph& g) {
  std::ostringstream os;
  auto name = [&](int encoded) {
    if (!g.sgraph) return "D_" + std::to_string(encoded);
    return "D_" + std::to_string(encoded / 2) + (encoded % 2 == 0 ? "a" : "b");
  };
  auto vertex_id = [&](const VertexClass& v) {
    return g.sgraph ? 2 * v.index + v.side : v.index;
  };
  os << "graph " << (g.sgraph ? "sgraph" : "cgraph") << "_p" << g.p << "_d" << g.d
     << "_w" << g.window << " {\n";
  std::set<int> components;
  for (const VertexClass& v : g.vertices) components.insert(v.component);
  for (int comp : components) {
    os << "  subgraph cluster_" << comp << " {\n";
    os << "    label=\"component " << comp << "\";\n";
    for (const VertexClass& v : g.vertices) {
      if (v.component != comp) continue;
      os << "    " << name(vertex_id(v));
      if (!v.complete) os << " [style=dashed]";
      os << ";\n";
    }
    for (const MultiEdge& e : g.edges) {
      int ci = g.sgraph ? e.i / 2 % 2 : e.i % 2;
      int comp_of_edge = (g.d % 2 == 0) ? ci : 0;
      if (comp_of_edge != comp) continue;
      os << "    " << name(e.i) << " -- " << name(e.j) << " [label=\"" << e.m
         << "\"];\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string emit_json(const QuotientGraph& g) {
  nlohmann::json j;
  j["p"] = g.p;
  j["d"] = g.d;
  j["window"] = g.window;
  if (g.sgraph) j["sgraph"] = true;
  nlohmann::json vs = nlohmann::json::array();
  for (const VertexClass& v : g.vertices) {
    nlohmann::json jv;
    jv["i"] = v.index;
    jv["type"] = order_type_name(v.type.tag);
    jv["r"] = v.type.r;
    jv["valency"] = v.valency;
    jv["component"] = v.component;
    jv["complete"] = v.complete;
    if (g.sgraph) jv["side"] = v.side;
    vs.push_back(std::move(jv));
  }
  j["vertices"] = std::move(vs);
  nlohmann::json es = nlohmann::json::array();
  for (const MultiEdge& e : g.edges) {
    nlohmann::json je;
    je["i"] = e.i;
    je["j"] = e.j;
    je["m"] = e.m;
    je["kind"] = kind_name(e.kind);
    es.push_back(std::move(je));
  }
  j["edges"] = std::move(es);
  return j.dump(2);
}

QuotientGraph parse_graph_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  QuotientGraph g;
  g.p = j.at("p").get<int>();
  g.d = j.at("d").get<int>();
  g.window = j.at("window").get<int>();
  g.sgraph = j.value("sgraph", false);
  for (const auto& jv : j.at("vertices")) {
    VertexClass v;
    v.index = jv.at("i").get<int>();
    std::string t = jv.at("type").get<std::string>();
    v.type.tag = t == "I" ? OrderTypeTag::I
                : t == "II" ? OrderTypeTag::II
                : t == "III" ? OrderTypeTag::III
                             : OrderTypeTag::IV;
    v.type.r = jv.at("r").get<int>();
    v.valency = jv.at("valency").get<long long>();
    v.component = jv.at("component").get<int>();
    v.complete = jv.at("complete").get<bool>();
    v.side = jv.value("side", 0);
    g.vertices.push_back(v);
  }
  for (const auto& je : j.at("edges")) {
    MultiEdge e{je.at("i").get<int>(), je.at("j").get<int>(),
                je.at("m").get<long long>(), kind_from_name(je.at("kind").get<std::string>())};
    g.edges.push_back(e);
  }
  std::sort(g.edges.begin(), g.edges.end(), edge_less);
  return g;
}

AuditReport audit_graph(const QuotientGraph& g, long long budget, int threads) {
  AuditReport rep;
  auto fail = [&](const std::string& msg) {
    rep.pass = false;
    rep.failures.push_back(msg);
  };
  if (g.sgraph) {
    fail("audit supports C-graphs only");
    return rep;
  }

  // Valency audit: complete vertices carry their full edge set.
  for (const VertexClass& v : g.vertices) {
    if (!v.complete) continue;
    long long expect = valency_closed_form(v.type, g.p, g.d);
    long long got = g.vertex_degree(v.index);
    if (got != expect)
      fail("valency of vertex " + std::to_string(v.index) + " is " +
           std::to_string(got) + ", closed form gives " + std::to_string(expect));
    if (v.valency != expect)
      fail("stored valency of vertex " + std::to_string(v.index) + " is wrong");
  }

  // Neighbor-count consistency with the recurrence matrix.
  NMatrix nd = nd_recurrence(g.p, g.d, g.window);
  Place P = Place::finite(enumerate_monic_irreducibles(g.p, g.d).front());
  std::vector<OrbitDecomposition> decs(g.window);
  parallel_for(g.window, threads, [&](long long v) {
    decs[v] = orbit_decomposition(static_cast<int>(v), P, budget);
  });
  for (int v = 0; v < g.window; ++v) {
    long long pts = decs[v].total_points();
    if (pts != nd.points())
      fail("orbit sizes at vertex " + std::to_string(v) + " do not cover the line");
    for (int j = 0; j < g.window; ++j) {
      long long n_here = decs[v].neighbors_with_gap(j);
      if (BigInt(n_here) != nd.at(v, j))
        fail("neighbor count (" + std::to_string(v) + "," + std::to_string(j) +
             ") disagrees with the recurrence");
      long long m_here = decs[v].multiplicity(j);
      long long m_graph = g.multiplicity_between(v, j);
      if (j <= v + g.d && j < g.window && m_here != m_graph)
        fail("multiplicity (" + std::to_string(v) + "," + std::to_string(j) +
             ") disagrees with the stored graph");
    }
  }

  // Component structure.
  int comps = g.component_count();
  if (g.d % 2 == 1) {
    if (comps != 1) fail("odd degree graph is not connected in the window");
    for (const MultiEdge& e : g.edges)
      if ((e.i + e.j) % 2 == 0) fail("odd degree graph has an even edge (not bipartite)");
  } else if (comps != 2) {
    fail("even degree graph does not have exactly two components");
  }
  return rep;
}

}  // namespace btq
