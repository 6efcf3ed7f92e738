#pragma once

#include <string>
#include <vector>

#include "btq/nmatrix.hpp"
#include "btq/orbits.hpp"

// Assembly of the quotient graph of split maximal orders at a place of
// degree d on P^1, over a vertex window [0, window). Vertices are
// isomorphism classes indexed by the splitting gap; edges carry
// multiplicities. The line skeleton comes from the apartments through split
// orders (half-lines folded at 0, and at d/2 for even d, where the fold
// closes into a loop). Loop multiplicity is the number of stabilizer orbits
// of self-isomorphic neighbors (orbit-ends), which is the quantity the
// valency formulas count.
//
// Vertices within d of the window edge are flagged incomplete: their edges
// toward classes >= window are not represented.

namespace btq {

enum class EdgeKind { Line, Extra, Loop };

struct MultiEdge {
  int i, j;  // i <= j
  long long m;
  EdgeKind kind;
  bool operator==(const MultiEdge& o) const {
    return i == o.i && j == o.j && m == o.m && kind == o.kind;
  }
};

struct VertexClass {
  int index;
  OrderType type;
  int component;  // parity class for even d, 0 for odd d
  long long valency;
  bool complete;
  int side = 0;  // used by S-graphs of even degree only
  bool operator==(const VertexClass& o) const {
    return index == o.index && type.tag == o.type.tag && type.r == o.type.r &&
           component == o.component && valency == o.valency &&
           complete == o.complete && side == o.side;
  }
};

struct QuotientGraph {
  int p = 0, d = 0, window = 0;
  bool sgraph = false;
  std::vector<VertexClass> vertices;  // ascending (index, side)
  std::vector<MultiEdge> edges;       // canonical order

  const MultiEdge* find_edge(int i, int j, EdgeKind kind) const;
  long long multiplicity_between(int i, int j) const;  // summed over kinds
  long long vertex_degree(int v) const;  // loops counted by their m
  int component_count() const;

  bool operator==(const QuotientGraph& o) const;
};

// Undirected skeleton pairs {i, i+d} and {i, |i-d|} inside the window, each
// of multiplicity 1; the fold at d/2 (even d) appears as a loop.
std::vector<MultiEdge> line_skeleton(int p, int d, int window);

enum class BuildMethod { BruteForce, ClosedForm };

QuotientGraph build_cgraph(int p, int d, int window,
                           BuildMethod method = BuildMethod::BruteForce,
                           long long budget = kDefaultBudget, int threads = 1);

// A split order of divisor class index i is ramified for the C/S covering
// only when 0 ~ 2B but not B; on P^1 the divisor class group is torsion
// free, so this never happens and the covering group acts freely.
bool order_is_ramified(int class_index, int d);

// d odd: the graph itself. d even: the free parity double cover; every edge
// lifts to its two side-crossing copies, so loops become edges joining the
// two sides of their vertex.
QuotientGraph derive_sgraph(const QuotientGraph& g);

std::string emit_dot(const QuotientGraph& g);
std::string emit_json(const QuotientGraph& g);
QuotientGraph parse_graph_json(const std::string& text);

struct AuditReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// Valency audit against the closed forms, per-target agreement with N_d,
// component/bipartiteness structure.
AuditReport audit_graph(const QuotientGraph& g, long long budget = kDefaultBudget,
                        int threads = 1);

}  // namespace btq
