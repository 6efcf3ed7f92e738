#pragma once

#include <array>
#include <vector>

#include "btq/arith.hpp"
#include "btq/nmatrix.hpp"

// Global-unit stabilizers of split orders on P^1, as explicit transformation
// groups on P^1(F_{p^d}), with orbit counts three ways: direct enumeration,
// the closed valency formulas, and the Burnside average over the Jordan-form
// census.
//
// For class index 0 the stabilizer acts as all of PGL_2(F_p). For index
// i >= 1 the global units are the lower-triangular matrices (a 0; c d) with
// a, d in F_p^* and c a polynomial of degree <= i, acting on a line [x:y]
// through the residue of c; the translation part ranges over the subspace
// W_i spanned by the residues of 1, t, ..., t^{min(i, d-1)}, of dimension
// r = min(i+1, d).

namespace btq {

enum class OrderTypeTag { I, II, III, IV };

struct OrderType {
  OrderTypeTag tag;
  int r = 0;  // dimension of the radical image (types II/III)
};

// Split orders on P^1: type I at index 0, type III with r = min(i+1, d)
// otherwise.
OrderType split_order_type(int class_index, int d);

const char* order_type_name(OrderTypeTag t);

struct StabilizerGroup {
  enum class Kind { FullMoebius, AffineShift };
  Kind kind;
  int p, d, r;

  long long order() const;  // p(p^2-1), or (p-1) p^r

  // 2x2 matrices (entries row-major: a, b, c, d) over the residue field;
  // closure under the induced action generates the whole group.
  std::vector<std::array<Poly, 4>> generators(const ExtField& F) const;
};

StabilizerGroup stabilizer(int class_index, int p, int d);

ProjPoint apply_matrix(const ExtField& F, const std::array<Poly, 4>& m,
                       const ProjPoint& pt);

struct Orbit {
  std::vector<int> points;  // ascending indices into enumerate_proj_line
  long long size() const { return static_cast<long long>(points.size()); }
  int representative() const { return points.front(); }
  int gap;  // class index of the corresponding neighbor; constant on the orbit
};

struct OrbitDecomposition {
  int class_index;
  int p, d;
  std::vector<Orbit> orbits;  // ordered by representative

  long long total_points() const;
  long long orbit_count() const { return static_cast<long long>(orbits.size()); }
  // Sum of orbit sizes with the given gap (equals N_d(class_index, gap)).
  long long neighbors_with_gap(int gap) const;
  // Number of orbits with the given gap (the edge multiplicity toward it).
  long long multiplicity(int gap) const;
};

OrbitDecomposition orbit_decomposition(int class_index, const Place& P,
                                       long long budget = kDefaultBudget);

// Valency closed forms. epsilon is 1 for even N, 0 for odd N.
//   I:   1 + (p^{N-1}-1)/(p^2-1) + p*eps/(p+1)
//   II:  p^{N-r} + 1
//   III: 2 + (p^{N-r}-1)/(p-1)
//   IV:  (p^N + 2p*eps + 1)/(p+1)
// Throws std::domain_error when the expression is not an integer.
long long valency_closed_form(OrderType t, int p, int N);

// Element census of the stabilizer by Jordan form, in the column order:
// one repeated eigenvalue non-diagonalizable, central, two distinct
// eigenvalues, no eigenvalues over F_p.
std::array<long long, 4> conjugacy_census(OrderType t, int p);
std::array<long long, 4> fixed_point_counts(int p, int N);
long long census_group_order(OrderType t, int p);

// Orbit count as the Burnside average of fixed points over the census;
// must equal valency_closed_form.
long long burnside_valency(OrderType t, int p, int N);

// Multiplicity of edges as a function of the neighbor count N, by case of
// the vertex and by target kind.
enum class MultCase { A, B1, B2, B3, B4, B5, B6, B7, C1, C2, C3 };
enum class MultTarget { BPlusP, Exceptional, Other };

long long multiplicity_closed_form(MultCase c, MultTarget target,
                                   long long ncount, int p, int r);

}  // namespace btq
