#pragma once

#include <array>

#include "btq/arith.hpp"

// Rank-2 vector bundles on P^1 as polynomial lattices with an infinity
// twist. A LatticePair holds a basis of the finite part (columns of a 2x2
// matrix over F_p[t]) together with the twist i: a vector (f, g) is a global
// section of the bundle iff w(f, g) = max(deg f, deg g - i) <= 0, so the
// second coordinate is twisted by O(i * infinity).
//
// Splitting types are computed by shifted column reduction (weak-Popov
// style): at a reduced basis the two column weights are the successive
// minima -b <= -a of w, and the bundle is O(a) + O(b). The gap b - a indexes
// the isomorphism class of the corresponding split order, since the classes
// of O + O(m) and O + O(-m) coincide.
//
// Coordinate convention: for a neighbor at a finite place, the line [0:1]
// is the distinguished one whose gap is i + deg P (the singleton orbit of
// the global unit action), and [1:0] heads down to gap |i - deg P|. Some
// texts attach these roles to the swapped affine coordinate; counts are
// unaffected.

namespace btq {

struct LatticePair {
  // gen[row][col]; columns generate the finite part over F_p[t].
  std::array<std::array<Poly, 2>, 2> gen;
  int twist;

  int p() const { return gen[0][0].p(); }
  Poly det() const { return gen[0][0] * gen[1][1] - gen[0][1] * gen[1][0]; }
  bool is_standard() const;
};

struct SplittingType {
  int a, b;  // a <= b
  int gap() const { return b - a; }
  bool operator==(const SplittingType& o) const { return a == o.a && b == o.b; }
};

// max(deg f, deg g - twist); the ultrametric weight of a lattice vector.
int weight(const Poly& f, const Poly& g, int twist);

// O + O(i): identity generators, twist i.
LatticePair standard_bundle(int p, int i);

// The index-p^d sublattice of vectors whose residue at P lies on the line l.
// E must be standard; P must be finite.
LatticePair neighbor_lattice(const LatticePair& E, const Place& P, const ProjPoint& l);

// Splitting type (a, b) with a + b = twist - deg det; checked internally.
SplittingType splitting_type(const LatticePair& E);

// gap of splitting_type(neighbor_lattice(standard_bundle(i), P, l)).
// Satisfies gap == i + deg P (mod 2) and |gap - i| <= deg P.
int neighbor_gap(int i, const Place& P, const ProjPoint& l);

}  // namespace btq
