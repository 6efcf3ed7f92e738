#include <random>

#include "doctest.h"

#include "btq/bundles.hpp"

using namespace btq;

namespace {

// Minimum weight over all nonzero lattice vectors c0*col0 + c1*col1 with
// coefficient degrees <= bound; the independent check on the reduction.
int exhaustive_first_minimum(const LatticePair& E, int bound) {
  int p = E.p();
  long long total = 1;
  for (int k = 0; k < 2 * (bound + 1); ++k) total *= p;
  int best = 1 << 20;
  for (long long v = 1; v < total; ++v) {
    long long x = v;
    std::vector<int> c0(bound + 1), c1(bound + 1);
    for (int k = 0; k <= bound; ++k) {
      c0[k] = static_cast<int>(x % p);
      x /= p;
    }
    for (int k = 0; k <= bound; ++k) {
      c1[k] = static_cast<int>(x % p);
      x /= p;
    }
    Poly a(p, c0), b(p, c1);
    Poly f = a * E.gen[0][0] + b * E.gen[0][1];
    Poly g = a * E.gen[1][0] + b * E.gen[1][1];
    if (f.is_zero() && g.is_zero()) continue;
    best = std::min(best, weight(f, g, E.twist));
  }
  return best;
}

Poly random_poly(std::mt19937& rng, int p, int maxdeg) {
  std::uniform_int_distribution<int> cdist(0, p - 1), ddist(0, maxdeg);
  std::vector<int> c(ddist(rng) + 1);
  for (int& x : c) x = cdist(rng);
  return Poly(p, c);
}

}  // namespace

TEST_CASE("standard bundles split as (0, i)") {
  for (int i : {0, 1, 3, 5}) {
    LatticePair E = standard_bundle(2, i);
    SplittingType st = splitting_type(E);
    CHECK(st.a == 0);
    CHECK(st.b == i);
    CHECK(st.gap() == i);
  }
  CHECK_THROWS_AS(standard_bundle(2, -1), std::invalid_argument);
}

TEST_CASE("neighbor lattice construction") {
  Place P = Place::finite(Poly::t(2));
  ExtField F(PrimeField(2), Poly::t(2));
  LatticePair E = standard_bundle(2, 1);

  ProjPoint zero_line = make_proj_point(F, F.zero(), F.one());   // [0:1]
  LatticePair N = neighbor_lattice(E, P, zero_line);
  CHECK(N.gen[0][0] == Poly::zero(2));
  CHECK(N.gen[1][0] == Poly::one(2));
  CHECK(N.gen[0][1] == Poly::t(2));
  CHECK(N.gen[1][1] == Poly::zero(2));
  CHECK(N.det().degree() == E.det().degree() + P.degree());

  ProjPoint inf_line = make_proj_point(F, F.one(), F.zero());    // [1:0]
  LatticePair M = neighbor_lattice(standard_bundle(2, 0), P, inf_line);
  CHECK(M.gen[0][0] == Poly::one(2));
  CHECK(M.gen[1][1] == Poly::t(2));

  CHECK_THROWS_AS(neighbor_lattice(E, Place::infinity(2), zero_line), std::invalid_argument);
  CHECK_THROWS_AS(neighbor_lattice(N, P, zero_line), std::invalid_argument);
}

TEST_CASE("splitting fixtures at the degree-1 place over F2") {
  Place P = Place::finite(Poly::t(2));
  ExtField F(PrimeField(2), Poly::t(2));
  ProjPoint zero_line = make_proj_point(F, F.zero(), F.one());
  ProjPoint one_line = make_proj_point(F, F.one(), F.one());
  ProjPoint inf_line = make_proj_point(F, F.one(), F.zero());

  LatticePair E1 = standard_bundle(2, 1);
  CHECK(splitting_type(neighbor_lattice(E1, P, zero_line)) == SplittingType{-1, 1});
  CHECK(splitting_type(neighbor_lattice(E1, P, one_line)) == SplittingType{0, 0});

  CHECK(neighbor_gap(1, P, zero_line) == 2);
  CHECK(neighbor_gap(1, P, one_line) == 0);
  CHECK(neighbor_gap(1, P, inf_line) == 0);
}

TEST_CASE("constant-vector test at the trivial bundle, degree 2") {
  // A neighbor of the trivial bundle keeps a weight-0 vector iff the line is
  // rational over the base field.
  for (int p : {2, 3}) {
    Place P = Place::finite(enumerate_monic_irreducibles(p, 2).front());
    ExtField F(PrimeField(p), P.poly());
    long long nonrational_gap0 = 0;
    for (const ProjPoint& l : enumerate_proj_line(F)) {
      bool rational = l.y.is_zero() || l.x.degree() < 1;
      int gap = neighbor_gap(0, P, l);
      if (rational) CHECK(gap == 2);
      else if (gap == 0) ++nonrational_gap0;
    }
    CHECK(nonrational_gap0 == static_cast<long long>(p) * p - p);  // p(p-1) lines
  }
}

TEST_CASE("high twist, degree-4 place: every affine line has gap 3") {
  // For class 7 the vector (0, pi) of weight 4 - 7 = -3 lies in every
  // neighbor through an affine line, and the second minimum is 0.
  Place P = Place::finite(enumerate_monic_irreducibles(2, 4).front());
  ExtField F(PrimeField(2), P.poly());
  LatticePair E = standard_bundle(2, 7);
  for (const ProjPoint& l : enumerate_proj_line(F)) {
    SplittingType st = splitting_type(neighbor_lattice(E, P, l));
    if (l.y.is_zero() || !l.x.is_zero()) {
      CHECK(st == SplittingType{0, 3});
      CHECK(st.gap() == 3);
    } else {
      CHECK(st.gap() == 11);  // the distinguished line [0:1]
    }
  }
}

TEST_CASE("zero determinant is rejected") {
  LatticePair E = standard_bundle(2, 0);
  E.gen[0][0] = Poly::zero(2);
  E.gen[1][1] = Poly::zero(2);
  E.gen[0][1] = Poly::t(2);
  E.gen[1][0] = Poly::zero(2);
  CHECK_THROWS_AS(splitting_type(E), std::invalid_argument);
}

TEST_CASE("parity and band of neighbor gaps") {
  for (int p : {2, 3}) {
    for (int d = 1; d <= (p == 2 ? 4 : 3); ++d) {
      Place P = Place::finite(enumerate_monic_irreducibles(p, d).front());
      ExtField F(PrimeField(p), P.poly());
      auto lines = enumerate_proj_line(F);
      for (int i = 0; i <= 12; ++i) {
        for (const ProjPoint& l : lines) {
          int gap = neighbor_gap(i, P, l);
          CHECK((gap + i + d) % 2 == 0);
          CHECK(std::abs(gap - i) <= d);
          CHECK(gap >= 0);
        }
      }
    }
  }
}

TEST_CASE("splitting type is invariant under unimodular column changes") {
  std::mt19937 rng(101);
  int checked = 0;
  while (checked < 200) {
    int p = (rng() % 2 == 0) ? 2 : 3;
    std::uniform_int_distribution<int> tdist(0, 5);
    LatticePair E = standard_bundle(p, tdist(rng));
    E.gen[0][0] = random_poly(rng, p, 3);
    E.gen[1][0] = random_poly(rng, p, 3);
    E.gen[0][1] = random_poly(rng, p, 3);
    E.gen[1][1] = random_poly(rng, p, 3);
    if (E.det().is_zero()) continue;
    SplittingType st = splitting_type(E);

    // Right multiplication by a random product of elementary and scaling
    // matrices (unit determinant up to a scalar).
    LatticePair U = E;
    for (int step = 0; step < 4; ++step) {
      Poly f = random_poly(rng, p, 2);
      bool to_second = rng() % 2 == 0;
      int col = to_second ? 1 : 0, other = 1 - col;
      U.gen[0][col] = U.gen[0][col] + f * U.gen[0][other];
      U.gen[1][col] = U.gen[1][col] + f * U.gen[1][other];
      if (p > 2 && rng() % 2 == 0) {
        U.gen[0][col] = U.gen[0][col].scaled(p - 1);
        U.gen[1][col] = U.gen[1][col].scaled(p - 1);
      }
    }
    CHECK(splitting_type(U) == st);
    ++checked;
  }
}

TEST_CASE("first minimum agrees with exhaustive search on random lattices") {
  std::mt19937 rng(202);
  int checked = 0;
  while (checked < 100) {
    int p = 2;  // keep the exhaustive space small
    std::uniform_int_distribution<int> tdist(0, 3);
    LatticePair E = standard_bundle(p, tdist(rng));
    E.gen[0][0] = random_poly(rng, p, 2);
    E.gen[1][0] = random_poly(rng, p, 2);
    E.gen[0][1] = random_poly(rng, p, 2);
    E.gen[1][1] = random_poly(rng, p, 2);
    if (E.det().is_zero()) continue;
    SplittingType st = splitting_type(E);
    int bound = E.twist + E.det().degree() + 1;
    CHECK(-st.b == exhaustive_first_minimum(E, bound));
    ++checked;
  }
}

TEST_CASE("weight is an ultrametric on lattice vectors") {
  std::mt19937 rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    int p = (rng() % 2 == 0) ? 2 : 3;
    std::uniform_int_distribution<int> tdist(0, 4);
    int twist = tdist(rng);
    Poly f1 = random_poly(rng, p, 4), g1 = random_poly(rng, p, 4);
    Poly f2 = random_poly(rng, p, 4), g2 = random_poly(rng, p, 4);
    CHECK(weight(f1 + f2, g1 + g2, twist) <=
          std::max(weight(f1, g1, twist), weight(f2, g2, twist)));
  }
}
