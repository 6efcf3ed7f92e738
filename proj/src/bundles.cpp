#include "btq/bundles.hpp"

#include <algorithm>
#include <stdexcept>

namespace btq {

bool LatticePair::is_standard() const {
  int p = this->p();
  return gen[0][0] == Poly::one(p) && gen[1][1] == Poly::one(p) &&
         gen[0][1].is_zero() && gen[1][0].is_zero();
}

int weight(const Poly& f, const Poly& g, int twist) {
  int wf = f.degree();
  int wg = g.is_zero() ? kNegInf : g.degree() - twist;
  return std::max(wf, wg);
}

LatticePair standard_bundle(int p, int i) {
  if (i < 0) throw std::invalid_argument("standard_bundle: class index must be nonnegative");
  LatticePair E{{{{Poly::one(p), Poly::zero(p)}, {Poly::zero(p), Poly::one(p)}}}, i};
  return E;
}

LatticePair neighbor_lattice(const LatticePair& E, const Place& P, const ProjPoint& l) {
  if (P.is_infinity())
    throw std::invalid_argument("neighbor_lattice: place must be finite");
  if (!E.is_standard())
    throw std::invalid_argument("neighbor_lattice: lattice must be in standard form");
  int p = E.p();
  LatticePair N = E;
  if (l.y.is_zero()) {
    // [1:0]: vectors (f, g) with g = 0 mod pi.
    N.gen = {{{Poly::one(p), Poly::zero(p)}, {Poly::zero(p), P.poly()}}};
  } else {
    // [alpha:1]: spanned by (lift(alpha), 1) and (pi, 0).
    N.gen = {{{l.x, P.poly()}, {Poly::one(p), Poly::zero(p)}}};
  }
  return N;
}

namespace {

struct Column {
  Poly f, g;
  int twist;
  // Shifted degrees of the two coordinates.
  int s0() const { return f.degree(); }
  int s1() const { return g.is_zero() ? kNegInf : g.degree() - twist; }
  int w() const { return std::max(s0(), s1()); }
  // Pivot = coordinate attaining the weight, ties resolved to coordinate 1.
  int pivot() const { return s1() >= s0() ? 1 : 0; }
  int pivot_deg() const { return pivot() == 1 ? g.degree() : f.degree(); }
  const Poly& pivot_poly() const { return pivot() == 1 ? g : f; }
};

}  // namespace

SplittingType splitting_type(const LatticePair& E) {
  Poly det = E.det();
  if (det.is_zero()) throw std::invalid_argument("splitting_type: zero determinant");
  PrimeField F(E.p());

  Column c[2] = {{E.gen[0][0], E.gen[1][0], E.twist},
                 {E.gen[0][1], E.gen[1][1], E.twist}};

  // Mulders-Storjohann simple transformations until the pivots differ. Each
  // step cancels the leading term of the heavier column's pivot coordinate,
  // so its degree strictly drops while no weight ever increases.
  int max_deg = std::max({c[0].f.degree(), c[0].g.degree(), c[1].f.degree(), c[1].g.degree(), 0});
  long long step_limit = 16LL * (max_deg + std::abs(E.twist) + det.degree() + 8);
  long long steps = 0;
  while (c[0].pivot() == c[1].pivot()) {
    if (++steps > step_limit)
      throw std::logic_error("splitting_type: reduction failed to terminate");
    // Reduce the column with the larger pivot degree (ties: column 1).
    int hi = (c[1].pivot_deg() >= c[0].pivot_deg()) ? 1 : 0;
    int lo = 1 - hi;
    int k = c[hi].pivot_deg() - c[lo].pivot_deg();
    int coef = F.mul(c[hi].pivot_poly().leading_coeff(),
                     F.inv(c[lo].pivot_poly().leading_coeff()));
    Poly mf = c[lo].f.shifted(k).scaled(coef);
    Poly mg = c[lo].g.shifted(k).scaled(coef);
    c[hi].f = c[hi].f - mf;
    c[hi].g = c[hi].g - mg;
    if (c[hi].f.is_zero() && c[hi].g.is_zero())
      throw std::logic_error("splitting_type: columns became dependent");
  }

  int w0 = c[0].w(), w1 = c[1].w();
  int lam1 = std::min(w0, w1), lam2 = std::max(w0, w1);
  SplittingType st{-lam2, -lam1};
  // Exact degree bookkeeping; a failure here means the reduction is broken.
  if (st.a + st.b != E.twist - det.degree())
    throw std::logic_error("splitting_type: a + b != twist - deg det");
  return st;
}

int neighbor_gap(int i, const Place& P, const ProjPoint& l) {
  LatticePair E = standard_bundle(P.p(), i);
  SplittingType st = splitting_type(neighbor_lattice(E, P, l));
  int gap = st.gap();
  if ((gap - i - P.degree()) % 2 != 0 || std::abs(gap - i) > P.degree())
    throw std::logic_error("neighbor_gap: parity/band violation");
  return gap;
}

}  // namespace btq
