#include "btq/orbits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "btq/bundles.hpp"

namespace btq {

namespace {
long long ipow(int p, int e) {
  long long v = 1;
  for (int k = 0; k < e; ++k) v *= p;
  return v;
}
}  // namespace

OrderType split_order_type(int class_index, int d) {
  if (class_index < 0) throw std::invalid_argument("split_order_type: negative index");
  if (class_index == 0) return OrderType{OrderTypeTag::I, 0};
  return OrderType{OrderTypeTag::III, std::min(class_index + 1, d)};
}

const char* order_type_name(OrderTypeTag t) {
  switch (t) {
    case OrderTypeTag::I: return "I";
    case OrderTypeTag::II: return "II";
    case OrderTypeTag::III: return "III";
    case OrderTypeTag::IV: return "IV";
  }
  return "?";
}

long long StabilizerGroup::order() const {
  if (kind == Kind::FullMoebius) return static_cast<long long>(p) * (p * p - 1);
  return static_cast<long long>(p - 1) * ipow(p, r);
}

std::vector<std::array<Poly, 4>> StabilizerGroup::generators(const ExtField& F) const {
  if (F.p() != p || F.degree() != d)
    throw std::invalid_argument("StabilizerGroup: field mismatch");
  std::vector<std::array<Poly, 4>> gens;
  Poly one = F.one(), zero = F.zero();
  int g = PrimeField(p).primitive_root();
  Poly gc = F.reduce(Poly(p, {g}));
  if (kind == Kind::FullMoebius) {
    gens.push_back({one, one, zero, one});   // upper elementary
    gens.push_back({one, zero, one, one});   // lower elementary
    if (p > 2) gens.push_back({gc, zero, zero, one});
  } else {
    // Scaling part of x -> ux + v.
    if (p > 2) gens.push_back({one, zero, zero, gc});
    // Translations by a basis of W_i (residues of 1, t, ..., t^{r-1}).
    for (int k = 0; k < r; ++k)
      gens.push_back({one, zero, F.reduce(Poly::monomial(p, k)), one});
  }
  return gens;
}

StabilizerGroup stabilizer(int class_index, int p, int d) {
  if (class_index < 0) throw std::invalid_argument("stabilizer: negative index");
  if (class_index == 0) return StabilizerGroup{StabilizerGroup::Kind::FullMoebius, p, d, 0};
  return StabilizerGroup{StabilizerGroup::Kind::AffineShift, p, d,
                         std::min(class_index + 1, d)};
}

ProjPoint apply_matrix(const ExtField& F, const std::array<Poly, 4>& m,
                       const ProjPoint& pt) {
  Poly nx = F.add(F.mul(m[0], pt.x), F.mul(m[1], pt.y));
  Poly ny = F.add(F.mul(m[2], pt.x), F.mul(m[3], pt.y));
  return make_proj_point(F, nx, ny);
}

long long OrbitDecomposition::total_points() const {
  long long s = 0;
  for (const Orbit& o : orbits) s += o.size();
  return s;
}

long long OrbitDecomposition::neighbors_with_gap(int gap) const {
  long long s = 0;
  for (const Orbit& o : orbits)
    if (o.gap == gap) s += o.size();
  return s;
}

long long OrbitDecomposition::multiplicity(int gap) const {
  long long s = 0;
  for (const Orbit& o : orbits)
    if (o.gap == gap) ++s;
  return s;
}

OrbitDecomposition orbit_decomposition(int class_index, const Place& P,
                                       long long budget) {
  if (P.is_infinity())
    throw std::invalid_argument("orbit_decomposition: place must be finite");
  int p = P.p(), d = P.degree();
  long long q = ipow(p, d);
  if (q > budget)
    throw BudgetExceeded("orbit_decomposition: p^d exceeds budget");

  ExtField F(PrimeField(p), P.poly());
  std::vector<ProjPoint> pts = enumerate_proj_line(F);
  long long n = static_cast<long long>(pts.size());
  auto point_index = [&](const ProjPoint& pt) -> long long {
    return pt.y.is_zero() ? q : F.to_index(pt.x);
  };

  StabilizerGroup G = stabilizer(class_index, p, d);
  std::vector<std::array<Poly, 4>> gens = G.generators(F);
  std::vector<std::vector<long long>> perm(gens.size(), std::vector<long long>(n));
  for (size_t gi = 0; gi < gens.size(); ++gi)
    for (long long k = 0; k < n; ++k)
      perm[gi][k] = point_index(apply_matrix(F, gens[gi], pts[k]));

  std::vector<int> gap_of(n);
  for (long long k = 0; k < n; ++k)
    gap_of[k] = neighbor_gap(class_index, P, pts[k]);

  OrbitDecomposition dec;
  dec.class_index = class_index;
  dec.p = p;
  dec.d = d;
  std::vector<char> seen(n, 0);
  for (long long s = 0; s < n; ++s) {
    if (seen[s]) continue;
    Orbit orb;
    orb.gap = gap_of[s];
    std::vector<long long> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      long long v = stack.back();
      stack.pop_back();
      orb.points.push_back(static_cast<int>(v));
      if (gap_of[v] != orb.gap)
        throw std::logic_error("orbit_decomposition: gap not constant on orbit");
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        long long u = perm[gi][v];
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(orb.points.begin(), orb.points.end());
    dec.orbits.push_back(std::move(orb));
  }
  return dec;
}

namespace {
// a/b, throwing unless divisible.
long long exact_div(long long a, long long b, const char* what) {
  if (b == 0 || a % b != 0)
    throw std::domain_error(std::string(what) + ": expression is not an integer (" +
                            std::to_string(a) + "/" + std::to_string(b) + ")");
  return a / b;
}
}  // namespace

long long valency_closed_form(OrderType t, int p, int N) {
  if (N < 1) throw std::invalid_argument("valency_closed_form: N must be >= 1");
  int eps = (N % 2 == 0) ? 1 : 0;
  switch (t.tag) {
    case OrderTypeTag::I:
      // Common denominator p^2 - 1; p*eps/(p+1) = p(p-1)eps/(p^2-1).
      return exact_div((ipow(p, 2) - 1) + (ipow(p, N - 1) - 1) +
                           static_cast<long long>(p) * (p - 1) * eps,
                       ipow(p, 2) - 1, "valency type I");
    case OrderTypeTag::II:
      if (t.r > N) throw std::invalid_argument("valency: r must be <= N");
      return ipow(p, N - t.r) + 1;
    case OrderTypeTag::III:
      if (t.r > N) throw std::invalid_argument("valency: r must be <= N");
      return 2 + exact_div(ipow(p, N - t.r) - 1, p - 1, "valency type III");
    case OrderTypeTag::IV:
      return exact_div(ipow(p, N) + 2LL * p * eps + 1, p + 1, "valency type IV");
  }
  throw std::logic_error("valency_closed_form: bad type");
}

std::array<long long, 4> conjugacy_census(OrderType t, int p) {
  long long pr = ipow(p, t.r);
  switch (t.tag) {
    case OrderTypeTag::I:
      return {static_cast<long long>(p - 1) * (p - 1) * (p + 1), p - 1,
              static_cast<long long>(p * p - 1) * (p - 2) * p / 2,
              static_cast<long long>(p - 1) * (p - 1) * p * p / 2};
    case OrderTypeTag::II:
      return {(p - 1) * (pr - 1), p - 1, 0, 0};
    case OrderTypeTag::III:
      return {(p - 1) * (pr - 1), p - 1,
              static_cast<long long>(p - 1) * (p - 2) * pr, 0};
    case OrderTypeTag::IV:
      return {0, p - 1, 0, static_cast<long long>(p - 1) * p};
  }
  throw std::logic_error("conjugacy_census: bad type");
}

std::array<long long, 4> fixed_point_counts(int p, int N) {
  int eps = (N % 2 == 0) ? 1 : 0;
  return {1, ipow(p, N) + 1, 2, 2LL * eps};
}

long long census_group_order(OrderType t, int p) {
  long long pr = ipow(p, t.r);
  switch (t.tag) {
    case OrderTypeTag::I:
      // |GL_2(F_p)|
      return static_cast<long long>(p * p - 1) * (p * p - p);
    case OrderTypeTag::II:
      return (p - 1) * pr;
    case OrderTypeTag::III:
      return static_cast<long long>(p - 1) * (p - 1) * pr;
    case OrderTypeTag::IV:
      return static_cast<long long>(p) * p - 1;
  }
  throw std::logic_error("census_group_order: bad type");
}

long long burnside_valency(OrderType t, int p, int N) {
  std::array<long long, 4> census = conjugacy_census(t, p);
  std::array<long long, 4> fixed = fixed_point_counts(p, N);
  long long order = census_group_order(t, p);
  long long total = 0, elements = 0;
  for (int k = 0; k < 4; ++k) {
    total += census[k] * fixed[k];
    elements += census[k];
  }
  if (elements != order)
    throw std::logic_error("burnside_valency: census does not sum to the group order");
  return exact_div(total, order, "burnside average");
}

long long multiplicity_closed_form(MultCase c, MultTarget target,
                                   long long ncount, int p, int r) {
  long long generic;  // size of a free orbit in this case
  switch (c) {
    case MultCase::A: generic = (p - 1) * ipow(p, r); break;
    case MultCase::C1:
    case MultCase::C2:
    case MultCase::C3: generic = static_cast<long long>(p) * (p * p - 1); break;
    default: generic = 2LL * (p - 1); break;  // cases B
  }
  auto div = [&](long long num) { return exact_div(num, generic, "multiplicity"); };
  switch (target) {
    case MultTarget::BPlusP:
      switch (c) {
        case MultCase::A: return 1 + div(ncount - 1);
        case MultCase::B1: return 2 + div(ncount - (p - 1) - 2);
        case MultCase::B2: return 1 + div(ncount - 2);
        case MultCase::B3: return 1 + div(ncount - 2);
        case MultCase::B4: return 2 + div(ncount - 2);
        case MultCase::B5: return 1 + div(ncount - 2);
        case MultCase::B6: return 2 + div(ncount - (p - 1) - 2);
        case MultCase::B7: return 2 + div(ncount - 2);
        case MultCase::C1: return 1 + div(ncount - (p + 1));
        case MultCase::C2: return 1 + div(ncount - (p + 1));
        case MultCase::C3: return 2 + div(ncount - (static_cast<long long>(p) * p + 1));
      }
      break;
    case MultTarget::Exceptional:
      switch (c) {
        case MultCase::A: return 1 + div(ncount - ipow(p, r));
        case MultCase::B2: return 1 + div(ncount - (p - 1));
        case MultCase::B5: return 1 + div(ncount);
        case MultCase::B6: return 1 + div(ncount - (p - 1));
        case MultCase::B7: return 1 + div(ncount - (p - 1));
        case MultCase::C2: return 1 + div(ncount - static_cast<long long>(p) * (p - 1));
        default:
          throw std::invalid_argument("multiplicity_closed_form: case has no exceptional target");
      }
      break;
    case MultTarget::Other:
      return div(ncount);
  }
  throw std::logic_error("multiplicity_closed_form: bad arguments");
}

}  // namespace btq
