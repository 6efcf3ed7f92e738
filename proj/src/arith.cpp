#include "btq/arith.hpp"

#include <algorithm>
#include <cassert>

namespace btq {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
}

int PrimeField::inv(int a) const {
  a %= p_;
  if (a < 0) a += p_;
  if (a == 0) throw std::invalid_argument("PrimeField::inv of zero");
  // extended Euclid
  int r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    int q = r0 / r1;
    int r2 = r0 - q * r1;
    int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  assert(r0 == 1);
  return (s0 % p_ + p_) % p_;
}

int PrimeField::primitive_root() const {
  if (p_ == 2) return 1;
  for (int g = 2; g < p_; ++g) {
    int x = g, ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == p_ - 1) return g;
  }
  throw std::logic_error("PrimeField: no primitive root found");
}

Poly::Poly(int p, std::vector<int> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (int& c : coeffs_) {
    c %= p_;
    if (c < 0) c += p_;
  }
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(int p, int deg, int c) {
  std::vector<int> v(deg + 1, 0);
  v[deg] = c;
  return Poly(p, std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  assert(p_ == o.p_);
  std::vector<int> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) + o.coeff(k);
  return Poly(p_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  assert(p_ == o.p_);
  std::vector<int> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) - o.coeff(k);
  return Poly(p_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  assert(p_ == o.p_);
  if (is_zero() || o.is_zero()) return Poly(p_);
  std::vector<int> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] = (v[i + j] + coeffs_[i] * o.coeffs_[j]) % p_;
  return Poly(p_, std::move(v));
}

Poly Poly::scaled(int c) const {
  std::vector<int> v = coeffs_;
  for (int& x : v) x *= c;
  return Poly(p_, std::move(v));
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<int> v(coeffs_.size() + k, 0);
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
  return Poly(p_, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(PrimeField(p_).inv(leading_coeff()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  assert(a.p_ == b.p_);
  if (b.is_zero()) throw std::invalid_argument("Poly::divmod by zero");
  PrimeField F(a.p_);
  int linv = F.inv(b.leading_coeff());
  Poly q(a.p_), r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    int c = F.mul(r.leading_coeff(), linv);
    q = q + Poly::monomial(a.p_, k, c);
    r = r - b.shifted(k).scaled(c);
  }
  return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.monic();
}

Poly Poly::pow_mod(long long e, const Poly& m) const {
  assert(e >= 0);
  Poly base = mod(m);
  Poly acc = Poly::one(p_).mod(m);
  while (e > 0) {
    if (e & 1) acc = (acc * base).mod(m);
    base = (base * base).mod(m);
    e >>= 1;
  }
  return acc;
}

bool Poly::operator<(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int k = degree(); k >= 0; --k)
    if (coeff(k) != o.coeff(k)) return coeff(k) < o.coeff(k);
  return false;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    int c = coeff(k);
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (k == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += (k == 1) ? "t" : "t^" + std::to_string(k);
    }
  }
  return s;
}

bool is_irreducible(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) return false;
  int p = f.p();
  int d = f.degree();
  if (d == 1) return true;
  // t^{p^k} mod f, iterated.
  Poly x = Poly::t(p).mod(f);
  Poly xq = x;
  for (int k = 1; k < d; ++k) {
    xq = xq.pow_mod(p, f);
    Poly g = Poly::gcd(xq - x, f);
    if (g.degree() != 0) return false;
  }
  xq = xq.pow_mod(p, f);
  return (xq - x).is_zero();
}

std::vector<Poly> enumerate_monic_irreducibles(int p, int d) {
  if (d < 1) throw std::invalid_argument("enumerate_monic_irreducibles: d must be >= 1");
  long long total = 1;
  for (int k = 0; k < d; ++k) total *= p;
  std::vector<Poly> out;
  for (long long v = 0; v < total; ++v) {
    std::vector<int> coeffs(d + 1, 0);
    long long x = v;
    for (int k = 0; k < d; ++k) {
      coeffs[k] = static_cast<int>(x % p);
      x /= p;
    }
    coeffs[d] = 1;
    Poly f(p, std::move(coeffs));
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

namespace {
int moebius(int n) {
  int mu = 1;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}
}  // namespace

long long count_monic_irreducibles(int p, int d) {
  long long sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    long long pe = 1;
    for (int k = 0; k < e; ++k) pe *= p;
    sum += moebius(d / e) * pe;
  }
  return sum / d;
}

ExtField::ExtField(const PrimeField& base, Poly modulus)
    : base_(base), modulus_(std::move(modulus)), d_(modulus_.degree()) {
  if (modulus_.p() != base.p())
    throw std::invalid_argument("ExtField: modulus characteristic mismatch");
  if (!modulus_.is_monic() || !is_irreducible(modulus_))
    throw std::invalid_argument("ExtField: modulus must be monic irreducible");
  order_ = 1;
  for (int k = 0; k < d_; ++k) order_ *= p();
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (a.is_zero()) throw std::invalid_argument("ExtField::inv of zero");
  // a^(p^d - 2); the unit group has order p^d - 1.
  return pow(a, order_ - 2);
}

ExtField::Elem ExtField::from_index(long long idx) const {
  std::vector<int> coeffs(d_, 0);
  for (int k = 0; k < d_; ++k) {
    coeffs[k] = static_cast<int>(idx % p());
    idx /= p();
  }
  return Poly(p(), std::move(coeffs));
}

long long ExtField::to_index(const Elem& a) const {
  long long idx = 0, w = 1;
  for (int k = 0; k < d_; ++k) {
    idx += a.coeff(k) * w;
    w *= p();
  }
  return idx;
}

std::vector<ExtField::Elem> ExtField::elements() const {
  std::vector<Elem> out;
  out.reserve(order_);
  for (long long i = 0; i < order_; ++i) out.push_back(from_index(i));
  return out;
}

Place Place::finite(Poly pi) {
  if (!pi.is_monic() || !is_irreducible(pi))
    throw std::invalid_argument("Place::finite: polynomial must be monic irreducible");
  int d = pi.degree();
  return Place(false, std::move(pi), d);
}

Place Place::infinity(int p) { return Place(true, Poly::zero(p), 1); }

const Poly& Place::poly() const {
  if (infinite_) throw std::invalid_argument("Place: the infinite place has no polynomial");
  return pi_;
}

Poly residue(const Poly& f, const Place& P) {
  if (P.is_infinity())
    throw std::invalid_argument("residue: no residue map at the infinite place");
  return f.mod(P.poly());
}

ProjPoint make_proj_point(const ExtField& F, const Poly& x, const Poly& y) {
  Poly xr = F.reduce(x), yr = F.reduce(y);
  if (yr.is_zero()) {
    if (xr.is_zero()) throw std::invalid_argument("ProjPoint: [0:0] is not a point");
    return ProjPoint{F.one(), F.zero()};
  }
  return ProjPoint{F.mul(xr, F.inv(yr)), F.one()};
}

std::vector<ProjPoint> enumerate_proj_line(const ExtField& F) {
  std::vector<ProjPoint> pts;
  pts.reserve(F.order() + 1);
  for (long long i = 0; i < F.order(); ++i)
    pts.push_back(ProjPoint{F.from_index(i), F.one()});
  pts.push_back(ProjPoint{F.one(), F.zero()});
  return pts;
}

}  // namespace btq
