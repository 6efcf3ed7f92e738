#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Exact arithmetic over F_p, F_{p^d} and F_p[t], plus closed points of the
// projective line over F_p. All values are immutable after construction and
// every operation is a pure function.

namespace btq {

// Degree of the zero polynomial. Chosen so that max() treats it as the
// identity and shifted degrees (deg - twist) stay far below any real degree.
constexpr int kNegInf = std::numeric_limits<int>::min() / 4;

class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b % p_ + p_) % p_; }
  int neg(int a) const { return (p_ - a % p_) % p_; }
  int mul(int a, int b) const { return (a * b) % p_; }
  int inv(int a) const;
  // Smallest generator of the cyclic group F_p^*.
  int primitive_root() const;

 private:
  int p_;
};

bool is_prime(int n);

// Dense polynomial over F_p in canonical form: no trailing zero coefficients,
// coeffs_[k] is the coefficient of t^k. The field characteristic travels with
// the value.
class Poly {
 public:
  explicit Poly(int p) : p_(p) {}
  Poly(int p, std::vector<int> coeffs);

  static Poly zero(int p) { return Poly(p); }
  static Poly one(int p) { return Poly(p, {1}); }
  static Poly t(int p) { return Poly(p, {0, 1}); }
  static Poly monomial(int p, int deg, int c = 1);

  int p() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kNegInf : static_cast<int>(coeffs_.size()) - 1; }
  int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : 0;
  }
  int leading_coeff() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const { return leading_coeff() == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(int c) const;
  // Multiplication by t^k.
  Poly shifted(int k) const;
  Poly monic() const;

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  Poly mod(const Poly& m) const { return divmod(*this, m).second; }
  static Poly gcd(Poly a, Poly b);
  Poly pow_mod(long long e, const Poly& m) const;

  bool operator==(const Poly& o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const;  // degree, then coefficients from the top

  std::string str() const;

 private:
  int p_;
  std::vector<int> coeffs_;
  void trim();
};

// Irreducibility over F_p for monic f: gcd(t^{p^k} - t, f) = 1 for k < deg f
// and f | t^{p^deg} - t.
bool is_irreducible(const Poly& f);

// All monic irreducible polynomials of degree d over F_p, ordered by the
// base-p value of the non-leading coefficient vector.
std::vector<Poly> enumerate_monic_irreducibles(int p, int d);

// Necklace count (1/d) * sum_{e|d} mu(d/e) p^e.
long long count_monic_irreducibles(int p, int d);

// F_{p^d} presented as residues modulo a monic irreducible of degree d.
class ExtField {
 public:
  ExtField(const PrimeField& base, Poly modulus);

  using Elem = Poly;  // reduced residue of degree < d

  int p() const { return base_.p(); }
  int degree() const { return d_; }
  long long order() const { return order_; }
  const Poly& modulus() const { return modulus_; }

  Elem zero() const { return Poly::zero(p()); }
  Elem one() const { return Poly::one(p()); }
  Elem gen() const { return reduce(Poly::t(p())); }

  Elem reduce(const Poly& f) const { return f.mod(modulus_); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
  Elem neg(const Elem& a) const { return a.scaled(base_.neg(1)); }
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, long long e) const { return a.pow_mod(e, modulus_); }

  // Bijection between elements and 0..p^d-1 (coefficients as base-p digits).
  Elem from_index(long long idx) const;
  long long to_index(const Elem& a) const;
  std::vector<Elem> elements() const;

 private:
  PrimeField base_;
  Poly modulus_;
  int d_;
  long long order_;
};

// A closed point of P^1 over F_p: a monic irreducible polynomial, or the
// point at infinity (degree 1).
class Place {
 public:
  static Place finite(Poly pi);
  static Place infinity(int p);

  bool is_infinity() const { return infinite_; }
  int degree() const { return degree_; }
  int p() const { return pi_.p(); }
  const Poly& poly() const;

 private:
  Place(bool inf, Poly pi, int degree)
      : infinite_(inf), pi_(std::move(pi)), degree_(degree) {}
  bool infinite_;
  Poly pi_;
  int degree_;
};

// f mod pi as an element of the residue field of a finite place.
Poly residue(const Poly& f, const Place& P);

// Point [x:y] of P^1 over F_{p^d}, normalized so the last nonzero coordinate
// is 1: either [x:1] or [1:0].
struct ProjPoint {
  Poly x, y;
  bool operator==(const ProjPoint& o) const { return x == o.x && y == o.y; }
};

ProjPoint make_proj_point(const ExtField& F, const Poly& x, const Poly& y);

// The p^d + 1 points: [elem_0:1], ..., [elem_{q-1}:1], [1:0], with elements
// in from_index order. The position in this sequence is the canonical point
// index used by the orbit machinery.
std::vector<ProjPoint> enumerate_proj_line(const ExtField& F);

}  // namespace btq
