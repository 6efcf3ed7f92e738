#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "btq/arith.hpp"

using namespace btq;

namespace {

// Independent irreducibility oracle: exhaustive trial division by every
// monic polynomial of lower degree.
bool irreducible_by_trial_division(const Poly& f) {
  int p = f.p(), d = f.degree();
  if (d < 1) return false;
  for (int deg = 1; 2 * deg <= d; ++deg) {
    long long total = 1;
    for (int k = 0; k < deg; ++k) total *= p;
    for (long long v = 0; v < total; ++v) {
      std::vector<int> coeffs(deg + 1, 0);
      long long x = v;
      for (int k = 0; k < deg; ++k) {
        coeffs[k] = static_cast<int>(x % p);
        x /= p;
      }
      coeffs[deg] = 1;
      Poly g(p, coeffs);
      if (Poly::divmod(f, g).second.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("prime field construction and inverses") {
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
  for (int p : {2, 3, 5, 7, 11, 13}) {
    PrimeField F(p);
    for (int a = 1; a < p; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    int g = F.primitive_root();
    int x = g, ord = 1;
    while (x != 1) {
      x = F.mul(x, g);
      ++ord;
    }
    CHECK(ord == p - 1);
  }
}

TEST_CASE("polynomial canonical form and degree sentinel") {
  Poly z = Poly::zero(3);
  CHECK(z.degree() == kNegInf);
  CHECK(std::max(z.degree(), 5) == 5);
  CHECK(std::max(z.degree(), -100) == -100);
  Poly f(3, {1, 0, 2, 0, 0});
  CHECK(f.degree() == 2);
  CHECK(f.leading_coeff() == 2);
  Poly g(3, {2, 0, 1});
  CHECK((f + g).is_zero());
}

TEST_CASE("polynomial division and gcd") {
  std::mt19937 rng(7);
  for (int p : {2, 3, 5}) {
    std::uniform_int_distribution<int> cdist(0, p - 1), ddist(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
      auto random_poly = [&]() {
        int deg = ddist(rng);
        std::vector<int> c(deg + 1);
        for (int& x : c) x = cdist(rng);
        return Poly(p, c);
      };
      Poly a = random_poly(), b = random_poly();
      if (b.is_zero()) continue;
      auto [q, r] = Poly::divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
      Poly g = Poly::gcd(a, b);
      if (!a.is_zero()) CHECK(Poly::divmod(a, g).second.is_zero());
      CHECK(Poly::divmod(b, g).second.is_zero());
    }
  }
}

TEST_CASE("monic irreducible enumeration matches both oracles") {
  SUBCASE("fixtures") {
    auto irr21 = enumerate_monic_irreducibles(2, 1);
    REQUIRE(irr21.size() == 2);
    CHECK(irr21[0] == Poly::t(2));
    CHECK(irr21[1] == Poly(2, {1, 1}));

    auto irr22 = enumerate_monic_irreducibles(2, 2);
    REQUIRE(irr22.size() == 1);
    CHECK(irr22[0] == Poly(2, {1, 1, 1}));

    CHECK(enumerate_monic_irreducibles(3, 2).size() == 3);  // (9-3)/2
  }
  SUBCASE("necklace count and trial division agree") {
    for (int p : {2, 3, 5}) {
      for (int d = 1; d <= (p == 5 ? 3 : 4); ++d) {
        auto irr = enumerate_monic_irreducibles(p, d);
        CHECK(static_cast<long long>(irr.size()) == count_monic_irreducibles(p, d));
        for (const Poly& f : irr) {
          CHECK(f.is_monic());
          CHECK(irreducible_by_trial_division(f));
        }
        // Nothing irreducible was skipped.
        long long total = 1;
        for (int k = 0; k < d; ++k) total *= p;
        long long found = 0;
        for (long long v = 0; v < total; ++v) {
          std::vector<int> coeffs(d + 1, 0);
          long long x = v;
          for (int k = 0; k < d; ++k) {
            coeffs[k] = static_cast<int>(x % p);
            x /= p;
          }
          coeffs[d] = 1;
          if (irreducible_by_trial_division(Poly(p, coeffs))) ++found;
        }
        CHECK(found == static_cast<long long>(irr.size()));
      }
    }
  }
  SUBCASE("no roots in the base field for d >= 2") {
    for (int p : {2, 3}) {
      for (int d = 2; d <= 4; ++d) {
        for (const Poly& f : enumerate_monic_irreducibles(p, d)) {
          for (int a = 0; a < p; ++a) {
            int val = 0, power = 1;
            for (int k = 0; k <= f.degree(); ++k) {
              val = (val + f.coeff(k) * power) % p;
              power = (power * a) % p;
            }
            CHECK(val != 0);
          }
        }
      }
    }
  }
}

TEST_CASE("extension field arithmetic") {
  PrimeField F2(2);
  ExtField F4(F2, Poly(2, {1, 1, 1}));
  SUBCASE("residue fixtures over F4") {
    Poly t = Poly::t(2);
    Place P = Place::finite(Poly(2, {1, 1, 1}));
    // theta^2 = theta + 1
    CHECK(residue(t * t, P) == Poly(2, {1, 1}));
    // constants map to constants
    CHECK(residue(Poly::one(2), P) == Poly::one(2));
    // theta^3 = 1
    CHECK(residue(t * t * t, P) == Poly::one(2));
    CHECK_THROWS_AS(residue(t, Place::infinity(2)), std::invalid_argument);
  }
  SUBCASE("residue is a ring homomorphism (random)") {
    std::mt19937 rng(11);
    for (int p : {2, 3}) {
      for (const Poly& m : enumerate_monic_irreducibles(p, 3)) {
        Place P = Place::finite(m);
        std::uniform_int_distribution<int> cdist(0, p - 1);
        for (int trial = 0; trial < 20; ++trial) {
          auto random_poly = [&]() {
            std::vector<int> c(7);
            for (int& x : c) x = cdist(rng);
            return Poly(p, c);
          };
          Poly a = random_poly(), b = random_poly();
          CHECK(residue(a + b, P) == residue(a, P) + residue(b, P));
          CHECK(residue(a * b, P) == residue(residue(a, P) * residue(b, P), P));
        }
      }
    }
  }
  SUBCASE("residue restricted to degree < d is a bijection") {
    for (int p : {2, 3}) {
      for (int d = 1; d <= 3; ++d) {
        ExtField F(PrimeField(p), enumerate_monic_irreducibles(p, d).front());
        Place P = Place::finite(F.modulus());
        std::set<long long> image;
        for (long long i = 0; i < F.order(); ++i)
          image.insert(F.to_index(residue(F.from_index(i), P)));
        CHECK(static_cast<long long>(image.size()) == F.order());
      }
    }
  }
  SUBCASE("unit group order and associativity spot checks") {
    for (int p : {2, 3}) {
      for (int d = 2; d <= 3; ++d) {
        ExtField F(PrimeField(p), enumerate_monic_irreducibles(p, d).front());
        std::mt19937 rng(13);
        std::uniform_int_distribution<long long> dist(0, F.order() - 1);
        for (int trial = 0; trial < 30; ++trial) {
          Poly a = F.from_index(dist(rng)), b = F.from_index(dist(rng)),
               c = F.from_index(dist(rng));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        }
        for (long long i = 1; i < F.order(); ++i) {
          Poly a = F.from_index(i);
          CHECK(F.pow(a, F.order() - 1) == F.one());
          CHECK(F.mul(a, F.inv(a)) == F.one());
        }
      }
    }
  }
  SUBCASE("Frobenius is additive") {
    for (int p : {2, 3}) {
      ExtField F(PrimeField(p), enumerate_monic_irreducibles(p, 2).front());
      for (long long i = 0; i < F.order(); ++i)
        for (long long j = 0; j < F.order(); ++j) {
          Poly a = F.from_index(i), b = F.from_index(j);
          CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
        }
    }
  }
  SUBCASE("bad moduli are rejected") {
    CHECK_THROWS_AS(ExtField(F2, Poly(2, {0, 0, 1})), std::invalid_argument);   // t^2
    CHECK_THROWS_AS(ExtField(F2, Poly(2, {1, 0, 1})), std::invalid_argument);   // (t+1)^2
  }
}

TEST_CASE("projective line enumeration") {
  for (int p : {2, 3}) {
    for (int d = 1; d <= 3; ++d) {
      ExtField F(PrimeField(p), enumerate_monic_irreducibles(p, d).front());
      auto pts = enumerate_proj_line(F);
      CHECK(static_cast<long long>(pts.size()) == F.order() + 1);
      // Normalization is canonical: re-normalizing is the identity, and all
      // points are distinct.
      for (size_t i = 0; i < pts.size(); ++i) {
        ProjPoint q = make_proj_point(F, pts[i].x, pts[i].y);
        CHECK(q == pts[i]);
        for (size_t j = i + 1; j < pts.size(); ++j) CHECK(!(pts[i] == pts[j]));
      }
      // Scaling both coordinates does not change the point.
      Poly x = F.from_index(1), c = F.from_index(F.order() - 1);
      ProjPoint a = make_proj_point(F, x, F.one());
      ProjPoint b = make_proj_point(F, F.mul(x, c), c);
      CHECK(a == b);
    }
  }
  ExtField F4(PrimeField(2), Poly(2, {1, 1, 1}));
  CHECK(enumerate_proj_line(F4).size() == 5);
  CHECK_THROWS_AS(make_proj_point(F4, F4.zero(), F4.zero()), std::invalid_argument);
}
