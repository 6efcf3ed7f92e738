#include "btq/nmatrix.hpp"

#include <sstream>
#include <stdexcept>

#include "btq/bundles.hpp"
#include "btq/parallel.hpp"

#include "json.hpp"

namespace btq {

namespace {

long long ipow(int p, int d) {
  long long v = 1;
  for (int k = 0; k < d; ++k) v *= p;
  return v;
}

// Truncated product; entry (i, j) is exact whenever i + a.d + b.d < window.
NMatrix mul(const NMatrix& a, const NMatrix& b, int d_out) {
  NMatrix c(a.p(), d_out, a.window());
  int w = a.window();
  for (int i = 0; i < w; ++i)
    for (int k = 0; k < w; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < w; ++j) {
        const BigInt& bkj = b.at(k, j);
        if (bkj == 0) continue;
        c.set(i, j, c.at(i, j) + aik * bkj);
      }
    }
  return c;
}

void sub_scaled(NMatrix& a, const NMatrix& b, const BigInt& c) {
  int w = a.window();
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j)
      if (b.at(i, j) != 0) a.set(i, j, a.at(i, j) - c * b.at(i, j));
}

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// N_d at the working window, exact on rows [0, work - d).
NMatrix nd_at_window(int p, int d, int work) {
  if (d == 0) {
    NMatrix id(p, 0, work);
    for (int i = 0; i < work; ++i) id.set(i, i, 1);
    return id;
  }
  NMatrix base = n1(p, work);
  NMatrix acc = base;
  for (int k = 2; k <= d; ++k) acc = mul(acc, base, k);
  for (int i = 1; 2 * i <= d; ++i) {
    BigInt coef = binomial(d, i) * BigInt(ipow(p, i));
    sub_scaled(acc, nd_at_window(p, d - 2 * i, work), coef);
  }
  return acc;
}

}  // namespace

NMatrix::NMatrix(int p, int d, int window) : p_(p), d_(d), window_(window) {
  if (!is_prime(p)) throw std::invalid_argument("NMatrix: p must be prime");
  if (d < 0 || window < 0) throw std::invalid_argument("NMatrix: bad dimensions");
  e_.assign(static_cast<size_t>(window) * window, BigInt(0));
}

size_t NMatrix::idx(int i, int j) const {
  if (i < 0 || j < 0 || i >= window_ || j >= window_)
    throw std::out_of_range("NMatrix: index outside window");
  return static_cast<size_t>(i) * window_ + j;
}

long long NMatrix::points() const { return ipow(p_, d_) + 1; }

BigInt NMatrix::row_sum(int i) const {
  BigInt s = 0;
  for (int j = 0; j < window_; ++j) s += at(i, j);
  return s;
}

void NMatrix::check_invariants() const {
  for (int i = 0; i < window_; ++i) {
    for (int j = 0; j < window_; ++j) {
      bool in_band = std::abs(i - j) <= d_ && (i + j + d_) % 2 == 0;
      if (!in_band && at(i, j) != 0)
        throw std::logic_error("NMatrix: nonzero entry outside band at (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
      if (at(i, j) < 0)
        throw std::logic_error("NMatrix: negative entry");
    }
    if (i + d_ < window_ && row_sum(i) != points())
      throw std::logic_error("NMatrix: row " + std::to_string(i) +
                             " does not sum to p^d+1");
  }
}

NMatrix NMatrix::cropped(int window) const {
  if (window > window_) throw std::invalid_argument("NMatrix::cropped: cannot grow");
  NMatrix c(p_, d_, window);
  for (int i = 0; i < window; ++i)
    for (int j = 0; j < window; ++j) c.set(i, j, at(i, j));
  return c;
}

bool NMatrix::operator==(const NMatrix& o) const {
  return p_ == o.p_ && d_ == o.d_ && window_ == o.window_ && e_ == o.e_;
}

std::string NMatrix::to_json() const {
  nlohmann::json j;
  j["p"] = p_;
  j["d"] = d_;
  j["window"] = window_;
  j["convention"] = "row-source";
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < window_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int jj = 0; jj < window_; ++jj) row.push_back(at(i, jj).str());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump(2);
}

NMatrix n1(int p, int window) {
  if (window < 2) throw std::invalid_argument("n1: window must be >= 2");
  NMatrix m(p, 1, window);
  m.set(0, 1, p + 1);
  for (int i = 1; i < window; ++i) {
    m.set(i, i - 1, p);
    if (i + 1 < window) m.set(i, i + 1, 1);
  }
  return m;
}

NMatrix nd_recurrence(int p, int d, int window) {
  if (d < 1) throw std::invalid_argument("nd_recurrence: degree must be >= 1");
  if (window < 2) throw std::invalid_argument("nd_recurrence: window must be >= 2");
  NMatrix m = nd_at_window(p, d, window + d).cropped(window);
  m.check_invariants();
  return m;
}

NMatrix nd_oracle_at(const Place& P, int window, long long budget, int threads) {
  if (P.is_infinity()) throw std::invalid_argument("nd_oracle: place must be finite");
  int p = P.p();
  int d = P.degree();
  if (ipow(p, d) > budget)
    throw BudgetExceeded("nd_oracle: p^d = " + std::to_string(ipow(p, d)) +
                         " exceeds budget " + std::to_string(budget));
  ExtField F(PrimeField(p), P.poly());
  std::vector<ProjPoint> lines = enumerate_proj_line(F);
  NMatrix m(p, d, window);
  std::vector<std::vector<long long>> rows(window, std::vector<long long>(window, 0));
  parallel_for(window, threads, [&](long long i) {
    for (const ProjPoint& l : lines) {
      int gap = neighbor_gap(static_cast<int>(i), P, l);
      if (gap < window) rows[i][gap] += 1;
    }
  });
  for (int i = 0; i < window; ++i)
    for (int j = 0; j < window; ++j)
      if (rows[i][j] != 0) m.set(i, j, rows[i][j]);
  m.check_invariants();
  return m;
}

NMatrix nd_oracle(int p, int d, int window, long long budget, int threads) {
  if (d < 1) throw std::invalid_argument("nd_oracle: degree must be >= 1");
  std::vector<Poly> irr = enumerate_monic_irreducibles(p, d);
  return nd_oracle_at(Place::finite(irr.front()), window, budget, threads);
}

std::vector<std::vector<BigInt>> distance_profile_of(const NMatrix& nd, int start, int t) {
  int w = nd.window();
  int d = nd.d();
  if (t < 0) throw std::invalid_argument("distance_profile: negative radius");
  if (start < 0 || start + t * d + d >= w)
    throw std::invalid_argument("distance_profile: window too small");
  BigInt q = ipow(nd.p(), d);

  auto times_n = [&](const std::vector<BigInt>& v) {
    std::vector<BigInt> r(w, BigInt(0));
    for (int k = 0; k < w; ++k) {
      if (v[k] == 0) continue;
      for (int j = std::max(0, k - d); j < std::min(w, k + d + 1); ++j)
        if (nd.at(k, j) != 0) r[j] += v[k] * nd.at(k, j);
    }
    return r;
  };

  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> a0(w, BigInt(0));
  a0[start] = 1;
  out.push_back(a0);
  if (t == 0) return out;

  std::vector<BigInt> a1(w, BigInt(0));
  for (int j = 0; j < w; ++j) a1[j] = nd.at(start, j);
  out.push_back(a1);

  for (int s = 2; s <= t; ++s) {
    std::vector<BigInt> next = times_n(out[s - 1]);
    if (s == 2) {
      next[start] -= (q + 1);
    } else {
      for (int j = 0; j < w; ++j)
        if (out[s - 2][j] != 0) next[j] -= q * out[s - 2][j];
    }
    out.push_back(std::move(next));
  }

  // Sphere sizes: (q+1) q^{s-1} vertices at distance exactly s.
  BigInt expect = q + 1;
  for (int s = 1; s <= t; ++s) {
    BigInt total = 0;
    for (const BigInt& x : out[s]) {
      if (x < 0) throw std::logic_error("distance_profile: negative count");
      total += x;
    }
    if (total != expect)
      throw std::logic_error("distance_profile: sphere size mismatch at radius " +
                             std::to_string(s));
    expect *= q;
  }
  return out;
}

std::vector<std::vector<BigInt>> distance_profile(int p, int d, int start, int t, int window) {
  return distance_profile_of(nd_recurrence(p, d, window), start, t);
}

std::set<int> expand_support(const NMatrix& nd, const std::set<int>& s, int radius) {
  std::set<int> out;
  for (int v : s) {
    auto profile = distance_profile_of(nd, v, radius);
    for (const auto& row : profile)
      for (int j = 0; j < static_cast<int>(row.size()); ++j)
        if (row[j] != 0) out.insert(j);
  }
  return out;
}

std::set<int> ball_support(int p, int start,
                           const std::vector<std::pair<int, int>>& schedule,
                           int window) {
  std::set<int> s{start};
  for (const auto& [deg, radius] : schedule)
    s = expand_support(nd_recurrence(p, deg, window), s, radius);
  return s;
}

ReciprocityReport reciprocity_check(const NMatrix& a, const NMatrix& b) {
  if (a.p() != b.p() || a.window() != b.window())
    throw std::invalid_argument("reciprocity_check: incompatible matrices");
  int w = a.window();
  int interior = w - a.d() - b.d();
  if (interior <= 0)
    throw std::invalid_argument("reciprocity_check: window too small for degrees");
  NMatrix ab = mul(a, b, a.d() + b.d());
  NMatrix ba = mul(b, a, a.d() + b.d());
  ReciprocityReport rep;
  rep.interior = interior;
  for (int i = 0; i < interior; ++i)
    for (int j = 0; j < interior; ++j) {
      BigInt diff = ab.at(i, j) - ba.at(i, j);
      if (diff < 0) diff = -diff;
      if (diff != 0 && rep.pass) {
        rep.pass = false;
        rep.i = i;
        rep.j = j;
        rep.lhs = ab.at(i, j);
        rep.rhs = ba.at(i, j);
      }
      if (diff > rep.max_discrepancy) rep.max_discrepancy = diff;
    }
  return rep;
}

ReciprocityReport reciprocity_check(int p, int d1, int d2, int window,
                                    MatrixMethod method, long long budget,
                                    int threads) {
  NMatrix a = method == MatrixMethod::Oracle ? nd_oracle(p, d1, window, budget, threads)
                                             : nd_recurrence(p, d1, window);
  NMatrix b = method == MatrixMethod::Oracle ? nd_oracle(p, d2, window, budget, threads)
                                             : nd_recurrence(p, d2, window);
  return reciprocity_check(a, b);
}

}  // namespace btq
