#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "btq/arith.hpp"
#include "btq/bigint.hpp"

// Neighbor-count matrices N_d for split orders on P^1. Entry (i, j) is the
// number of tree neighbors of the class-i order at a degree-d place that are
// isomorphic to the class-j order. Rows index the source vertex, so every
// interior row sums to p^d + 1. (Displays of these matrices elsewhere often
// put the source on columns; those are the transposes of what is stored
// here.)
//
// Three independent constructions are provided: the explicit degree-1
// matrix, the recurrence N_d = N_1^d - sum_{i=1}^{[d/2]} C(d,i) p^i N_{d-2i},
// and a brute-force enumeration over the p^d + 1 neighbor lattices.

namespace btq {

constexpr long long kDefaultBudget = 4096;  // cap on p^d for enumerations

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class NMatrix {
 public:
  NMatrix(int p, int d, int window);

  int p() const { return p_; }
  int d() const { return d_; }
  int window() const { return window_; }
  long long points() const;  // p^d + 1

  const BigInt& at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, BigInt v) { e_[idx(i, j)] = std::move(v); }
  BigInt row_sum(int i) const;

  // Band, parity and interior row-sum invariants; throws std::logic_error.
  void check_invariants() const;

  NMatrix cropped(int window) const;
  bool operator==(const NMatrix& o) const;
  bool operator!=(const NMatrix& o) const { return !(*this == o); }

  // {p, d, window, convention:"row-source", entries: decimal strings}.
  std::string to_json() const;

 private:
  int p_, d_, window_;
  std::vector<BigInt> e_;
  size_t idx(int i, int j) const;
};

NMatrix n1(int p, int window);

// Exact N_d; internal arithmetic runs at window + d and is cropped, so no
// truncation artifact reaches a reported entry.
NMatrix nd_recurrence(int p, int d, int window);

// Brute-force N_d at the lexicographically first monic irreducible of
// degree d. Throws BudgetExceeded when p^d > budget.
NMatrix nd_oracle(int p, int d, int window, long long budget = kDefaultBudget,
                  int threads = 1);

// Same, at an explicit place (for place-independence checks).
NMatrix nd_oracle_at(const Place& P, int window,
                     long long budget = kDefaultBudget, int threads = 1);

// Row `start` of the walk matrices A_0..A_t for N = nd: A_0 = I, A_1 = N,
// A_2 = A_1 N - (q+1) I, A_{s+1} = A_s N - q A_{s-1}, q = p^d. Entry j of
// vector s counts tree vertices at distance exactly s from class `start`
// isomorphic to class j. Requires start + t*d + d < window.
std::vector<std::vector<BigInt>> distance_profile_of(const NMatrix& nd, int start, int t);
std::vector<std::vector<BigInt>> distance_profile(int p, int d, int start, int t, int window);

// Classes reachable from S within the given radius at the matrix's degree.
std::set<int> expand_support(const NMatrix& nd, const std::set<int>& s, int radius);

// Iterated containment support: starting from {start}, expand by radius t_k
// at degree d_k for each (d_k, t_k) in the schedule.
std::set<int> ball_support(int p, int start,
                           const std::vector<std::pair<int, int>>& schedule,
                           int window);

struct ReciprocityReport {
  bool pass = true;
  int interior = 0;          // entries compared on [0, interior)^2
  int i = -1, j = -1;        // first discrepancy
  BigInt lhs, rhs;
  BigInt max_discrepancy;
};

// Checks A*B == B*A on the interior window [0, W - dA - dB).
ReciprocityReport reciprocity_check(const NMatrix& a, const NMatrix& b);

enum class MatrixMethod { Recurrence, Oracle };

ReciprocityReport reciprocity_check(int p, int d1, int d2, int window,
                                    MatrixMethod method,
                                    long long budget = kDefaultBudget,
                                    int threads = 1);

}  // namespace btq
