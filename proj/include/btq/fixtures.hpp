#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "btq/graph.hpp"

// Regression targets for the known small quotient graphs, with multiplicity
// labels as polynomials in p instantiated at runtime. Off-diagonal
// multiplicities are exact. Loop labels in the source figures are ambiguous
// by one unit (it is not fixed whether they count orbit-ends or geometric
// edges, and one figure carries a swapped pair), so loops compare with a
// +-1 tolerance and deviations are reported as warnings, not failures.

namespace btq {

struct FigureExpectation {
  int d;
  int components;
  // Expected extra-edge multiplicities keyed by vertex pair (i < j).
  std::map<std::pair<int, int>, long long> extras;
  // Pairs that must NOT carry an extra edge (beyond any line edge).
  std::vector<std::pair<int, int>> forbidden_extras;
  // Loop labels as drawn, keyed by vertex.
  std::map<int, long long> loops;
  int window;  // window the figure is checked at
};

// d in {1, 2, 4, 5, 6}.
FigureExpectation paper_figure(int d, int p);

struct FixtureReport {
  std::vector<std::string> passes;
  std::vector<std::string> warnings;  // loop labels off by one
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

FixtureReport check_figure(const QuotientGraph& g, const FigureExpectation& fx);

// Builds and checks the figures for the given degrees.
FixtureReport check_figures(int p, const std::vector<int>& degrees,
                            long long budget = kDefaultBudget, int threads = 1);

}  // namespace btq
