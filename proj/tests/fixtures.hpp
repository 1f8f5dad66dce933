#pragma once

// Shared test data and brute-force helpers. Nothing here uses the canonical
// form, so it can serve as an independent check on it.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bitrade/core.hpp"

namespace bitrade::testing {

// Example bitrade entries written as (row, column, symbol).
inline TradePair intercalate_pair() {
  return {{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}},
          {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}}};
}

// 000 -> 0, 011 -> 1, 101 -> 2, 110 -> 3.
inline TauTriple intercalate() {
  return TauTriple::from_cycles(4, {{{{0, 1}, {2, 3}},
                                     {{0, 2}, {1, 3}},
                                     {{0, 3}, {1, 2}}}});
}

// The 12-entry spherical bitrade on a 5x5 grid.
inline TradePair example2_pair() {
  return {{{0, 0, 0}, {0, 2, 2}, {0, 4, 4}, {1, 3, 4}, {1, 4, 2}, {2, 0, 1},
           {2, 1, 3}, {2, 2, 0}, {2, 3, 2}, {3, 0, 4}, {3, 1, 1}, {3, 3, 3}},
          {{0, 0, 4}, {0, 2, 0}, {0, 4, 2}, {1, 3, 2}, {1, 4, 4}, {2, 0, 0},
           {2, 1, 1}, {2, 2, 2}, {2, 3, 3}, {3, 0, 1}, {3, 1, 3}, {3, 3, 4}}};
}

// The printed cycle lists with entries renamed by lexicographic rank:
// 000 0, 022 1, 044 2, 134 3, 142 4, 201 5, 213 6, 220 7, 232 8, 304 9,
// 311 10, 333 11.
inline TauTriple example2() {
  return TauTriple::from_cycles(
      12, {{{{0, 1, 2}, {3, 4}, {5, 6, 8, 7}, {9, 11, 10}},
            {{0, 9, 5}, {6, 10}, {1, 7}, {3, 8, 11}, {2, 4}},
            {{0, 7}, {5, 10}, {1, 8, 4}, {6, 11}, {2, 3, 9}}}});
}

// A size-6 bicyclic triple.
inline TauTriple prism6() {
  return TauTriple::from_cycles(6, {{{{0, 1, 2}, {3, 5, 4}},
                                     {{0, 3}, {1, 4}, {2, 5}},
                                     {{0, 4}, {1, 5}, {2, 3}}}});
}

inline std::vector<Point> random_relabelling(int n, std::mt19937& rng) {
  std::vector<Point> theta(n);
  std::iota(theta.begin(), theta.end(), 0);
  std::shuffle(theta.begin(), theta.end(), rng);
  return theta;
}

// theta (theta[p] = image of p) conjugates a onto b.
inline bool conjugates(const TauTriple& a, const TauTriple& b,
                       const std::vector<Point>& theta) {
  for (int j = 1; j <= 3; ++j) {
    for (Point p = 0; p < a.size(); ++p) {
      if (theta[a.tau(j).image(p)] != b.tau(j).image(theta[p])) return false;
    }
  }
  return true;
}

// Exhaustive search over all of Sym(n).
inline bool brute_force_isomorphic(const TauTriple& a, const TauTriple& b) {
  if (a.size() != b.size()) return false;
  std::vector<Point> theta(a.size());
  std::iota(theta.begin(), theta.end(), 0);
  do {
    if (conjugates(a, b, theta)) return true;
  } while (std::next_permutation(theta.begin(), theta.end()));
  return false;
}

inline std::vector<std::vector<Point>> brute_force_automorphisms(
    const TauTriple& t) {
  std::vector<std::vector<Point>> result;
  std::vector<Point> theta(t.size());
  std::iota(theta.begin(), theta.end(), 0);
  do {
    if (conjugates(t, t, theta)) result.push_back(theta);
  } while (std::next_permutation(theta.begin(), theta.end()));
  return result;
}

}  // namespace bitrade::testing
