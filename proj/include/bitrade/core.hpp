#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "bitrade/errors.hpp"
#include "bitrade/permutation.hpp"

namespace bitrade {

// A bitrade in [tau1, tau2, tau3] form: three permutations of the points
// 0..size()-1. Directions are numbered 1, 2, 3. The axioms are not enforced
// on construction; use validate().
class TauTriple {
 public:
  TauTriple() = default;
  TauTriple(Permutation tau1, Permutation tau2, Permutation tau3);

  static TauTriple from_images(std::vector<Point> tau1, std::vector<Point> tau2,
                               std::vector<Point> tau3);
  static TauTriple from_cycles(
      int size, const std::array<std::vector<std::vector<Point>>, 3>& cycles);

  int size() const { return taus_[0].size(); }
  // Total number of cycles of the three permutations.
  int order() const {
    return taus_[0].num_cycles() + taus_[1].num_cycles() +
           taus_[2].num_cycles();
  }

  const Permutation& tau(int direction) const { return taus_[direction - 1]; }

  // The triple conjugated by theta, where relabel[p] is the image of p.
  TauTriple relabelled(std::span<const Point> relabel) const;

  friend bool operator==(const TauTriple&, const TauTriple&) = default;

 private:
  std::array<Permutation, 3> taus_;
};

// k = j + 1 and l = k + 1, computed on {1, 2, 3}.
constexpr int next_direction(int j) { return j % 3 + 1; }

struct Entry {
  int row = 0;
  int column = 0;
  int symbol = 0;

  int coordinate(int r) const {
    return r == 1 ? row : (r == 2 ? column : symbol);
  }

  friend auto operator<=>(const Entry&, const Entry&) = default;
};

// A bitrade in array form: the two partial latin squares as entry sets.
struct TradePair {
  std::set<Entry> entries_a;
  std::set<Entry> entries_b;

  friend bool operator==(const TradePair&, const TradePair&) = default;
};

struct AxiomCheck {
  bool pass = true;
  std::optional<Point> witness;
};

struct ValidationReport {
  AxiomCheck t1;
  AxiomCheck t2;
  AxiomCheck t3;
  bool transitive = false;
  // Absent when (T1)-(T3) fail or the genus formula is not integral.
  std::optional<int> genus;

  bool is_bitrade() const { return t1.pass && t2.pass && t3.pass; }
  bool is_spherical() const { return is_bitrade() && genus == 0; }
};

ValidationReport validate(const TauTriple& t);

// g = (size - order + 2) / 2. Throws NonIntegralGenus if that is odd or
// negative.
int genus(const TauTriple& t);

// Points are the entries of entries_a in ascending (row, column, symbol)
// order. Throws NotABitrade or NotSeparated.
TauTriple from_pair(const TradePair& p);

// Rows, columns and symbols are the cycle ids of tau1, tau2, tau3.
TradePair to_pair(const TauTriple& t);

// [tau1^-1, tau2^-1, tau2 tau1] on the same points.
TauTriple inverse(const TauTriple& t);

// Some tau_j has exactly two cycles.
bool is_bicyclic(const TauTriple& t);

}  // namespace bitrade
