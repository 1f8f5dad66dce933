#include "bitrade/core.hpp"

#include <map>
#include <string>
#include <utility>

namespace bitrade {

TauTriple::TauTriple(Permutation tau1, Permutation tau2, Permutation tau3)
    : taus_{std::move(tau1), std::move(tau2), std::move(tau3)} {
  if (taus_[0].size() != taus_[1].size() ||
      taus_[0].size() != taus_[2].size()) {
    throw std::invalid_argument("tau permutations act on different point sets");
  }
}

TauTriple TauTriple::from_images(std::vector<Point> tau1,
                                 std::vector<Point> tau2,
                                 std::vector<Point> tau3) {
  return TauTriple(Permutation(std::move(tau1)), Permutation(std::move(tau2)),
                   Permutation(std::move(tau3)));
}

TauTriple TauTriple::from_cycles(
    int size, const std::array<std::vector<std::vector<Point>>, 3>& cycles) {
  return TauTriple(Permutation::from_cycles(size, cycles[0]),
                   Permutation::from_cycles(size, cycles[1]),
                   Permutation::from_cycles(size, cycles[2]));
}

TauTriple TauTriple::relabelled(std::span<const Point> relabel) const {
  return TauTriple(taus_[0].conjugated(relabel), taus_[1].conjugated(relabel),
                   taus_[2].conjugated(relabel));
}

ValidationReport validate(const TauTriple& t) {
  ValidationReport report;
  const int n = t.size();
  const Permutation& t1 = t.tau(1);
  const Permutation& t2 = t.tau(2);
  const Permutation& t3 = t.tau(3);

  for (Point x = 0; x < n; ++x) {
    if (t3.image(t2.image(t1.image(x))) != x) {
      report.t1 = {false, x};
      break;
    }
  }

  // Two cycles of different permutations meet at most once: every point
  // must give a distinct (cycle of tau_i, cycle of tau_j) pair.
  std::vector<char> seen;
  for (int i = 1; i <= 3 && report.t2.pass; ++i) {
    for (int j = i + 1; j <= 3 && report.t2.pass; ++j) {
      const Permutation& a = t.tau(i);
      const Permutation& b = t.tau(j);
      seen.assign(static_cast<std::size_t>(a.num_cycles()) * b.num_cycles(), 0);
      for (Point x = 0; x < n; ++x) {
        char& cell = seen[static_cast<std::size_t>(a.cycle_of(x)) *
                              b.num_cycles() +
                          b.cycle_of(x)];
        if (cell) {
          report.t2 = {false, x};
          break;
        }
        cell = 1;
      }
    }
  }

  for (int j = 1; j <= 3 && report.t3.pass; ++j) {
    for (Point x = 0; x < n; ++x) {
      if (t.tau(j).image(x) == x) {
        report.t3 = {false, x};
        break;
      }
    }
  }

  if (n > 0) {
    std::vector<char> reached(n, 0);
    std::vector<Point> stack{0};
    reached[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const Point x = stack.back();
      stack.pop_back();
      for (int j = 1; j <= 3; ++j) {
        const Point y = t.tau(j).image(x);
        if (!reached[y]) {
          reached[y] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    report.transitive = count == n;
  }

  if (report.is_bitrade()) {
    const int twice_genus = t.size() - t.order() + 2;
    if (twice_genus >= 0 && twice_genus % 2 == 0) {
      report.genus = twice_genus / 2;
    }
  }
  return report;
}

int genus(const TauTriple& t) {
  const int twice_genus = t.size() - t.order() + 2;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw NonIntegralGenus("size " + std::to_string(t.size()) + " and order " +
                           std::to_string(t.order()) +
                           " give a non-integral genus");
  }
  return twice_genus / 2;
}

namespace {

using Key = std::pair<int, int>;

// The two coordinates of e other than r.
Key key_without(const Entry& e, int r) {
  const int s = next_direction(r);
  const int u = next_direction(s);
  return {e.coordinate(std::min(s, u)), e.coordinate(std::max(s, u))};
}

std::string describe(const Entry& e) {
  return "(" + std::to_string(e.row) + "," + std::to_string(e.column) + "," +
         std::to_string(e.symbol) + ")";
}

std::map<Key, int> index_by_key(const std::vector<Entry>& entries, int r,
                                const char* which) {
  std::map<Key, int> index;
  for (int i = 0; i < static_cast<int>(entries.size()); ++i) {
    if (!index.emplace(key_without(entries[i], r), i).second) {
      throw NotABitrade(std::string("entries_") + which + " has two entries " +
                        "agreeing off coordinate " + std::to_string(r) +
                        ", e.g. " + describe(entries[i]));
    }
  }
  return index;
}

}  // namespace

TauTriple from_pair(const TradePair& p) {
  for (const Entry& e : p.entries_a) {
    if (p.entries_b.contains(e)) {
      throw NotABitrade("entry " + describe(e) + " is in both squares");
    }
  }
  if (p.entries_a.size() != p.entries_b.size()) {
    throw NotABitrade("squares have different numbers of entries");
  }

  const std::vector<Entry> a(p.entries_a.begin(), p.entries_a.end());
  const std::vector<Entry> b(p.entries_b.begin(), p.entries_b.end());
  const int n = static_cast<int>(a.size());

  // beta_inv[r][i]: the entry of B agreeing with A[i] off coordinate r.
  // beta[r][i]: the entry of A agreeing with B[i] off coordinate r.
  std::array<std::vector<int>, 4> beta;
  std::array<std::vector<int>, 4> beta_inv;
  for (int r = 1; r <= 3; ++r) {
    const auto a_index = index_by_key(a, r, "a");
    const auto b_index = index_by_key(b, r, "b");
    beta[r].assign(n, -1);
    beta_inv[r].assign(n, -1);
    for (const auto& [key, ai] : a_index) {
      auto it = b_index.find(key);
      if (it == b_index.end()) {
        throw NotABitrade("entry " + describe(a[ai]) +
                          " has no partner in entries_b off coordinate " +
                          std::to_string(r));
      }
      beta_inv[r][ai] = it->second;
      beta[r][it->second] = ai;
    }
    for (int bi = 0; bi < n; ++bi) {
      if (beta[r][bi] == -1) {
        throw NotABitrade("entry " + describe(b[bi]) +
                          " has no partner in entries_a off coordinate " +
                          std::to_string(r));
      }
    }
  }

  // tau1 = beta2^-1 beta3, tau2 = beta3^-1 beta1, tau3 = beta1^-1 beta2.
  std::array<std::vector<Point>, 3> images;
  for (int j = 1; j <= 3; ++j) {
    const int first = next_direction(j);
    const int second = next_direction(first);
    images[j - 1].resize(n);
    for (int i = 0; i < n; ++i) {
      images[j - 1][i] = beta[second][beta_inv[first][i]];
    }
  }
  TauTriple t = TauTriple::from_images(std::move(images[0]),
                                       std::move(images[1]),
                                       std::move(images[2]));

  static constexpr const char* kLineName[] = {"", "row", "column", "symbol"};
  for (int j = 1; j <= 3; ++j) {
    std::set<int> lines;
    for (const Entry& e : a) lines.insert(e.coordinate(j));
    if (static_cast<int>(lines.size()) != t.tau(j).num_cycles()) {
      throw NotSeparated(std::string("some ") + kLineName[j] +
                         " splits into more than one cycle of tau" +
                         std::to_string(j));
    }
  }

  const ValidationReport report = validate(t);
  if (!report.is_bitrade()) {
    throw NotABitrade("derived tau permutations violate the bitrade axioms");
  }
  return t;
}

TradePair to_pair(const TauTriple& t) {
  TradePair pair;
  const Permutation& t1 = t.tau(1);
  const Permutation& t2 = t.tau(2);
  const Permutation& t3 = t.tau(3);
  for (Point x = 0; x < t.size(); ++x) {
    pair.entries_a.insert({t1.cycle_of(x), t2.cycle_of(x), t3.cycle_of(x)});
    // x tau1 = x', x' tau2 = x'', x'' tau3 = x.
    const Point x1 = t1.image(x);
    const Point x2 = t2.image(x1);
    pair.entries_b.insert({t1.cycle_of(x), t2.cycle_of(x1), t3.cycle_of(x2)});
  }
  return pair;
}

TauTriple inverse(const TauTriple& t) {
  return TauTriple(t.tau(1).inverse(), t.tau(2).inverse(),
                   t.tau(2).then(t.tau(1)));
}

bool is_bicyclic(const TauTriple& t) {
  for (int j = 1; j <= 3; ++j) {
    if (t.tau(j).num_cycles() == 2) return true;
  }
  return false;
}

}  // namespace bitrade
