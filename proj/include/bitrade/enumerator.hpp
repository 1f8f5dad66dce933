#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bitrade/canon.hpp"
#include "bitrade/core.hpp"
#include "bitrade/moves.hpp"

namespace bitrade {

// Number of tau-isomorphism classes per size, optionally with their codes.
struct CensusTable {
  std::map<int, std::uint64_t> counts;
  std::map<int, std::vector<CanonicalForm>> forms;

  void add(int size, std::uint64_t count = 1) { counts[size] += count; }
  void merge(const CensusTable& other);
  // Sorts each size's codes so output does not depend on visit order.
  void sort_forms();

  std::uint64_t count(int size) const {
    auto it = counts.find(size);
    return it == counts.end() ? 0 : it->second;
  }

  // "size<TAB>count" per line for every size from 4 to max_size.
  std::string format_counts(int max_size) const;
  // "size<TAB>code" per stored code, ascending size then code.
  std::string format_forms() const;
  static CensusTable parse_counts(std::string_view text);

  friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

// Lemma-style bicyclic constructions of an even size >= 4, one per
// tau-isomorphism class. Throws InvalidSize.
std::vector<TauTriple> bicyclic_roots(int size);

struct Child {
  TauTriple triple;
  SlideSite site;  // expansion site in the parent
  SlideSite undo;  // contraction site in the child that gives the parent back
};

// One expansion per Aut(t)-orbit of expansion sites (the least site of each
// orbit), in site order.
std::vector<Child> children(const TauTriple& t);
std::vector<Child> children(const TauTriple& t, const AutGroup& aut);

// One edge of the search tree: an expansion at `site`, followed by an
// inversion when `invert` is set.
struct TreeStep {
  SlideSite site;
  bool invert = false;

  friend bool operator==(const TreeStep&, const TreeStep&) = default;
};

using Visitor = std::function<void(const TauTriple&)>;

// Depth-first canonical augmentation below `root`, reporting every visited
// node of size <= max_size, the root included.
void canaug_spherical(const TauTriple& root, int max_size,
                      const Visitor& visitor);

// A subtree of the search: the root's canonical code plus the steps from
// the root to the subtree's entry node.
struct SearchTask {
  int id = 0;
  int max_size = 0;
  CanonicalForm root;
  std::vector<TreeStep> path;

  // Rebuilds the entry node.
  TauTriple replay() const;

  // Single line: id, max_size, root code and path, tab separated.
  std::string serialize() const;
  static SearchTask parse(std::string_view line);

  friend bool operator==(const SearchTask&, const SearchTask&) = default;
};

struct TaskPlan {
  std::vector<SearchTask> tasks;
  // Nodes shallower than the split depth, counted while planning.
  CensusTable prefix;
};

// Walks the tree to depth split_depth, emitting one task per node at that
// depth. Depth counts tree edges from a root.
TaskPlan split_tasks(int max_size, int split_depth, bool keep_forms = false);

CensusTable run_task(const SearchTask& task, bool keep_forms = false);

// Runs `tasks` on `workers` threads. on_done, if set, is called once per
// finished task under a lock. Results are merged in task order.
CensusTable run_tasks(const std::vector<SearchTask>& tasks, int workers,
                      bool keep_forms,
                      const std::function<void(const SearchTask&,
                                               const CensusTable&)>& on_done =
                          {});

CensusTable enumerate_all(int max_size, int workers = 1, int split_depth = 0,
                          bool keep_forms = false);

}  // namespace bitrade
