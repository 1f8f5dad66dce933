#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bitrade/canon.hpp"
#include "bitrade/enumerator.hpp"

namespace bitrade {

// Brute-force closure used to cross-check the canonical augmentation
// search. It never consults canonical parents or augmentation acceptance.

inline constexpr int kDefaultOracleBound = 13;

class ClassStore {
 public:
  // True if the code was new.
  bool insert(int size, CanonicalForm form) {
    return classes_[size].insert(std::move(form)).second;
  }
  bool contains(int size, const CanonicalForm& form) const {
    auto it = classes_.find(size);
    return it != classes_.end() && it->second.contains(form);
  }
  std::size_t count(int size) const {
    auto it = classes_.find(size);
    return it == classes_.end() ? 0 : it->second.size();
  }
  const std::map<int, std::set<CanonicalForm>>& classes() const {
    return classes_;
  }

  CensusTable census(bool keep_forms = false) const;

 private:
  std::map<int, std::set<CanonicalForm>> classes_;
};

// Every class reachable from the bicyclic roots of even size <= max_size by
// slide expansions and inversions, up to max_size. Throws BoundExceeded when
// max_size > bound.
ClassStore naive_closure(int max_size, int bound = kDefaultOracleBound);

CensusTable naive_enumerate(int max_size, int bound = kDefaultOracleBound,
                            bool keep_forms = false);

struct InvariantReport {
  std::size_t classes_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Rebuilds every stored class from its code and checks: the code decodes
// and is canonical; (T1)-(T3) hold with genus 0; the trade-pair round trip
// keeps the code; |Aut| <= size; the inverse class is stored too.
InvariantReport verify_class_invariants(const ClassStore& store);

}  // namespace bitrade
