#include "bitrade/oracle.hpp"

namespace bitrade {

CensusTable ClassStore::census(bool keep_forms) const {
  CensusTable table;
  for (const auto& [size, codes] : classes_) {
    table.add(size, codes.size());
    if (keep_forms) table.forms[size].assign(codes.begin(), codes.end());
  }
  return table;
}

ClassStore naive_closure(int max_size, int bound) {
  if (max_size > bound) {
    throw BoundExceeded("oracle max size " + std::to_string(max_size) +
                        " exceeds bound " + std::to_string(bound));
  }
  if (max_size < 4) throw InvalidSize("max size must be >= 4");

  ClassStore store;
  for (int size = 4; size <= max_size; size += 2) {
    for (const TauTriple& root : bicyclic_roots(size)) {
      store.insert(size, canonical_form(root).form);
    }
  }

  for (int size = 4; size <= max_size; ++size) {
    // Close this size under inversion, then expand everything in it.
    std::vector<TauTriple> members;
    if (auto it = store.classes().find(size); it != store.classes().end()) {
      for (const CanonicalForm& f : it->second) {
        members.push_back(decode_canonical_form(f));
      }
    }
    const std::size_t originals = members.size();
    for (std::size_t i = 0; i < originals; ++i) {
      TauTriple inv = inverse(members[i]);
      CanonicalResult canon = canonical_form(inv);
      if (store.insert(size, canon.form)) {
        members.push_back(decode_canonical_form(canon.form));
      }
    }
    if (size == max_size) break;
    for (const TauTriple& t : members) {
      for (const SlideSite& s : expansion_sites(t)) {
        store.insert(size + 1, canonical_form(slide_expand(t, s)).form);
      }
    }
  }
  return store;
}

CensusTable naive_enumerate(int max_size, int bound, bool keep_forms) {
  return naive_closure(max_size, bound).census(keep_forms);
}

InvariantReport verify_class_invariants(const ClassStore& store) {
  InvariantReport report;
  for (const auto& [size, codes] : store.classes()) {
    for (const CanonicalForm& form : codes) {
      ++report.classes_checked;
      const std::string where =
          "size " + std::to_string(size) + " [" + form.to_string() + "]: ";
      auto fail = [&](const std::string& what) {
        report.violations.push_back(where + what);
      };
      try {
        const TauTriple t = decode_canonical_form(form);
        if (t.size() != size) fail("stored under the wrong size");
        const ValidationReport v = validate(t);
        if (!v.is_bitrade()) {
          fail("violates (T1)-(T3)");
          continue;
        }
        if (v.genus != 0) fail("not spherical");
        const CanonicalAnalysis analysis = analyze(t);
        if (analysis.form != form) fail("code is not canonical");
        if (canonical_form(from_pair(to_pair(t))).form != analysis.form) {
          fail("trade pair round trip changes the class");
        }
        if (analysis.automorphism_count() > static_cast<std::size_t>(size)) {
          fail("automorphism group larger than the point set");
        }
        if (!store.contains(size, canonical_form(inverse(t)).form)) {
          fail("inverse class missing");
        }
      } catch (const std::exception& e) {
        fail(e.what());
      }
    }
  }
  return report;
}

}  // namespace bitrade
