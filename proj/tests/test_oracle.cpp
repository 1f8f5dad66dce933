#include <doctest.h>

#include "bitrade/oracle.hpp"
#include "fixtures.hpp"

using namespace bitrade;
using namespace bitrade::testing;

TEST_CASE("naive closure counts") {
  const CensusTable eight = naive_enumerate(8);
  CHECK(eight.counts ==
        std::map<int, std::uint64_t>{{4, 1}, {6, 3}, {7, 1}, {8, 6}});

  const CensusTable thirteen = naive_enumerate(13);
  CHECK(thirteen.count(5) == 0);
  CHECK(thirteen.count(9) == 9);
  CHECK(thirteen.count(11) == 51);
  CHECK(thirteen.count(12) == 198);
  CHECK(thirteen.count(13) == 470);
}

TEST_CASE("naive closure and canonical augmentation find the same classes") {
  for (int max_size = 4; max_size <= 11; ++max_size) {
    const CensusTable oracle = naive_enumerate(max_size, kDefaultOracleBound, true);
    const CensusTable search = enumerate_all(max_size, 1, 0, true);
    CHECK(oracle.counts == search.counts);
    CHECK(oracle.format_forms() == search.format_forms());
  }
}

TEST_CASE("oracle bound") {
  CHECK_THROWS_AS(naive_enumerate(14), BoundExceeded);
  CHECK_THROWS_AS(naive_enumerate(9, 8), BoundExceeded);
  CHECK_THROWS_AS(naive_enumerate(3), InvalidSize);
}

TEST_CASE("class invariants hold on the closure") {
  const ClassStore store = naive_closure(10);
  const InvariantReport report = verify_class_invariants(store);
  CHECK(report.ok());
  CHECK(report.classes_checked == 1 + 3 + 1 + 6 + 9 + 30);
  for (const auto& v : report.violations) MESSAGE(v);
}

TEST_CASE("the size 7 class is its own inverse") {
  const ClassStore store = naive_closure(7);
  REQUIRE(store.count(7) == 1);
  const CanonicalForm only = *store.classes().at(7).begin();
  CHECK(canonical_form(inverse(decode_canonical_form(only))).form == only);
}

TEST_CASE("corrupted codes are reported") {
  const ClassStore clean = naive_closure(8);
  const CanonicalForm original = *clean.classes().at(8).begin();

  SUBCASE("two labels swapped inside a cycle") {
    ClassStore store = clean;
    CanonicalForm bad = original;
    // The second cycle starts at code[k]; swap its 2nd and 3rd entries
    // when it has them, otherwise the first cycle's.
    std::size_t start = 0;
    while (bad.code[start] != kCycleEnd) ++start;
    ++start;
    std::swap(bad.code[start + 1], bad.code[start + 2]);
    REQUIRE(bad != original);
    store.insert(8, bad);
    const InvariantReport report = verify_class_invariants(store);
    CHECK_FALSE(report.ok());
  }
  SUBCASE("last label overwritten") {
    ClassStore store = clean;
    CanonicalForm bad = original;
    bad.code.back() = kCycleEnd;
    bad.code[bad.code.size() - 2] = 1;
    store.insert(8, bad);
    CHECK_FALSE(verify_class_invariants(store).ok());
  }
  SUBCASE("missing inverse") {
    ClassStore store;
    for (const auto& [size, codes] : clean.classes()) {
      for (const auto& f : codes) store.insert(size, f);
    }
    // A size-9 class whose inverse is a different class, stored alone.
    const ClassStore nine = naive_closure(9);
    bool planted = false;
    for (const CanonicalForm& f : nine.classes().at(9)) {
      const CanonicalForm inv =
          canonical_form(inverse(decode_canonical_form(f))).form;
      if (inv != f) {
        store.insert(9, f);
        planted = true;
        break;
      }
    }
    REQUIRE(planted);
    const InvariantReport report = verify_class_invariants(store);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations.front().find("inverse") != std::string::npos);
  }
}
