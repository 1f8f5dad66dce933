#include <doctest.h>

#include <random>

#include "bitrade/canon.hpp"
#include "bitrade/core.hpp"
#include "fixtures.hpp"

using namespace bitrade;
using namespace bitrade::testing;

namespace {

// T1 checked one point at a time, independently of validate().
bool product_is_identity(const TauTriple& t) {
  for (Point x = 0; x < t.size(); ++x) {
    if (t.tau(3).image(t.tau(2).image(t.tau(1).image(x))) != x) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validate: worked examples") {
  for (const TauTriple& t : {intercalate(), example2(), prism6()}) {
    const ValidationReport r = validate(t);
    CHECK(r.t1.pass);
    CHECK(r.t2.pass);
    CHECK(r.t3.pass);
    CHECK(r.transitive);
    CHECK(r.genus == 0);
    CHECK(product_is_identity(t));
  }
}

TEST_CASE("validate: failures carry a witness") {
  SUBCASE("fixed point") {
    const auto t = TauTriple::from_cycles(4, {{{{0, 1}},
                                               {{0, 2}, {1, 3}},
                                               {{0, 3}, {1, 2}}}});
    const ValidationReport r = validate(t);
    CHECK_FALSE(r.t3.pass);
    CHECK(r.t3.witness == 2);
    CHECK_FALSE(r.genus.has_value());
  }
  SUBCASE("product not the identity") {
    const auto t = TauTriple::from_cycles(4, {{{{0, 1}, {2, 3}},
                                               {{0, 2}, {1, 3}},
                                               {{0, 1}, {2, 3}}}});
    const ValidationReport r = validate(t);
    CHECK_FALSE(r.t1.pass);
    CHECK(r.t1.witness == 0);
  }
  SUBCASE("two cycles meeting twice") {
    // tau1 and tau3 share the cycle {0, 1}.
    const auto t = TauTriple::from_cycles(4, {{{{0, 1}, {2, 3}},
                                               {{0, 3}, {1, 2}},
                                               {{0, 1}, {2, 3}}}});
    CHECK_FALSE(validate(t).t2.pass);
  }
  SUBCASE("disjoint union is not transitive") {
    std::vector<Point> t1, t2, t3;
    for (int copy = 0; copy < 2; ++copy) {
      const TauTriple ic = intercalate();
      for (Point p = 0; p < 4; ++p) {
        t1.push_back(ic.tau(1).image(p) + 4 * copy);
        t2.push_back(ic.tau(2).image(p) + 4 * copy);
        t3.push_back(ic.tau(3).image(p) + 4 * copy);
      }
    }
    const ValidationReport r = validate(TauTriple::from_images(t1, t2, t3));
    CHECK(r.is_bitrade());
    CHECK_FALSE(r.transitive);
    // two spheres: order 12 = size 8 + 4, no integral genus
    CHECK_FALSE(r.genus.has_value());
  }
}

TEST_CASE("genus from cycle counts") {
  CHECK(genus(intercalate()) == 0);  // size 4, 6 cycles
  CHECK(example2().order() == 14);
  CHECK(genus(example2()) == 0);     // size 12, 4 + 5 + 5 cycles
  CHECK(prism6().order() == 8);
  CHECK(genus(prism6()) == 0);

  // A single 3-cycle in each direction: size 3, order 3, 2g = 2.
  const auto torus = TauTriple::from_cycles(
      3, {{{{0, 1, 2}}, {{0, 1, 2}}, {{0, 1, 2}}}});
  CHECK(genus(torus) == 1);
  // size 2, order 6 gives 2g = -2.
  const auto bad = TauTriple::from_cycles(
      2, {{{{0, 1}}, {{0, 1}}, {{0, 1}}}});
  CHECK_THROWS_AS(genus(bad), NonIntegralGenus);
}

TEST_CASE("from_pair reproduces the printed tau lists") {
  CHECK(from_pair(intercalate_pair()) == intercalate());
  CHECK(from_pair(example2_pair()) == example2());
}

TEST_CASE("from_pair rejects non-bitrades") {
  SUBCASE("shared entry") {
    TradePair p = intercalate_pair();
    p.entries_b.erase({0, 0, 1});
    p.entries_b.insert({0, 0, 0});
    CHECK_THROWS_AS(from_pair(p), NotABitrade);
  }
  SUBCASE("missing partner") {
    TradePair p = intercalate_pair();
    p.entries_b.erase({1, 1, 1});
    p.entries_b.insert({1, 1, 2});
    CHECK_THROWS_AS(from_pair(p), NotABitrade);
  }
  SUBCASE("size mismatch") {
    TradePair p = intercalate_pair();
    p.entries_b.erase({1, 1, 1});
    CHECK_THROWS_AS(from_pair(p), NotABitrade);
  }
  SUBCASE("two entries in one cell") {
    TradePair p = intercalate_pair();
    p.entries_a.insert({0, 0, 5});
    p.entries_b.insert({0, 0, 6});
    CHECK_THROWS_AS(from_pair(p), NotABitrade);
  }
}

TEST_CASE("from_pair rejects non-separated bitrades") {
  // Two intercalates sharing rows 0 and 1 but on disjoint columns and
  // symbols: each row then holds two tau1 cycles.
  TradePair p = intercalate_pair();
  for (const Entry& e : intercalate_pair().entries_a) {
    p.entries_a.insert({e.row, e.column + 2, e.symbol + 2});
  }
  for (const Entry& e : intercalate_pair().entries_b) {
    p.entries_b.insert({e.row, e.column + 2, e.symbol + 2});
  }
  CHECK_THROWS_AS(from_pair(p), NotSeparated);
}

TEST_CASE("to_pair names lines by cycle id") {
  // Rows, columns and symbols of the intercalate all come out as {0, 1};
  // U-star row (000,011) = cycle 0 of tau1 holds (000,110) = symbol 0 in
  // column (000,101) = cycle 0 of tau2.
  const TradePair u = to_pair(intercalate());
  CHECK(u.entries_a ==
        std::set<Entry>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(u.entries_b ==
        std::set<Entry>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});

  const TradePair e2 = to_pair(example2());
  CHECK(e2.entries_a.size() == 12);
  CHECK(e2.entries_b.size() == 12);
  CHECK(canonical_form(from_pair(e2)).form ==
        canonical_form(example2()).form);
  CHECK(canonical_form(from_pair(to_pair(prism6()))).form ==
        canonical_form(prism6()).form);
}

TEST_CASE("inverse") {
  CHECK(inverse(intercalate()) == intercalate());

  const TauTriple inv = inverse(example2());
  const ValidationReport r = validate(inv);
  CHECK(r.is_bitrade());
  CHECK(r.genus == 0);

  CHECK(brute_force_isomorphic(inverse(prism6()), prism6()));

  // Inverting twice returns to the same class.
  CHECK(canonical_form(inverse(inverse(example2()))).form ==
        canonical_form(example2()).form);
}

TEST_CASE("inverse swaps the two squares") {
  TradePair swapped = example2_pair();
  std::swap(swapped.entries_a, swapped.entries_b);
  CHECK(canonical_form(from_pair(swapped)).form ==
        canonical_form(inverse(example2())).form);
}

TEST_CASE("relabelling preserves validity and genus") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto theta = random_relabelling(12, rng);
    const TauTriple t = example2().relabelled(theta);
    CHECK(conjugates(example2(), t, theta));
    CHECK(validate(t).genus == 0);
  }
}

TEST_CASE("bicyclic detection") {
  CHECK(is_bicyclic(intercalate()));
  CHECK(is_bicyclic(prism6()));
  CHECK_FALSE(is_bicyclic(example2()));
}
