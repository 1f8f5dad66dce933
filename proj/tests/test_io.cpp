#include <doctest.h>

#include <random>

#include "bitrade/io.hpp"
#include "fixtures.hpp"

using namespace bitrade;
using namespace bitrade::testing;

TEST_CASE(".tau text is in cycle normal form") {
  CHECK(format_tau(prism6()) ==
        "size 6\n"
        "t1 (0 1 2)(3 5 4)\n"
        "t2 (0 3)(1 4)(2 5)\n"
        "t3 (0 4)(1 5)(2 3)\n");
}

TEST_CASE(".tau parses any cycle rotation and order") {
  const TauTriple t = parse_tau(
      "size 6\n"
      "t2 (5 2)(4 1) (3 0)\n"
      "\n"
      "t1 (4 3 5)(2 0 1)\n"
      "t3 (3 2)(0 4)(5 1)\n");
  CHECK(t == prism6());
}

TEST_CASE(".tau round trip on relabelled triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const TauTriple t = example2().relabelled(random_relabelling(12, rng));
    const std::string text = format_tau(t);
    CHECK(parse_tau(text) == t);
    CHECK(format_tau(parse_tau(text)) == text);
  }
}

TEST_CASE(".tau parse errors name line and column") {
  auto error_at = [](const char* text) {
    try {
      parse_tau(text);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair{0, 0};
  };
  CHECK(error_at("sz 4\n") == std::pair{1, 3});
  CHECK(error_at("size 4\nt1 (0 1)(2 9)\n") == std::pair{2, 12});
  CHECK(error_at("size 4\nt1 (0 1)(1 2)\n") == std::pair{2, 10});
  CHECK(error_at("size 4\nt1 (0 1\n") == std::pair{2, 8});
  CHECK(error_at("size 4\nt4 (0 1)\n") == std::pair{2, 1});
  CHECK(error_at("size 4\nt1 (0 1)\nt1 (0 1)\n") == std::pair{3, 1});
  CHECK(error_at("size 4\nt1 (0 1)\nt2 (0 1)\n").first == 3);  // missing t3
}

TEST_CASE(".trade text lists A then B, each ascending") {
  CHECK(format_trade(intercalate_pair()) ==
        "A 0 0 0\nA 0 1 1\nA 1 0 1\nA 1 1 0\n"
        "B 0 0 1\nB 0 1 0\nB 1 0 0\nB 1 1 1\n");
  const TradePair p = parse_trade("B 1 1 1\nA 1 1 0\nA 0 0 0\nB 0 0 1\n");
  CHECK(p.entries_a.size() == 2);
  CHECK(p.entries_b.size() == 2);
  CHECK(format_trade(parse_trade(format_trade(example2_pair()))) ==
        format_trade(example2_pair()));
}

TEST_CASE(".trade parse errors") {
  CHECK_THROWS_AS(parse_trade("C 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_trade("A 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_trade("A 0 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_trade("A 0 0 0\nA 0 0 0\n"), ParseError);
}

TEST_CASE("format is detected from the first token") {
  CHECK(std::holds_alternative<TauTriple>(parse_bitrade(format_tau(prism6()))));
  CHECK(std::holds_alternative<TradePair>(
      parse_bitrade(format_trade(example2_pair()))));
  CHECK_THROWS_AS(parse_bitrade("hello"), ParseError);
  CHECK_THROWS_AS(parse_bitrade(""), ParseError);
}
