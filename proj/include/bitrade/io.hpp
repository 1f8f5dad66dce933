#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "bitrade/core.hpp"

namespace bitrade {

// ".tau" text:
//   size N
//   t1 (0 1 2)(3 5 4)
//   t2 ...
//   t3 ...
// Cycles are printed min-first and sorted by minimum; fixed points omitted.
std::string format_tau(const TauTriple& t);
TauTriple parse_tau(std::string_view text);

// ".trade" text: one "A r c s" line per entry of entries_a, then one
// "B r c s" line per entry of entries_b, each block ascending.
std::string format_trade(const TradePair& p);
TradePair parse_trade(std::string_view text);

// Cycle notation for a single permutation, e.g. "(0 1 2)(3 5 4)".
std::string format_cycles(const Permutation& p);

using BitradeText = std::variant<TauTriple, TradePair>;

// Picks the format from the first token: "size" or "A"/"B".
BitradeText parse_bitrade(std::string_view text);

}  // namespace bitrade
