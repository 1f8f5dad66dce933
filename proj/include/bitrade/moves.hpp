#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "bitrade/core.hpp"

namespace bitrade {

// Where a slide move happens: a direction j in {1, 2, 3} and a point (x for
// an expansion, u for a contraction). Ordered lexicographically by
// (direction, point).
struct SlideSite {
  int direction = 1;
  Point point = 0;

  friend auto operator<=>(const SlideSite&, const SlideSite&) = default;
};

// (1) the j-cycle at x has length >= 3 and (2) the k-cycle through x and the
// l-cycle through x tau_j share no point.
bool is_expansion_site(const TauTriple& t, SlideSite s);

// Sorted by (direction, point).
std::vector<SlideSite> expansion_sites(const TauTriple& t);

// Adds the point u = t.size(): tau_j splits (a, x, w, b, ...) into
// (a, u, b, ...) and (x, w); tau_k gets u after x; tau_l gets u before w.
// Throws InvalidSite if s is not an expansion site.
TauTriple slide_expand(const TauTriple& t, SlideSite s);

// The contraction site in slide_expand(t, s) that undoes it.
inline SlideSite undo_site(const TauTriple& parent, SlideSite s) {
  return {s.direction, parent.size()};
}

// Removes u and closes the gap (points above u move down by one). Returns
// nothing unless the move applies and the result satisfies (T1)-(T3).
std::optional<TauTriple> try_slide_contract(const TauTriple& t, SlideSite s);

// Throws InvalidSite where try_slide_contract returns nothing.
TauTriple slide_contract(const TauTriple& t, SlideSite s);

bool is_contraction_site(const TauTriple& t, SlideSite s);

// Sorted by (direction, point).
std::vector<SlideSite> contraction_sites(const TauTriple& t);

bool has_contraction_site(const TauTriple& t);

}  // namespace bitrade
