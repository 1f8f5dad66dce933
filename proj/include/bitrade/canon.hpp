#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bitrade/core.hpp"
#include "bitrade/moves.hpp"

namespace bitrade {

// Cycle-end marker in canonical codes.
inline constexpr int kCycleEnd = -1;

// The breadth-first cycle listing of a triple. Labels are 1..size, each
// cycle is followed by kCycleEnd, and codes compare lexicographically.
struct CanonicalForm {
  std::vector<int> code;

  // Largest label, i.e. the number of points.
  int size() const;
  // Number of cycle-end markers, i.e. the total cycle count.
  int order() const;

  // Space separated integers on one line, markers included.
  std::string to_string() const;
  static CanonicalForm parse(std::string_view text);

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// forward[p] is the 0-based canonical label of point p.
struct Relabelling {
  std::vector<Point> forward;
  std::vector<Point> inverse;
};

// The code of the traversal seeded at `start`. Requires a transitive triple.
CanonicalForm canonical_code_from(const TauTriple& t, Point start);

// Rebuilds the labelled triple (labels shifted to 0-based) a code describes.
// Throws BitradeError if the code is not a well-formed traversal record.
TauTriple decode_canonical_form(const CanonicalForm& form);

// Result of running the traversal from every start point.
struct CanonicalAnalysis {
  CanonicalForm form;
  // One relabelling per start point that attains the minimum code, in
  // ascending order of start point.
  std::vector<Relabelling> minimizers;

  const Relabelling& relabelling() const { return minimizers.front(); }
  std::size_t automorphism_count() const { return minimizers.size(); }
};

// Throws BitradeError if t is not transitive.
CanonicalAnalysis analyze(const TauTriple& t);

struct CanonicalResult {
  CanonicalForm form;
  Relabelling relabelling;
};

CanonicalResult canonical_form(const TauTriple& t);

// The canonically relabelled triple (Z hat).
TauTriple canonical_triple(const TauTriple& t);

struct AutGroup {
  // Each element theta satisfies tau_i^theta = tau_i; elements[i][p] is the
  // image of p.
  std::vector<std::vector<Point>> elements;

  std::size_t order() const { return elements.size(); }
};

AutGroup automorphisms(const TauTriple& t);
AutGroup automorphisms(const CanonicalAnalysis& analysis);

// The lexicographically largest contraction site of the canonical triple,
// expressed in t's labels. Throws NoParent if there is none.
SlideSite canonical_parent_site(const TauTriple& t,
                                const CanonicalAnalysis& analysis);

struct ParentChoice {
  TauTriple parent;
  SlideSite site;
};

// Contracts t at canonical_parent_site. Throws NoParent.
ParentChoice canonical_parent(const TauTriple& t);

// True iff an automorphism of `child` carries actual_site onto the canonical
// parent site. Throws NoParent.
bool is_canonical_augmentation(const TauTriple& child, SlideSite actual_site);
bool is_canonical_augmentation(const TauTriple& child,
                               const CanonicalAnalysis& analysis,
                               SlideSite actual_site);

}  // namespace bitrade
