#include "bitrade/canon.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <utility>

namespace bitrade {

int CanonicalForm::size() const {
  int largest = 0;
  for (int v : code) largest = std::max(largest, v);
  return largest;
}

int CanonicalForm::order() const {
  return static_cast<int>(std::count(code.begin(), code.end(), kCycleEnd));
}

std::string CanonicalForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(code[i]);
  }
  return out;
}

CanonicalForm CanonicalForm::parse(std::string_view text) {
  CanonicalForm form;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (true) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\n' || *p == '\r')) {
      ++p;
    }
    if (p == end) break;
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || next == p) {
      throw ParseError(1, static_cast<int>(p - text.data()) + 1,
                       "expected an integer in canonical code");
    }
    if (value != kCycleEnd && value < 1) {
      throw ParseError(1, static_cast<int>(p - text.data()) + 1,
                       "canonical labels start at 1");
    }
    form.code.push_back(value);
    p = next;
  }
  return form;
}

namespace {

// Breadth-first cycle traversal with buffers reused across start points.
class Traverser {
 public:
  explicit Traverser(const TauTriple& t) : t_(t) {
    label_.resize(t.size());
    for (int d = 0; d < 3; ++d) visited_[d].resize(t.tau(d + 1).num_cycles());
    queue_.reserve(6 * static_cast<std::size_t>(t.size()) + 3);
    code_.reserve(3 * static_cast<std::size_t>(t.size()) + t.order());
  }

  // Returns <0 if the code from `start` is below *bound (or bound is null),
  // 0 if equal and >0 if above, in which case the traversal stops early.
  int run(Point start, const std::vector<int>* bound) {
    bound_ = bound;
    cmp_ = bound ? 0 : -1;
    std::fill(label_.begin(), label_.end(), -1);
    for (auto& v : visited_) std::fill(v.begin(), v.end(), 0);
    queue_.clear();
    code_.clear();
    next_label_ = 0;

    for (int d = 1; d <= 3; ++d) queue_.emplace_back(d, start);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const auto [d, v] = queue_[head];
      const Permutation& tau = t_.tau(d);
      char& seen = visited_[d - 1][tau.cycle_of(v)];
      if (seen) continue;
      seen = 1;

      Point p = v;
      do {
        if (label_[p] < 0) label_[p] = next_label_++;
        if (!emit(label_[p] + 1)) return 1;
        p = tau.image(p);
      } while (p != v);
      if (!emit(kCycleEnd)) return 1;

      const int e = next_direction(d);
      const int f = next_direction(e);
      const int lo = std::min(e, f);
      const int hi = std::max(e, f);
      p = v;
      do {
        if (!visited_[lo - 1][t_.tau(lo).cycle_of(p)]) queue_.emplace_back(lo, p);
        if (!visited_[hi - 1][t_.tau(hi).cycle_of(p)]) queue_.emplace_back(hi, p);
        p = tau.image(p);
      } while (p != v);
    }
    if (cmp_ == 0 && code_.size() < bound_->size()) cmp_ = -1;
    return cmp_;
  }

  const std::vector<int>& code() const { return code_; }
  int labelled() const { return next_label_; }

  Relabelling relabelling() const {
    Relabelling r;
    r.forward = label_;
    r.inverse.assign(label_.size(), -1);
    for (Point p = 0; p < static_cast<Point>(label_.size()); ++p) {
      r.inverse[label_[p]] = p;
    }
    return r;
  }

 private:
  bool emit(int value) {
    if (cmp_ == 0) {
      const std::size_t pos = code_.size();
      if (pos >= bound_->size() || value > (*bound_)[pos]) {
        cmp_ = 1;
        return false;
      }
      if (value < (*bound_)[pos]) cmp_ = -1;
    }
    code_.push_back(value);
    return true;
  }

  const TauTriple& t_;
  std::vector<int> label_;
  std::array<std::vector<char>, 3> visited_;
  std::vector<std::pair<int, Point>> queue_;
  std::vector<int> code_;
  const std::vector<int>* bound_ = nullptr;
  int cmp_ = 0;
  int next_label_ = 0;
};

void require_transitive(const Traverser& traverser, const TauTriple& t) {
  if (traverser.labelled() != t.size()) {
    throw BitradeError("canonical form requires a transitive triple");
  }
}

}  // namespace

CanonicalForm canonical_code_from(const TauTriple& t, Point start) {
  if (start < 0 || start >= t.size()) {
    throw std::out_of_range("start point out of range");
  }
  Traverser traverser(t);
  traverser.run(start, nullptr);
  require_transitive(traverser, t);
  return {traverser.code()};
}

CanonicalAnalysis analyze(const TauTriple& t) {
  if (t.size() == 0) throw BitradeError("canonical form of an empty triple");
  CanonicalAnalysis analysis;
  Traverser traverser(t);
  for (Point x = 0; x < t.size(); ++x) {
    const int cmp =
        traverser.run(x, x == 0 ? nullptr : &analysis.form.code);
    if (x == 0) require_transitive(traverser, t);
    if (cmp < 0) {
      analysis.form.code = traverser.code();
      analysis.minimizers.clear();
      analysis.minimizers.push_back(traverser.relabelling());
    } else if (cmp == 0) {
      analysis.minimizers.push_back(traverser.relabelling());
    }
  }
  return analysis;
}

CanonicalResult canonical_form(const TauTriple& t) {
  CanonicalAnalysis analysis = analyze(t);
  return {std::move(analysis.form), std::move(analysis.minimizers.front())};
}

TauTriple canonical_triple(const TauTriple& t) {
  return t.relabelled(canonical_form(t).relabelling.forward);
}

TauTriple decode_canonical_form(const CanonicalForm& form) {
  const std::vector<int>& code = form.code;
  const int n = form.size();
  if (n == 0) throw BitradeError("empty canonical code");

  std::array<std::vector<Point>, 3> succ;
  for (auto& s : succ) s.assign(n, -1);
  std::deque<std::pair<int, Point>> queue{{1, 0}, {2, 0}, {3, 0}};
  std::size_t pos = 0;
  int next_label = 0;
  std::vector<Point> cycle;

  while (!queue.empty()) {
    const auto [d, v] = queue.front();
    queue.pop_front();
    if (succ[d - 1][v] != -1) continue;

    cycle.clear();
    while (true) {
      if (pos >= code.size()) throw BitradeError("canonical code truncated");
      const int value = code[pos++];
      if (value == kCycleEnd) break;
      const Point p = value - 1;
      if (p < 0 || p >= n) throw BitradeError("label out of range");
      if (p > next_label) {
        throw BitradeError("label " + std::to_string(value) +
                           " appears before a smaller unseen label");
      }
      if (p == next_label) ++next_label;
      if (succ[d - 1][p] != -1 ||
          std::find(cycle.begin(), cycle.end(), p) != cycle.end()) {
        throw BitradeError("label " + std::to_string(value) +
                           " repeated within direction " + std::to_string(d));
      }
      cycle.push_back(p);
    }
    if (cycle.empty() || cycle.front() != v) {
      throw BitradeError("cycle does not start at the traversal point");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      succ[d - 1][cycle[i]] = cycle[(i + 1) % cycle.size()];
    }

    const int e = next_direction(d);
    const int f = next_direction(e);
    const int lo = std::min(e, f);
    const int hi = std::max(e, f);
    for (Point p : cycle) {
      if (succ[lo - 1][p] == -1) queue.emplace_back(lo, p);
      if (succ[hi - 1][p] == -1) queue.emplace_back(hi, p);
    }
  }
  if (pos != code.size()) throw BitradeError("trailing data in canonical code");
  for (const auto& s : succ) {
    if (std::find(s.begin(), s.end(), -1) != s.end()) {
      throw BitradeError("canonical code does not cover every point");
    }
  }
  return TauTriple::from_images(std::move(succ[0]), std::move(succ[1]),
                                std::move(succ[2]));
}

AutGroup automorphisms(const CanonicalAnalysis& analysis) {
  AutGroup group;
  const Relabelling& ref = analysis.relabelling();
  for (const Relabelling& m : analysis.minimizers) {
    std::vector<Point> theta(m.forward.size());
    for (Point p = 0; p < static_cast<Point>(theta.size()); ++p) {
      theta[p] = ref.inverse[m.forward[p]];
    }
    group.elements.push_back(std::move(theta));
  }
  return group;
}

AutGroup automorphisms(const TauTriple& t) { return automorphisms(analyze(t)); }

namespace {

// Largest (j, u) contraction site of the canonical triple, in its labels.
SlideSite canonical_site_in_canonical_labels(const TauTriple& t,
                                             const CanonicalAnalysis& analysis) {
  const TauTriple hat = t.relabelled(analysis.relabelling().forward);
  for (int j = 3; j >= 1; --j) {
    for (Point u = hat.size() - 1; u >= 0; --u) {
      if (is_contraction_site(hat, {j, u})) return {j, u};
    }
  }
  throw NoParent("triple has no valid slide contraction");
}

}  // namespace

SlideSite canonical_parent_site(const TauTriple& t,
                                const CanonicalAnalysis& analysis) {
  const SlideSite site = canonical_site_in_canonical_labels(t, analysis);
  return {site.direction, analysis.relabelling().inverse[site.point]};
}

ParentChoice canonical_parent(const TauTriple& t) {
  const SlideSite site = canonical_parent_site(t, analyze(t));
  return {slide_contract(t, site), site};
}

bool is_canonical_augmentation(const TauTriple& child,
                               const CanonicalAnalysis& analysis,
                               SlideSite actual_site) {
  const SlideSite canonical = canonical_site_in_canonical_labels(child, analysis);
  if (actual_site.direction != canonical.direction) return false;
  // Some theta in Aut carries actual_site to the canonical site exactly when
  // some minimizing traversal gives actual_site the canonical site's label.
  for (const Relabelling& m : analysis.minimizers) {
    if (m.forward[actual_site.point] == canonical.point) return true;
  }
  return false;
}

bool is_canonical_augmentation(const TauTriple& child, SlideSite actual_site) {
  return is_canonical_augmentation(child, analyze(child), actual_site);
}

}  // namespace bitrade
