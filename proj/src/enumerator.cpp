#include "bitrade/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace bitrade {

void CensusTable::merge(const CensusTable& other) {
  for (const auto& [size, count] : other.counts) counts[size] += count;
  for (const auto& [size, codes] : other.forms) {
    auto& mine = forms[size];
    mine.insert(mine.end(), codes.begin(), codes.end());
  }
}

void CensusTable::sort_forms() {
  for (auto& [size, codes] : forms) std::sort(codes.begin(), codes.end());
}

std::string CensusTable::format_counts(int max_size) const {
  std::string out;
  for (int size = 4; size <= max_size; ++size) {
    out += std::to_string(size) + "\t" + std::to_string(count(size)) + "\n";
  }
  return out;
}

std::string CensusTable::format_forms() const {
  std::string out;
  for (const auto& [size, codes] : forms) {
    for (const CanonicalForm& f : codes) {
      out += std::to_string(size) + "\t" + f.to_string() + "\n";
    }
  }
  return out;
}

CensusTable CensusTable::parse_counts(std::string_view text) {
  CensusTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::istringstream fields(line);
    int size = 0;
    std::uint64_t count = 0;
    if (!(fields >> size >> count)) {
      throw ParseError(number, 1, "expected 'size<TAB>count'");
    }
    table.counts[size] = count;
  }
  return table;
}

std::vector<TauTriple> bicyclic_roots(int size) {
  if (size < 4 || size % 2 != 0) {
    throw InvalidSize("bicyclic roots need an even size >= 4, got " +
                      std::to_string(size));
  }
  const int n = size / 2;
  // x_i = i, x'_i = n + i.
  auto x = [](int i) { return i; };
  auto xp = [n](int i) { return n + i; };

  std::vector<std::vector<Point>> two_cycles(2);
  for (int i = 0; i < n; ++i) two_cycles[0].push_back(x(i));
  for (int i = n - 1; i >= 0; --i) two_cycles[1].push_back(xp(i));

  std::vector<std::vector<Point>> spokes;
  for (int i = 0; i < n; ++i) spokes.push_back({x(i), xp(i)});

  // The pairing of the remaining direction is either (x_{i+1}, x'_i) or
  // (x_i, x'_{i+1}); only one of them satisfies (T1) once n >= 3.
  std::array<std::vector<std::vector<Point>>, 2> rungs;
  for (int i = 0; i < n; ++i) {
    rungs[0].push_back({x((i + 1) % n), xp(i)});
    rungs[1].push_back({x(i), xp((i + 1) % n)});
  }

  std::set<CanonicalForm> seen;
  std::vector<std::pair<CanonicalForm, TauTriple>> found;
  for (int j = 1; j <= 3; ++j) {
    for (const auto& rung : rungs) {
      std::array<std::vector<std::vector<Point>>, 3> cycles;
      cycles[j - 1] = two_cycles;
      cycles[next_direction(j) - 1] = spokes;
      cycles[next_direction(next_direction(j)) - 1] = rung;
      TauTriple t = TauTriple::from_cycles(size, cycles);
      const ValidationReport report = validate(t);
      if (!report.is_spherical() || !report.transitive) continue;
      CanonicalResult canon = canonical_form(t);
      if (!seen.insert(canon.form).second) continue;
      found.emplace_back(canon.form, t.relabelled(canon.relabelling.forward));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<TauTriple> roots;
  for (auto& [form, t] : found) roots.push_back(std::move(t));
  return roots;
}

std::vector<Child> children(const TauTriple& t, const AutGroup& aut) {
  const std::vector<SlideSite> sites = expansion_sites(t);
  const int n = t.size();
  std::vector<int> index(3 * static_cast<std::size_t>(n), -1);
  for (int i = 0; i < static_cast<int>(sites.size()); ++i) {
    index[(sites[i].direction - 1) * n + sites[i].point] = i;
  }

  std::vector<char> covered(sites.size(), 0);
  std::vector<Child> result;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (covered[i]) continue;
    const SlideSite s = sites[i];
    for (const auto& theta : aut.elements) {
      const int image = index[(s.direction - 1) * n + theta[s.point]];
      if (image >= 0) covered[image] = 1;
    }
    result.push_back({slide_expand(t, s), s, undo_site(t, s)});
  }
  return result;
}

std::vector<Child> children(const TauTriple& t) {
  return children(t, automorphisms(t));
}

namespace {

// Calls fn(child, child_analysis_or_null, step) for every tree child of
// `node`: each accepted canonical augmentation, followed by its inverse when
// the inverse has no parent of its own and is a different class.
template <typename Fn>
void for_each_tree_child(const TauTriple& node,
                         const CanonicalAnalysis& analysis, Fn&& fn) {
  for (Child& c : children(node, automorphisms(analysis))) {
    const CanonicalAnalysis child_analysis = analyze(c.triple);
    if (!is_canonical_augmentation(c.triple, child_analysis, c.undo)) continue;
    fn(c.triple, &child_analysis, TreeStep{c.site, false});

    TauTriple inv = inverse(c.triple);
    if (has_contraction_site(inv)) continue;
    if (canonical_form(inv).form == child_analysis.form) continue;
    fn(inv, static_cast<const CanonicalAnalysis*>(nullptr),
       TreeStep{c.site, true});
  }
}

void traverse(const TauTriple& node, const CanonicalAnalysis* known,
              int max_size, const Visitor& visitor) {
  visitor(node);
  if (node.size() >= max_size) return;
  std::optional<CanonicalAnalysis> own;
  if (!known) {
    own = analyze(node);
    known = &*own;
  }
  for_each_tree_child(node, *known,
                      [&](const TauTriple& child,
                          const CanonicalAnalysis* child_analysis, TreeStep) {
                        traverse(child, child_analysis, max_size, visitor);
                      });
}

Visitor census_visitor(CensusTable& table, bool keep_forms) {
  return [&table, keep_forms](const TauTriple& t) {
    table.add(t.size());
    if (keep_forms) table.forms[t.size()].push_back(canonical_form(t).form);
  };
}

}  // namespace

void canaug_spherical(const TauTriple& root, int max_size,
                      const Visitor& visitor) {
  traverse(root, nullptr, max_size, visitor);
}

TauTriple SearchTask::replay() const {
  TauTriple t = decode_canonical_form(root);
  for (const TreeStep& step : path) {
    t = slide_expand(t, step.site);
    if (step.invert) t = inverse(t);
  }
  return t;
}

std::string SearchTask::serialize() const {
  std::string out = std::to_string(id) + "\t" + std::to_string(max_size) +
                    "\t" + root.to_string() + "\t";
  if (path.empty()) return out + "-";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(path[i].site.direction) + ":" +
           std::to_string(path[i].site.point);
    if (path[i].invert) out += ":i";
  }
  return out;
}

SearchTask SearchTask::parse(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const std::size_t tab = line.find('\t');
    fields.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  if (fields.size() != 4) {
    throw ParseError(1, 1, "search task needs 4 tab-separated fields");
  }
  auto to_int = [](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
      throw ParseError(1, 1, "bad integer '" + std::string(s) + "'");
    }
    return v;
  };

  SearchTask task;
  task.id = to_int(fields[0]);
  task.max_size = to_int(fields[1]);
  task.root = CanonicalForm::parse(fields[2]);
  if (fields[3] != "-") {
    std::istringstream steps{std::string(fields[3])};
    std::string token;
    while (steps >> token) {
      TreeStep step;
      const std::size_t c1 = token.find(':');
      if (c1 == std::string::npos) throw ParseError(1, 1, "bad step " + token);
      std::string_view rest = std::string_view(token).substr(c1 + 1);
      const std::size_t c2 = rest.find(':');
      step.site.direction = to_int(std::string_view(token).substr(0, c1));
      step.site.point = to_int(rest.substr(0, c2));
      if (c2 != std::string_view::npos) {
        if (rest.substr(c2 + 1) != "i") {
          throw ParseError(1, 1, "bad step " + token);
        }
        step.invert = true;
      }
      task.path.push_back(step);
    }
  }
  return task;
}

TaskPlan split_tasks(int max_size, int split_depth, bool keep_forms) {
  if (split_depth < 0) throw std::invalid_argument("split depth must be >= 0");
  TaskPlan plan;
  const Visitor count = census_visitor(plan.prefix, keep_forms);

  std::vector<TreeStep> path;
  CanonicalForm root_code;
  std::function<void(const TauTriple&, const CanonicalAnalysis*, int)> walk =
      [&](const TauTriple& node, const CanonicalAnalysis* known, int depth) {
        if (depth == split_depth) {
          plan.tasks.push_back({static_cast<int>(plan.tasks.size()), max_size,
                                root_code, path});
          return;
        }
        count(node);
        if (node.size() >= max_size) return;
        std::optional<CanonicalAnalysis> own;
        if (!known) {
          own = analyze(node);
          known = &*own;
        }
        for_each_tree_child(node, *known,
                            [&](const TauTriple& child,
                                const CanonicalAnalysis* child_analysis,
                                TreeStep step) {
                              path.push_back(step);
                              walk(child, child_analysis, depth + 1);
                              path.pop_back();
                            });
      };

  for (int size = 4; size <= max_size; size += 2) {
    for (const TauTriple& root : bicyclic_roots(size)) {
      root_code = canonical_form(root).form;
      walk(decode_canonical_form(root_code), nullptr, 0);
    }
  }
  return plan;
}

CensusTable run_task(const SearchTask& task, bool keep_forms) {
  CensusTable table;
  canaug_spherical(task.replay(), task.max_size,
                   census_visitor(table, keep_forms));
  return table;
}

CensusTable run_tasks(
    const std::vector<SearchTask>& tasks, int workers, bool keep_forms,
    const std::function<void(const SearchTask&, const CensusTable&)>& on_done) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  std::vector<CensusTable> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex done_mutex;
  std::exception_ptr failure;

  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        results[i] = run_task(tasks[i], keep_forms);
        if (on_done) {
          std::lock_guard lock(done_mutex);
          on_done(tasks[i], results[i]);
        }
      } catch (...) {
        std::lock_guard lock(done_mutex);
        if (!failure) failure = std::current_exception();
        next.store(tasks.size());
        return;
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    const int spawn =
        std::min<int>(workers, std::max<std::size_t>(tasks.size(), 1)) - 1;
    for (int w = 0; w < spawn; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  CensusTable merged;
  for (const CensusTable& r : results) merged.merge(r);
  return merged;
}

CensusTable enumerate_all(int max_size, int workers, int split_depth,
                          bool keep_forms) {
  if (max_size < 4) throw InvalidSize("max size must be >= 4");
  TaskPlan plan = split_tasks(max_size, split_depth, keep_forms);
  CensusTable census = plan.prefix;
  census.merge(run_tasks(plan.tasks, workers, keep_forms));
  if (keep_forms) census.sort_forms();
  return census;
}

}  // namespace bitrade
