#include "bitrade/moves.hpp"

#include <string>

namespace bitrade {

namespace {

bool valid_site_shape(const TauTriple& t, SlideSite s) {
  return s.direction >= 1 && s.direction <= 3 && s.point >= 0 &&
         s.point < t.size();
}

std::string describe(SlideSite s) {
  return "(dir " + std::to_string(s.direction) + ", point " +
         std::to_string(s.point) + ")";
}

}  // namespace

bool is_expansion_site(const TauTriple& t, SlideSite s) {
  if (!valid_site_shape(t, s)) return false;
  const int j = s.direction;
  const int k = next_direction(j);
  const int l = next_direction(k);
  const Point x = s.point;
  if (t.tau(j).cycle_length_at(x) < 3) return false;

  const Point w = t.tau(j).image(x);
  const Permutation& tk = t.tau(k);
  const Permutation& tl = t.tau(l);
  const int target = tl.cycle_of(w);
  for (Point p : tk.cycle(tk.cycle_of(x))) {
    if (tl.cycle_of(p) == target) return false;
  }
  return true;
}

std::vector<SlideSite> expansion_sites(const TauTriple& t) {
  std::vector<SlideSite> sites;
  for (int j = 1; j <= 3; ++j) {
    for (Point x = 0; x < t.size(); ++x) {
      if (is_expansion_site(t, {j, x})) sites.push_back({j, x});
    }
  }
  return sites;
}

TauTriple slide_expand(const TauTriple& t, SlideSite s) {
  if (!is_expansion_site(t, s)) {
    throw InvalidSite("not an expansion site: " + describe(s));
  }
  const int j = s.direction;
  const int k = next_direction(j);
  const int l = next_direction(k);
  const Point x = s.point;
  const Point u = t.size();

  std::array<std::vector<Point>, 3> images;
  for (int d = 1; d <= 3; ++d) {
    images[d - 1] = t.tau(d).images();
    images[d - 1].push_back(u);
  }

  {
    const Permutation& tj = t.tau(j);
    const Point w = tj.image(x);
    const Point a = tj.preimage(x);
    const Point b = tj.image(w);
    auto& img = images[j - 1];
    img[a] = u;
    img[u] = b;
    img[x] = w;
    img[w] = x;
  }
  {
    const Point z = t.tau(k).image(x);
    auto& img = images[k - 1];
    img[x] = u;
    img[u] = z;
  }
  {
    const Point w = t.tau(j).image(x);
    const Point y = t.tau(l).preimage(w);
    auto& img = images[l - 1];
    img[y] = u;
    img[u] = w;
  }
  return TauTriple::from_images(std::move(images[0]), std::move(images[1]),
                                std::move(images[2]));
}

std::optional<TauTriple> try_slide_contract(const TauTriple& t, SlideSite s) {
  if (!valid_site_shape(t, s)) return std::nullopt;
  const int j = s.direction;
  const int k = next_direction(j);
  const int l = next_direction(k);
  const Point u = s.point;
  const Permutation& tj = t.tau(j);
  const Permutation& tk = t.tau(k);
  const Permutation& tl = t.tau(l);

  if (tk.cycle_length_at(u) < 3 || tl.cycle_length_at(u) < 3) {
    return std::nullopt;
  }
  if (tj.image(u) == u) return std::nullopt;
  const Point x = tk.preimage(u);
  const Point w = tl.image(u);
  if (x == w || tj.image(x) != w || tj.image(w) != x) return std::nullopt;

  const int n = t.size();
  std::array<std::vector<Point>, 3> images;
  for (int d = 1; d <= 3; ++d) images[d - 1] = t.tau(d).images();
  {
    const Point a = tj.preimage(u);
    const Point b = tj.image(u);
    auto& img = images[j - 1];
    img[a] = x;
    img[x] = w;
    img[w] = b;
  }
  images[k - 1][x] = tk.image(u);
  images[l - 1][tl.preimage(u)] = w;

  auto collapse = [u](Point p) { return p > u ? p - 1 : p; };
  std::array<std::vector<Point>, 3> collapsed;
  for (int d = 0; d < 3; ++d) {
    collapsed[d].reserve(n - 1);
    for (Point p = 0; p < n; ++p) {
      if (p != u) collapsed[d].push_back(collapse(images[d][p]));
    }
  }
  TauTriple result = TauTriple::from_images(std::move(collapsed[0]),
                                            std::move(collapsed[1]),
                                            std::move(collapsed[2]));
  if (!validate(result).is_bitrade()) return std::nullopt;
  return result;
}

TauTriple slide_contract(const TauTriple& t, SlideSite s) {
  auto result = try_slide_contract(t, s);
  if (!result) throw InvalidSite("not a contraction site: " + describe(s));
  return std::move(*result);
}

bool is_contraction_site(const TauTriple& t, SlideSite s) {
  return try_slide_contract(t, s).has_value();
}

std::vector<SlideSite> contraction_sites(const TauTriple& t) {
  std::vector<SlideSite> sites;
  for (int j = 1; j <= 3; ++j) {
    for (Point u = 0; u < t.size(); ++u) {
      if (is_contraction_site(t, {j, u})) sites.push_back({j, u});
    }
  }
  return sites;
}

bool has_contraction_site(const TauTriple& t) {
  for (int j = 1; j <= 3; ++j) {
    for (Point u = 0; u < t.size(); ++u) {
      if (is_contraction_site(t, {j, u})) return true;
    }
  }
  return false;
}

}  // namespace bitrade
