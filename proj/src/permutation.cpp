#include "bitrade/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace bitrade {

Permutation::Permutation(std::vector<Point> images) : image_(std::move(images)) {
  const int n = size();
  preimage_.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    const Point q = image_[p];
    if (q < 0 || q >= n || preimage_[q] != -1) {
      throw std::invalid_argument("not a permutation of 0.." +
                                  std::to_string(n - 1));
    }
    preimage_[q] = p;
  }

  cycle_of_.assign(n, -1);
  cycle_points_.reserve(n);
  cycle_start_.reserve(n + 1);
  for (Point p = 0; p < n; ++p) {
    if (cycle_of_[p] != -1) continue;
    const int id = num_cycles();
    Point q = p;
    do {
      cycle_of_[q] = id;
      cycle_points_.push_back(q);
      q = image_[q];
    } while (q != p);
    cycle_start_.push_back(static_cast<int>(cycle_points_.size()));
  }
}

Permutation Permutation::from_cycles(
    int size, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(size, -1);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Point p = c[i];
      if (p < 0 || p >= size || images[p] != -1) {
        throw std::invalid_argument("bad or repeated point " +
                                    std::to_string(p) + " in cycle list");
      }
      images[p] = c[(i + 1) % c.size()];
    }
  }
  for (Point p = 0; p < size; ++p) {
    if (images[p] == -1) images[p] = p;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::identity(int size) {
  std::vector<Point> images(size);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_fixed_point_free() const {
  for (Point p = 0; p < size(); ++p) {
    if (image_[p] == p) return false;
  }
  return true;
}

Permutation Permutation::inverse() const { return Permutation(preimage_); }

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) {
    throw std::invalid_argument("permutation sizes differ");
  }
  std::vector<Point> images(size());
  for (Point p = 0; p < size(); ++p) images[p] = next.image_[image_[p]];
  return Permutation(std::move(images));
}

Permutation Permutation::conjugated(std::span<const Point> relabel) const {
  if (static_cast<int>(relabel.size()) != size()) {
    throw std::invalid_argument("relabelling has the wrong size");
  }
  std::vector<Point> images(size());
  for (Point p = 0; p < size(); ++p) images[relabel[p]] = relabel[image_[p]];
  return Permutation(std::move(images));
}

}  // namespace bitrade
