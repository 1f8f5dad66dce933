#pragma once

#include <span>
#include <vector>

namespace bitrade {

using Point = int;

// A permutation of the dense point set 0..size()-1, acting on the right.
// Keeps both directions of the map and the cycle decomposition. Cycles are
// stored rotated so their minimum point comes first and are numbered in
// increasing order of that minimum.
class Permutation {
 public:
  Permutation() = default;

  // Throws std::invalid_argument unless `images` is a bijection on
  // 0..images.size()-1.
  explicit Permutation(std::vector<Point> images);

  // Points not mentioned in any cycle are fixed. Throws std::invalid_argument
  // on out-of-range or repeated points.
  static Permutation from_cycles(int size,
                                 const std::vector<std::vector<Point>>& cycles);

  static Permutation identity(int size);

  int size() const { return static_cast<int>(image_.size()); }
  Point image(Point p) const { return image_[p]; }
  Point preimage(Point p) const { return preimage_[p]; }
  const std::vector<Point>& images() const { return image_; }

  int num_cycles() const { return static_cast<int>(cycle_start_.size()) - 1; }
  int cycle_of(Point p) const { return cycle_of_[p]; }
  std::span<const Point> cycle(int id) const {
    return {cycle_points_.data() + cycle_start_[id],
            static_cast<std::size_t>(cycle_start_[id + 1] - cycle_start_[id])};
  }
  int cycle_length(int id) const {
    return cycle_start_[id + 1] - cycle_start_[id];
  }
  int cycle_length_at(Point p) const { return cycle_length(cycle_of_[p]); }

  bool is_fixed_point_free() const;

  Permutation inverse() const;

  // Right-action product: apply *this, then `next`.
  Permutation then(const Permutation& next) const;

  // The conjugate theta^-1 * this * theta, where relabel[p] is the image of
  // p under theta.
  Permutation conjugated(std::span<const Point> relabel) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }

 private:
  std::vector<Point> image_;
  std::vector<Point> preimage_;
  std::vector<int> cycle_of_;
  std::vector<int> cycle_start_{0};
  std::vector<Point> cycle_points_;
};

}  // namespace bitrade
