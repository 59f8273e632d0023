#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gbp/rational.hpp"

namespace gbp {

// Side lengths of one d-dimensional axis-parallel box, every side in (0, 1].
class box_dims {
 public:
  explicit box_dims(std::vector<rational> sides) : sides_(std::move(sides)) {
    if (sides_.empty()) throw std::invalid_argument("box_dims: dimension must be at least 1");
    for (const auto& s : sides_)
      if (s <= 0 || s > 1)
        throw std::invalid_argument("box_dims: every side must lie in (0, 1]");
  }

  int dimension() const { return static_cast<int>(sides_.size()); }
  const rational& side(int j) const { return sides_[static_cast<std::size_t>(j)]; }
  const std::vector<rational>& sides() const { return sides_; }

  friend bool operator==(const box_dims& a, const box_dims& b) { return a.sides_ == b.sides_; }

 private:
  std::vector<rational> sides_;
};

// Per-box corner positions; row i is the position vector of box i.
struct placement {
  std::vector<std::vector<rational>> positions;

  friend bool operator==(const placement& a, const placement& b) {
    return a.positions == b.positions;
  }
};

// A collection of boxes sharing one dimension; the container is always
// the unit cube.
class packing_instance {
 public:
  packing_instance(int dimension, std::vector<box_dims> boxes)
      : dimension_(dimension), boxes_(std::move(boxes)) {
    if (dimension_ < 1) throw std::invalid_argument("packing_instance: dimension must be positive");
    for (const auto& b : boxes_)
      if (b.dimension() != dimension_)
        throw std::invalid_argument("packing_instance: box dimension mismatch");
  }

  int dimension() const { return dimension_; }
  int box_count() const { return static_cast<int>(boxes_.size()); }
  const box_dims& box(int i) const { return boxes_[static_cast<std::size_t>(i)]; }
  const std::vector<box_dims>& boxes() const { return boxes_; }

  // Sub-instance of the given box indices, preserving their order.
  packing_instance subset(std::span<const int> indices) const {
    std::vector<box_dims> sub;
    sub.reserve(indices.size());
    for (int i : indices) {
      if (i < 0 || i >= box_count())
        throw std::invalid_argument("packing_instance::subset: box index out of range");
      sub.push_back(boxes_[static_cast<std::size_t>(i)]);
    }
    return packing_instance(dimension_, std::move(sub));
  }

 private:
  int dimension_;
  std::vector<box_dims> boxes_;
};

}  // namespace gbp
