#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "schemekit/matrix.hpp"

namespace schemekit {

using Color = std::uint32_t;
using Point = std::uint32_t;
using ColorSet = std::vector<Color>;  // sorted, duplicate-free
using PointSet = std::vector<Point>;  // sorted, duplicate-free

/// Which coherence axiom a coloring breaks, with the colors and points that
/// witness it.
class AxiomViolation : public std::runtime_error {
 public:
  enum class Condition {
    Shape,          // matrix is not n×n with n ≥ 1
    Contiguity,     // some color in [0, r) never occurs
    Diagonal,       // a diagonal color also occurs off the diagonal
    Converse,       // transpose of a color class is not a color class
    FiberBlock,     // a color class is not inside one Δ×Γ
    Intersection,   // p_{st}^u not constant on u
  };

  AxiomViolation(Condition condition, std::vector<Color> colors, std::vector<Point> points,
                 const std::string& detail);

  Condition condition() const noexcept { return condition_; }
  const std::vector<Color>& witness_colors() const noexcept { return colors_; }
  const std::vector<Point>& witness_points() const noexcept { return points_; }

 private:
  Condition condition_;
  std::vector<Color> colors_;
  std::vector<Point> points_;
};

std::string to_string(AxiomViolation::Condition c);

struct SchemeFlag {
  bool is_homogeneous = false;
  std::optional<Color> identity;  // present iff homogeneous
};

/// A validated coherent configuration: an n×n color matrix satisfying the
/// coherence axioms, with fibers, converse map and intersection numbers
/// derived once at construction.
///
/// Colors are dense 0..r−1. A homogeneous configuration (a scheme) always
/// has its identity relation as color 0; validation relabels if needed.
class CoherentConfiguration {
 public:
  /// Validates a row-major color matrix. Throws AxiomViolation.
  static CoherentConfiguration validate(std::size_t order, std::vector<Color> colors);
  static CoherentConfiguration validate(const std::vector<std::vector<Color>>& rows);

  /// Validates an arbitrary labelling after renumbering its labels in
  /// first-occurrence order (row-major scan).
  static CoherentConfiguration from_partition(std::size_t order,
                                              std::span<const std::uint64_t> labels);

  std::size_t order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return rank_; }
  Color color(Point x, Point y) const { return colors_[std::size_t(x) * order_ + y]; }
  std::span<const Color> colors() const noexcept { return colors_; }

  SchemeFlag scheme_flag() const;
  bool is_homogeneous() const noexcept { return fibers_.size() == 1; }

  const std::vector<PointSet>& fibers() const noexcept { return fibers_; }
  std::size_t fiber_of(Point x) const { return point_fiber_[x]; }
  const ColorSet& diagonal_colors() const noexcept { return diagonal_; }
  bool is_diagonal(Color s) const { return diagonal_flag_[s]; }
  Color star(Color s) const { return star_[s]; }
  /// Fiber indices Δ, Γ with s ⊆ Δ×Γ.
  std::size_t source_fiber(Color s) const { return source_[s]; }
  std::size_t target_fiber(Color s) const { return target_[s]; }
  /// Number of pairs in the relation.
  std::size_t relation_size(Color s) const { return sizes_[s]; }

  /// |xs| for x in the source fiber of s (constant by coherence).
  std::size_t out_valency(Color s) const;
  /// Valency n_s of a scheme relation; throws std::logic_error when not homogeneous.
  std::size_t valency(Color s) const;

  /// p_{st}^u
  std::size_t intersection(Color s, Color t, Color u) const;
  /// {u : p_{st}^u > 0}
  ColorSet complex_product(Color s, Color t) const;
  /// Nonzero (u, p_{st}^u) pairs ordered by u.
  std::span<const std::pair<Color, std::uint32_t>> product_terms(Color s, Color t) const;

  /// xs
  PointSet neighbours(Point x, Color s) const;

  RationalMatrix adjacency_matrix(Color s) const;

  friend bool operator==(const CoherentConfiguration& a, const CoherentConfiguration& b) {
    return a.order_ == b.order_ && a.colors_ == b.colors_;
  }

 private:
  CoherentConfiguration() = default;

  std::size_t order_ = 0;
  std::size_t rank_ = 0;
  std::vector<Color> colors_;
  std::vector<PointSet> fibers_;
  std::vector<std::size_t> point_fiber_;
  ColorSet diagonal_;
  std::vector<bool> diagonal_flag_;
  std::vector<Color> star_;
  std::vector<std::size_t> source_;
  std::vector<std::size_t> target_;
  std::vector<std::size_t> sizes_;
  // key s·r + t → nonzero (u, p_{st}^u), sorted by u
  std::unordered_map<std::uint64_t, std::vector<std::pair<Color, std::uint32_t>>> products_;
};

/// Restriction to a union of fibers; colors renumbered preserving order.
/// Throws std::invalid_argument if the set is empty or not a union of fibers.
CoherentConfiguration restrict_to(const CoherentConfiguration& c, PointSet points);

/// Partition induced on an arbitrary point subset (nonempty s ∩ (P×P)),
/// validated from scratch. Points keep ascending order.
CoherentConfiguration induced_on(const CoherentConfiguration& c, PointSet points);

/// Smallest set of colors containing the seed and the identity, closed
/// under converse and complex products. Requires a scheme.
ColorSet closed_subset_generate(const CoherentConfiguration& c, ColorSet seed);

bool is_closed_subset(const CoherentConfiguration& c, const ColorSet& t);

/// Closed subset generated by all u with p_{ss*}^u > 0. This is the usual
/// thin residue (the closed subset generated by every ss*).
ColorSet thin_residue(const CoherentConfiguration& c);

/// Blocks xT, ordered by smallest point. Throws std::invalid_argument when
/// T is not a closed subset.
std::vector<PointSet> quotient_classes(const CoherentConfiguration& c, const ColorSet& t);

/// Points x with |xs| ≤ 1 for every color s.
PointSet regular_points(const CoherentConfiguration& c);

/// Applies a point permutation: result(perm[x], perm[y]) = c(x, y).
CoherentConfiguration relabel_points(const CoherentConfiguration& c, std::span<const Point> perm);

}  // namespace schemekit
