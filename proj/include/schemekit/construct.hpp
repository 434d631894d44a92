#pragma once

#include <optional>
#include <vector>

#include "schemekit/configuration.hpp"

namespace schemekit {

struct DirectSum {
  CoherentConfiguration configuration;
  PointSet first_points;   // image of the first summand (0..n−1)
  PointSet second_points;  // image of the second summand (n..n+n'−1)
};

/// C ⊞ C'. Colors: those of C, then those of C' shifted by rank(C), then
/// Δ×Δ' for fiber pairs (Δ of C, Δ' of C'), then Δ'×Δ, both in fiber order.
DirectSum direct_sum(const CoherentConfiguration& a, const CoherentConfiguration& b);

/// C × C' on point (x, x') ↦ x·n' + x', with color s×s' ↦ s·r' + s'.
CoherentConfiguration direct_product(const CoherentConfiguration& a, const CoherentConfiguration& b);

/// Bookkeeping that ties the colors and points of S≀T back to S and T.
struct WreathLabeling {
  CoherentConfiguration base_x;
  CoherentConfiguration base_y;
  std::vector<Color> tilde;                // s ↦ color of s̃ (tilde[0] is the identity)
  std::vector<std::optional<Color>> bar;   // t ↦ color of t̄, absent for the identity

  std::size_t order_x() const { return base_x.order(); }
  std::size_t order_y() const { return base_y.order(); }
  Point point(Point x, Point y) const { return Point(x * order_y() + y); }
  Point x_of(Point p) const { return Point(p / order_y()); }
  Point y_of(Point p) const { return Point(p % order_y()); }
};

struct WreathProduct {
  CoherentConfiguration scheme;
  WreathLabeling labeling;
};

/// S≀T on X×Y. Color order: identity, s̃ for s ≠ 1 in S-order, then t̄ for
/// t ≠ 1 in T-order. Both inputs must be schemes.
WreathProduct wreath(const CoherentConfiguration& x, const CoherentConfiguration& y);

/// The configuration with relations s ∩ (Δ×Γ), Δ, Γ ∈ X/T. Requires T to be
/// a closed subset containing the thin residue.
CoherentConfiguration thin_residue_extension(const CoherentConfiguration& c, const ColorSet& t);

}  // namespace schemekit
