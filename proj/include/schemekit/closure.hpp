#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schemekit/configuration.hpp"
#include "schemekit/construct.hpp"
#include "schemekit/linalg.hpp"

namespace schemekit {

/// Provisional n×n coloring; need not satisfy any axiom.
struct InitialColoring {
  std::size_t order = 0;
  std::vector<std::uint64_t> colors;  // row-major
};

/// Coarsest coherent configuration refining the input (2-dimensional
/// Weisfeiler–Leman stabilization). Colors are numbered in first-occurrence
/// order of a row-major scan, so the output is deterministic.
CoherentConfiguration wl_closure(const InitialColoring& init);

InitialColoring coloring_of(const CoherentConfiguration& c);

/// 𝒞_x: the WL closure of C with the point x isolated in its own diagonal color.
CoherentConfiguration one_point_extension(const CoherentConfiguration& c, Point x);

/// Linearly independent matrices spanning a unital matrix algebra, with an
/// exact membership oracle.
class AlgebraBasis {
 public:
  AlgebraBasis(std::vector<RationalMatrix> elements, std::vector<RationalMatrix> generators,
               RationalMatrix unit, std::vector<std::string> log);

  std::size_t dimension() const noexcept { return elements_.size(); }
  std::size_t matrix_order() const noexcept { return unit_.rows(); }
  const std::vector<RationalMatrix>& elements() const noexcept { return elements_; }
  /// Matrices generating the algebra (together with the unit).
  const std::vector<RationalMatrix>& generators() const noexcept { return generators_; }
  const RationalMatrix& unit() const noexcept { return unit_; }
  /// How each element arose, e.g. "gen 3" or "gen 1 * elem 4".
  const std::vector<std::string>& generator_log() const noexcept { return log_; }

  std::optional<RationalVector> coordinates(const RationalMatrix& m) const;
  bool contains(const RationalMatrix& m) const;

  /// Every pairwise product lies in the span (exhaustive).
  bool is_product_closed() const;
  bool is_transpose_closed() const;

 private:
  std::vector<RationalMatrix> elements_;
  std::vector<RationalMatrix> generators_;
  RationalMatrix unit_;
  std::vector<std::string> log_;
  SpanBasis span_;
};

/// Thrown when a closure that must be transpose-closed is not; signals a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SpanClosureOptions {
  std::optional<RationalMatrix> unit;  // defaults to the identity
  bool require_transpose_closed = true;
};

/// Smallest algebra containing the unit and the generators. Breadth-first:
/// every basis element, in order, is multiplied on the left by every
/// generator, in order, until a full pass adds nothing.
AlgebraBasis algebra_span_closure(const std::vector<RationalMatrix>& generators,
                                  const SpanClosureOptions& options = {});

/// 𝒜(S): the adjacency matrices, in color order.
AlgebraBasis adjacency_algebra(const CoherentConfiguration& c);

/// Generators σ_s (color order) followed by the nonzero ε_{x₀s} (color order).
std::vector<RationalMatrix> terwilliger_generators(const CoherentConfiguration& c, Point x0);

/// 𝒯(X, S, x₀). Requires a scheme.
AlgebraBasis terwilliger(const CoherentConfiguration& c, Point x0);

/// Diagonal 0/1 matrix with ones on the given points.
RationalMatrix diagonal_projection(std::size_t order, const PointSet& points);

struct CornerReport {
  AlgebraBasis corner;     // ε·𝒯(S≀T)·ε
  AlgebraBasis generated;  // algebra generated by J_X⊗σ_c and σ_s⊗I restricted
  AlgebraBasis refined;    // as `generated`, with σ_s⊗ε_Δ per fiber Δ of 𝒞_{y₀} in Y∖{y₀}
  std::size_t relation_count = 0;  // basic relations of 𝒞_{y₀} on Y∖{y₀}
  std::size_t fiber_count = 0;     // fibers of 𝒞_{y₀} in Y∖{y₀}
  bool equal = false;          // corner == generated, mutual containment checked exactly
  bool refined_equal = false;  // corner == refined
  bool generated_inside = false;  // generated ⊆ corner
};

/// Corner of the wreath Terwilliger algebra cut down to X×(Y∖{y₀}), together
/// with the algebra generated from the basic relations of the one-point
/// extension of T at y₀ restricted to Y∖{y₀}. With more than one fiber on
/// Y∖{y₀} the σ_s⊗I generators miss the fiber projections I_X⊗ε_Δ, so the
/// refined set is compared as well. Requires |Y| ≥ 2.
CornerReport restriction_corner_basis(const WreathProduct& w, Point x0, Point y0);

}  // namespace schemekit
