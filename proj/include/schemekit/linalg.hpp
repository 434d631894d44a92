#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "schemekit/matrix.hpp"

namespace schemekit {

using RationalVector = std::vector<Rational>;

struct RrefResult {
  RationalMatrix form;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form. The pivot in each column is the first nonzero
/// entry at or below the current row; no magnitude pivoting.
RrefResult rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {v : m·v = 0}, one vector per free column with a 1 in that column.
std::vector<RationalVector> null_space(const RationalMatrix& m);

/// Incremental row space kept in semi-echelon form. Each stored row
/// remembers its expansion in terms of the accepted input vectors, so
/// membership queries return exact coordinates.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t length, bool track_coordinates = true);

  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return rows_.size(); }

  /// Adds v when it is independent of the current span; returns whether it was.
  bool insert(RationalVector v);

  /// Coordinates of v w.r.t. the accepted vectors (in acceptance order), or
  /// nullopt if v is outside the span. Requires coordinate tracking.
  std::optional<RationalVector> coordinates(RationalVector v) const;

  bool contains(RationalVector v) const;

  /// Stored rows; they span the same space as the accepted inputs.
  const std::vector<RationalVector>& rows() const noexcept { return rows_; }

 private:
  // Reduces v in place; multipliers receive the coefficient of each stored row.
  void reduce(RationalVector& v, RationalVector* multipliers) const;

  std::size_t length_;
  bool track_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<RationalVector> coords_;  // coords_[i] has size i+1 or less
};

RationalVector flatten(const RationalMatrix& m);

/// Exact test whether m is a rational combination of basis; returns the
/// coefficients when it is. Throws DimensionMismatch on shape disagreement.
std::optional<RationalVector> span_contains(std::span<const RationalMatrix> basis,
                                            const RationalMatrix& m);

/// Σ coefficients[i]·basis[i]
RationalMatrix combine(std::span<const RationalMatrix> basis, std::span<const Rational> coefficients);

/// Basis of {Z ∈ span(space) : Z·g = g·Z for every generator g}. The space
/// elements are assumed linearly independent.
std::vector<RationalMatrix> solve_commutant(std::span<const RationalMatrix> generators,
                                            std::span<const RationalMatrix> space);

}  // namespace schemekit
