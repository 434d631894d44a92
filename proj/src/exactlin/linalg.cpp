#include "schemekit/linalg.hpp"

#include <algorithm>

namespace schemekit {

RrefResult rref(RationalMatrix m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(lead, j));
    const Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(lead, j)) != 0) m(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || sgn(m(i, c)) == 0) continue;
      factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(lead, j)) != 0) m(i, j) -= factor * m(lead, j);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.form = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank(); }

std::vector<RationalVector> null_space(const RationalMatrix& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t row = 0; row < r.pivots.size(); ++row) v[r.pivots[row]] = -r.form(row, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

SpanBasis::SpanBasis(std::size_t length, bool track_coordinates)
    : length_(length), track_(track_coordinates) {}

void SpanBasis::reduce(RationalVector& v, RationalVector* multipliers) const {
  Rational f;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(v[p]) == 0) continue;
    f = v[p];
    const auto& row = rows_[i];
    for (std::size_t j = p; j < length_; ++j)
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
    if (multipliers) (*multipliers)[i] = f;
  }
}

bool SpanBasis::insert(RationalVector v) {
  if (v.size() != length_) throw DimensionMismatch("span vector length");
  const std::size_t k = rows_.size();
  RationalVector mult(k);
  reduce(v, track_ ? &mult : nullptr);
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
  if (it == v.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - v.begin());
  const Rational inv = 1 / v[p];
  for (std::size_t j = p; j < length_; ++j)
    if (sgn(v[j]) != 0) v[j] *= inv;
  if (track_) {
    // new row = (input − Σ mult_i·row_i) / pivot, expanded over accepted inputs
    RationalVector c(k + 1);
    c[k] = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(mult[i]) == 0) continue;
      const auto& ci = coords_[i];
      for (std::size_t j = 0; j < ci.size(); ++j)
        if (sgn(ci[j]) != 0) c[j] -= mult[i] * ci[j];
    }
    for (auto& e : c)
      if (sgn(e) != 0) e *= inv;
    coords_.push_back(std::move(c));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

std::optional<RationalVector> SpanBasis::coordinates(RationalVector v) const {
  if (!track_) throw std::logic_error("SpanBasis built without coordinate tracking");
  if (v.size() != length_) throw DimensionMismatch("span vector length");
  RationalVector mult(rows_.size());
  reduce(v, &mult);
  for (const auto& q : v)
    if (sgn(q) != 0) return std::nullopt;
  RationalVector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (sgn(mult[i]) == 0) continue;
    const auto& ci = coords_[i];
    for (std::size_t j = 0; j < ci.size(); ++j)
      if (sgn(ci[j]) != 0) out[j] += mult[i] * ci[j];
  }
  return out;
}

bool SpanBasis::contains(RationalVector v) const {
  if (v.size() != length_) throw DimensionMismatch("span vector length");
  reduce(v, nullptr);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RationalVector flatten(const RationalMatrix& m) {
  return RationalVector(m.entries().begin(), m.entries().end());
}

std::optional<RationalVector> span_contains(std::span<const RationalMatrix> basis,
                                            const RationalMatrix& m) {
  for (const auto& b : basis)
    if (b.rows() != m.rows() || b.cols() != m.cols())
      throw DimensionMismatch("span_contains: basis and target shapes differ");
  const std::size_t d = basis.size();
  const std::size_t len = m.rows() * m.cols();
  // Columns are the basis vectors, last column is the target.
  RationalMatrix system(len, d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    const auto e = basis[j].entries();
    for (std::size_t i = 0; i < len; ++i) system(i, j) = e[i];
  }
  const auto target = m.entries();
  for (std::size_t i = 0; i < len; ++i) system(i, d) = target[i];
  const auto r = rref(std::move(system));
  if (!r.pivots.empty() && r.pivots.back() == d) return std::nullopt;
  RationalVector coords(d);
  for (std::size_t row = 0; row < r.pivots.size(); ++row) coords[r.pivots[row]] = r.form(row, d);
  return coords;
}

RationalMatrix combine(std::span<const RationalMatrix> basis,
                       std::span<const Rational> coefficients) {
  if (basis.size() != coefficients.size()) throw DimensionMismatch("combine: length mismatch");
  if (basis.empty()) throw DimensionMismatch("combine: empty basis has no shape");
  RationalMatrix out(basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn(coefficients[i]) != 0) out += basis[i] * coefficients[i];
  return out;
}

std::vector<RationalMatrix> solve_commutant(std::span<const RationalMatrix> generators,
                                            std::span<const RationalMatrix> space) {
  const std::size_t d = space.size();
  if (d == 0) return {};
  const std::size_t n = space.front().rows();
  for (const auto& m : space)
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("commutant space shape");
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("commutant generator shape");

  // One equation per (generator, entry): Σ_i c_i [B_i, g](a,b) = 0.
  SpanBasis equations(d, false);
  std::vector<RationalMatrix> brackets(d);
  for (const auto& g : generators) {
    for (std::size_t i = 0; i < d; ++i) brackets[i] = commutator(space[i], g);
    for (std::size_t e = 0; e < n * n; ++e) {
      RationalVector row(d);
      bool nonzero = false;
      for (std::size_t i = 0; i < d; ++i) {
        row[i] = brackets[i].entries()[e];
        nonzero = nonzero || sgn(row[i]) != 0;
      }
      if (nonzero) equations.insert(std::move(row));
      if (equations.dimension() == d) return {};
    }
  }

  RationalMatrix system(equations.dimension(), d);
  for (std::size_t r = 0; r < equations.dimension(); ++r)
    for (std::size_t c = 0; c < d; ++c) system(r, c) = equations.rows()[r][c];

  std::vector<RationalMatrix> out;
  for (const auto& v : null_space(system)) out.push_back(combine(space, v));
  return out;
}

}  // namespace schemekit
