#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "schemekit/rational.hpp"

namespace schemekit {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix ones(std::size_t rows, std::size_t cols);
  /// Single 1 at (i, j).
  static RationalMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static RationalMatrix diagonal(std::span<const Rational> diag);
  /// Builds from nested integer rows; handy in tests and fixtures.
  static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> entries() const noexcept { return data_; }
  std::span<Rational> entries() noexcept { return data_; }

  RationalMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& scalar);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product; (A ⊗ B)[(i,k),(j,l)] = A[i,j]·B[k,l] with row index i·rows(B)+k.
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

/// a·b − b·a
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace schemekit
