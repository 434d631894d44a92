#include "schemekit/matrix.hpp"

#include <sstream>

namespace schemekit {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("malformed rational: " + s);
  }
  q.canonicalize();
  return q;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("entry count does not match " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::ones(std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (auto& e : m.data_) e = 1;
  return m;
}

RationalMatrix RationalMatrix::unit(std::size_t rows, std::size_t cols, std::size_t i,
                                    std::size_t j) {
  RationalMatrix m(rows, cols);
  m(i, j) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> diag) {
  RationalMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : data_)
    if (sgn(e) != 0) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(other.data_[k]) != 0) data_[k] += other.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(other.data_[k]) != 0) data_[k] -= other.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar) {
  for (auto& e : data_)
    if (sgn(e) != 0) e *= scalar;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
  RationalMatrix c(a.rows_, b.cols_);
  Rational term;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        term = aik * bkj;
        c(i, j) += term;
      }
    }
  }
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (sgn(aij) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (sgn(b(p, q)) != 0) k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
  return a * b - b * a;
}

}  // namespace schemekit
