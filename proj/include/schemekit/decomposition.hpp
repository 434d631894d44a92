#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schemekit/closure.hpp"

namespace schemekit {

/// Numeric matrices; used only by the spectral oracle and for idempotents
/// that have no rational form.
using ComplexMatrixF = Eigen::MatrixXcd;

ComplexMatrixF to_complex(const RationalMatrix& m);
double max_abs(const ComplexMatrixF& m);

struct CenterBasis {
  std::vector<RationalMatrix> elements;
  std::size_t dimension() const noexcept { return elements.size(); }
};

/// Z(A) = {Z ∈ A : ZG = GZ for every generator G}, exactly.
CenterBasis center(const AlgebraBasis& a);

class NotInAlgebra : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element checked for being a central primitive idempotent of an algebra.
/// Exact certificates use rational arithmetic only; numeric ones compare
/// against a tolerance and say so through `exact == false`.
struct IdempotentCertificate {
  std::string family;      // trivial | tilde | bar:<t> | hat:<t> | eta | eta:<i>
  std::size_t member = 0;  // position inside the family
  bool exact = false;
  std::optional<RationalMatrix> element;  // exact mode only
  ComplexMatrixF numeric;                 // always present
  bool in_algebra = false;
  bool idempotent = false;
  bool central = false;
  bool primitive = false;
  std::optional<Rational> trace;  // exact mode only
  double numeric_trace = 0.0;
  std::string failure;            // first failed check, empty when certified

  bool certified() const { return in_algebra && idempotent && central && primitive; }
  std::string label() const;
};

/// Dimension of the center of e·A·e, where e·A·e is spanned by the e·B·e.
std::size_t corner_center_dimension(const RationalMatrix& e, const AlgebraBasis& a);

/// Certifies candidate idempotents against one algebra; caches its center
/// and a numeric orthonormal frame of it.
class Certifier {
 public:
  explicit Certifier(const AlgebraBasis& a);

  const AlgebraBasis& algebra() const noexcept { return *algebra_; }
  const CenterBasis& center() const noexcept { return center_; }

  /// Exact path. Throws NotInAlgebra when e ∉ A. Centrality is checked
  /// against the generators (equivalent to the whole algebra). Primitivity:
  /// for a central e, Z(eAe) = Z(A)·e, so it is rank{Z_k·e} = 1.
  IdempotentCertificate certify(const RationalMatrix& e, std::string family,
                                std::size_t member = 0) const;

  /// Numeric path at tolerance tol; membership failures are reported in the
  /// certificate rather than thrown.
  IdempotentCertificate certify(const ComplexMatrixF& e, std::string family, std::size_t member,
                                double tol) const;

 private:
  const AlgebraBasis* algebra_;
  CenterBasis center_;
  Eigen::MatrixXcd frame_;  // orthonormal columns spanning A (flattened)
  std::vector<ComplexMatrixF> numeric_generators_;
  std::vector<ComplexMatrixF> numeric_center_;
};

/// Convenience wrapper around Certifier for a single element.
IdempotentCertificate certify_idempotent(const RationalMatrix& e, const AlgebraBasis& a);

struct PartitionReport {
  bool pass = false;
  bool exact = false;          // every member exact and all identities exact
  std::size_t size = 0;
  double max_sum_deviation = 0.0;
  double max_cross_product = 0.0;
  std::string failure;         // first failing witness
};

/// Pairwise orthogonality, certification of every member and Σ e_i = unit.
/// Exact members are compared exactly; any numeric member switches to tol.
PartitionReport verify_partition(const std::vector<IdempotentCertificate>& members,
                                 const AlgebraBasis& a, double tol);

/// Exact-only form over bare matrices.
PartitionReport verify_partition(const std::vector<RationalMatrix>& es, const AlgebraBasis& a);

class SpectralAmbiguity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpectralOptions {
  double tol = 1e-9;
  std::uint64_t seed = 0x5eedULL;
  int retries = 8;
};

/// Central primitive idempotents from the spectrum of a random Hermitian
/// central element. Independent of the exact pipeline: the center is found by
/// an SVD null space. Throws SpectralAmbiguity when the retry budget runs out.
std::vector<ComplexMatrixF> numeric_central_primitive_idempotents(const AlgebraBasis& a,
                                                                  const SpectralOptions& opts = {});

/// Numeric dimension of the center (same null-space computation as above).
std::size_t numeric_center_dimension(const AlgebraBasis& a, double tol = 1e-9);

/// Entrywise best rational with denominator ≤ max_den, accepted when within
/// 1e-6 and the imaginary part is below 1e-9.
std::optional<RationalMatrix> rational_reconstruct(const ComplexMatrixF& m, long max_den);

/// Best rational approximation with bounded denominator.
Rational limit_denominator(const Rational& q, long max_den);

struct ProjectorMatching {
  bool complete = false;           // sizes agree and every pair matched
  double max_distance = 0.0;       // worst matched entrywise distance
  std::vector<std::size_t> assignment;  // first[i] ↦ second[assignment[i]]
};

/// Greedy bottleneck matching by minimal entrywise (max-abs) distance.
ProjectorMatching match_projectors(const std::vector<ComplexMatrixF>& first,
                                   const std::vector<ComplexMatrixF>& second);

}  // namespace schemekit
