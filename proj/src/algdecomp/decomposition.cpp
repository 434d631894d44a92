#include "schemekit/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace schemekit {

ComplexMatrixF to_complex(const RationalMatrix& m) {
  ComplexMatrixF out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

double max_abs(const ComplexMatrixF& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

CenterBasis center(const AlgebraBasis& a) {
  return {solve_commutant(a.generators(), a.elements())};
}

std::string IdempotentCertificate::label() const {
  return family + "#" + std::to_string(member);
}

namespace {

Eigen::MatrixXd to_real(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

// Orthonormal columns spanning the flattened algebra (row-major flattening).
Eigen::MatrixXd orthonormal_frame(const AlgebraBasis& a) {
  const std::size_t n = a.matrix_order(), d = a.dimension();
  Eigen::MatrixXd b(n * n, d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto m = to_real(a.elements()[k]);
    Eigen::VectorXd v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v(i * n + j) = m(i, j);
    b.col(k) = v / v.norm();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(b);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n * n, d);
}

Eigen::MatrixXd unflatten(const Eigen::VectorXd& v, std::size_t n) {
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v(i * n + j);
  return m;
}

Eigen::VectorXcd flatten_numeric(const ComplexMatrixF& m) {
  const auto n = m.rows();
  Eigen::VectorXcd v(m.size());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

// Real basis of the center, computed from scratch in floating point.
std::vector<Eigen::MatrixXd> float_center(const AlgebraBasis& a) {
  const std::size_t n = a.matrix_order(), d = a.dimension();
  const Eigen::MatrixXd q = orthonormal_frame(a);
  std::vector<Eigen::MatrixXd> qs;
  qs.reserve(d);
  for (std::size_t k = 0; k < d; ++k) qs.push_back(unflatten(q.col(k), n));

  Eigen::MatrixXd normal = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd block(n * n, d);
  for (const auto& g_exact : a.generators()) {
    Eigen::MatrixXd g = to_real(g_exact);
    const double s = g.cwiseAbs().maxCoeff();
    if (s == 0) continue;
    g /= s;
    for (std::size_t k = 0; k < d; ++k) {
      const Eigen::MatrixXd c = qs[k] * g - g * qs[k];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) block(i * n + j, k) = c(i, j);
    }
    normal.noalias() += block.transpose() * block;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(normal);
  const auto& lambda = eig.eigenvalues();
  const double top = std::sqrt(std::max(0.0, lambda(d - 1)));
  const double cut = 1e-6 * std::max(1.0, top);
  std::vector<Eigen::MatrixXd> out;
  for (std::size_t k = 0; k < d; ++k) {
    if (std::sqrt(std::max(0.0, lambda(k))) > cut) continue;
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < d; ++i) z += eig.eigenvectors()(i, k) * qs[i];
    out.push_back(std::move(z));
  }
  return out;
}

// Numeric rank of a list of matrices, relative to the largest singular value.
std::size_t numeric_rank(const std::vector<ComplexMatrixF>& ms, double rel) {
  if (ms.empty()) return 0;
  Eigen::MatrixXcd cols(ms.front().size(), ms.size());
  for (std::size_t k = 0; k < ms.size(); ++k) cols.col(k) = flatten_numeric(ms[k]);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cols);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) < 1e-12) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel * sv(0)) ++r;
  return r;
}

double rank_tolerance(double tol) { return std::max(1e-8, std::sqrt(tol)); }

}  // namespace

std::size_t corner_center_dimension(const RationalMatrix& e, const AlgebraBasis& a) {
  const std::size_t n = a.matrix_order();
  SpanBasis span(n * n, false);
  std::vector<RationalMatrix> corner;
  for (const auto& b : a.elements()) {
    auto m = e * b * e;
    if (span.insert(flatten(m))) corner.push_back(std::move(m));
  }
  return solve_commutant(corner, corner).size();
}

Certifier::Certifier(const AlgebraBasis& a) : algebra_(&a), center_(schemekit::center(a)) {
  frame_ = orthonormal_frame(a).cast<std::complex<double>>();
  for (const auto& g : a.generators()) {
    ComplexMatrixF m = to_complex(g);
    const double s = max_abs(m);
    numeric_generators_.push_back(s > 0 ? ComplexMatrixF(m / s) : m);
  }
  for (const auto& z : center_.elements) {
    ComplexMatrixF m = to_complex(z);
    numeric_center_.push_back(m / max_abs(m));
  }
}

IdempotentCertificate Certifier::certify(const RationalMatrix& e, std::string family,
                                         std::size_t member) const {
  const auto& a = *algebra_;
  if (!a.contains(e)) throw NotInAlgebra("element is not in the algebra (" + family + ")");
  IdempotentCertificate c;
  c.family = std::move(family);
  c.member = member;
  c.exact = true;
  c.numeric = to_complex(e);
  c.in_algebra = true;
  c.idempotent = e * e == e;
  c.central = std::all_of(a.generators().begin(), a.generators().end(),
                          [&](const RationalMatrix& g) { return e * g == g * e; });
  if (c.central) {
    SpanBasis span(e.rows() * e.cols(), false);
    for (const auto& z : center_.elements) span.insert(flatten(z * e));
    c.primitive = span.dimension() == 1;
  } else {
    c.primitive = corner_center_dimension(e, a) == 1;
  }
  c.trace = e.trace();
  c.numeric_trace = c.trace->get_d();
  if (!c.idempotent)
    c.failure = c.label() + ": e*e != e";
  else if (!c.central)
    c.failure = c.label() + ": does not commute with a generator";
  else if (!c.primitive)
    c.failure = c.label() + ": not primitive";
  c.element = e;
  return c;
}

IdempotentCertificate Certifier::certify(const ComplexMatrixF& e, std::string family,
                                         std::size_t member, double tol) const {
  const auto& a = *algebra_;
  IdempotentCertificate c;
  c.family = std::move(family);
  c.member = member;
  c.exact = false;
  c.numeric = e;
  const double scale = std::max(1.0, max_abs(e));

  const Eigen::VectorXcd v = flatten_numeric(e);
  const Eigen::VectorXcd residual = v - frame_ * (frame_.adjoint() * v);
  c.in_algebra = residual.cwiseAbs().maxCoeff() <= tol * scale;
  c.idempotent = max_abs(e * e - e) <= tol * scale;
  c.central = std::all_of(numeric_generators_.begin(), numeric_generators_.end(),
                          [&](const ComplexMatrixF& g) {
                            return max_abs(e * g - g * e) <= tol * scale;
                          });
  if (c.central) {
    std::vector<ComplexMatrixF> products;
    for (const auto& z : numeric_center_) products.push_back(z * e);
    c.primitive = numeric_rank(products, rank_tolerance(tol)) == 1;
  } else {
    c.primitive = false;  // only central candidates are meaningful numerically
  }
  c.numeric_trace = e.trace().real();
  if (!c.in_algebra)
    c.failure = c.label() + ": outside the algebra beyond tolerance";
  else if (!c.idempotent)
    c.failure = c.label() + ": e*e != e beyond tolerance";
  else if (!c.central)
    c.failure = c.label() + ": does not commute with a generator beyond tolerance";
  else if (!c.primitive)
    c.failure = c.label() + ": not primitive";
  (void)a;
  return c;
}

IdempotentCertificate certify_idempotent(const RationalMatrix& e, const AlgebraBasis& a) {
  return Certifier(a).certify(e, "element");
}

PartitionReport verify_partition(const std::vector<IdempotentCertificate>& members,
                                 const AlgebraBasis& a, double tol) {
  PartitionReport r;
  r.size = members.size();
  r.exact = std::all_of(members.begin(), members.end(),
                        [](const IdempotentCertificate& c) { return c.exact; });
  auto fail = [&](std::string why) {
    if (r.failure.empty()) r.failure = std::move(why);
  };
  for (const auto& c : members)
    if (!c.certified()) fail(c.failure.empty() ? c.label() + ": not certified" : c.failure);

  if (r.exact) {
    RationalMatrix sum(a.matrix_order(), a.matrix_order());
    for (std::size_t i = 0; i < members.size(); ++i) {
      sum += *members[i].element;
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i == j) continue;
        const auto p = *members[i].element * *members[j].element;
        if (!p.is_zero()) {
          r.max_cross_product = std::max(r.max_cross_product, max_abs(to_complex(p)));
          fail(members[i].label() + " * " + members[j].label() + " != 0");
        }
      }
    }
    if (!(sum == a.unit())) {
      r.max_sum_deviation = max_abs(to_complex(sum - a.unit()));
      fail("sum of members != unit");
    }
  } else {
    const ComplexMatrixF unit = to_complex(a.unit());
    ComplexMatrixF sum = ComplexMatrixF::Zero(unit.rows(), unit.cols());
    for (std::size_t i = 0; i < members.size(); ++i) {
      sum += members[i].numeric;
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i == j) continue;
        const double dev = max_abs(members[i].numeric * members[j].numeric);
        r.max_cross_product = std::max(r.max_cross_product, dev);
        if (dev > tol) fail(members[i].label() + " * " + members[j].label() + " != 0");
      }
    }
    r.max_sum_deviation = max_abs(sum - unit);
    if (r.max_sum_deviation > tol) fail("sum of members != unit");
  }
  r.pass = r.failure.empty();
  return r;
}

PartitionReport verify_partition(const std::vector<RationalMatrix>& es, const AlgebraBasis& a) {
  const Certifier cert(a);
  std::vector<IdempotentCertificate> members;
  for (std::size_t i = 0; i < es.size(); ++i) members.push_back(cert.certify(es[i], "member", i));
  return verify_partition(members, a, 0.0);
}

std::size_t numeric_center_dimension(const AlgebraBasis& a, double /*tol*/) {
  return float_center(a).size();
}

std::vector<ComplexMatrixF> numeric_central_primitive_idempotents(const AlgebraBasis& a,
                                                                  const SpectralOptions& opts) {
  const std::size_t n = a.matrix_order();
  const auto zs = float_center(a);
  const Eigen::MatrixXd unit = to_real(a.unit());
  const Eigen::MatrixXd complement = Eigen::MatrixXd::Identity(n, n) - unit;
  const bool proper_unit = complement.cwiseAbs().maxCoeff() > 0;
  const std::size_t expected = zs.size() + (proper_unit ? 1 : 0);

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int attempt = 0; attempt < opts.retries; ++attempt) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& z : zs) {
      const double re = coef(rng), im = coef(rng);
      h += re * (z + z.transpose()).cast<std::complex<double>>();
      h += std::complex<double>(0.0, im) * (z - z.transpose()).cast<std::complex<double>>();
    }
    if (proper_unit) h += (2.0 + coef(rng)) * complement.cast<std::complex<double>>();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
    const auto& lambda = eig.eigenvalues();
    const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
    std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
    double min_gap = std::numeric_limits<double>::infinity();
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= lambda.size(); ++i) {
      if (i < lambda.size() && lambda(i) - lambda(i - 1) <= 1e-8 * scale) continue;
      if (i < lambda.size()) min_gap = std::min(min_gap, lambda(i) - lambda(i - 1));
      clusters.emplace_back(start, i);
      start = i;
    }
    if (clusters.size() != expected || min_gap < 1e-5 * scale) continue;

    std::vector<ComplexMatrixF> out;
    for (auto [lo, hi] : clusters) {
      const Eigen::MatrixXcd v = eig.eigenvectors().middleCols(lo, hi - lo);
      ComplexMatrixF p = v * v.adjoint();
      if (proper_unit && (p - complement.cast<std::complex<double>>()).cwiseAbs().maxCoeff() < 1e-6)
        continue;
      out.push_back(std::move(p));
    }
    if (out.size() == zs.size()) return out;
  }
  throw SpectralAmbiguity("eigenvalue clusters of random central elements stayed ambiguous");
}

Rational limit_denominator(const Rational& q, long max_den) {
  if (max_den < 1) throw std::invalid_argument("max_den must be positive");
  const mpz_class bound(max_den);
  if (q.get_den() <= bound) return q;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = q.get_num(), d = q.get_den();
  for (;;) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const mpz_class q2 = q0 + a * q1;
    if (q2 > bound) break;
    const mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const mpz_class r = n - a * d;
    n = d;
    d = r;
  }
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), mpz_class(bound - q0).get_mpz_t(), q1.get_mpz_t());
  Rational b1(mpz_class(p0 + k * p1), mpz_class(q0 + k * q1));
  Rational b2(p1, q1);
  b1.canonicalize();
  b2.canonicalize();
  return abs(Rational(b2 - q)) <= abs(Rational(b1 - q)) ? Rational(b2) : Rational(b1);
}

std::optional<RationalMatrix> rational_reconstruct(const ComplexMatrixF& m, long max_den) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto z = m(i, j);
      if (std::abs(z.imag()) > 1e-9 || !std::isfinite(z.real())) return std::nullopt;
      Rational q = limit_denominator(Rational(z.real()), max_den);
      if (std::abs(q.get_d() - z.real()) > 1e-6) return std::nullopt;
      out(i, j) = std::move(q);
    }
  return out;
}

ProjectorMatching match_projectors(const std::vector<ComplexMatrixF>& first,
                                   const std::vector<ComplexMatrixF>& second) {
  ProjectorMatching m;
  m.assignment.assign(first.size(), second.size());
  if (first.size() != second.size()) return m;
  struct Pair {
    double dist;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < first.size(); ++i)
    for (std::size_t j = 0; j < second.size(); ++j) {
      const double d = first[i].rows() == second[j].rows() && first[i].cols() == second[j].cols()
                           ? max_abs(first[i] - second[j])
                           : std::numeric_limits<double>::infinity();
      pairs.push_back({d, i, j});
    }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& x, const Pair& y) { return x.dist < y.dist; });
  std::vector<bool> used(second.size(), false);
  std::size_t matched = 0;
  for (const auto& p : pairs) {
    if (m.assignment[p.i] != second.size() || used[p.j]) continue;
    m.assignment[p.i] = p.j;
    used[p.j] = true;
    m.max_distance = std::max(m.max_distance, p.dist);
    ++matched;
  }
  m.complete = matched == first.size();
  return m;
}

}  // namespace schemekit
