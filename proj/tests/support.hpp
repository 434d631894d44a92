#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "schemekit/closure.hpp"
#include "schemekit/construct.hpp"
#include "schemekit/scheme_io.hpp"

namespace testing {

using namespace schemekit;

inline CoherentConfiguration complete(int n) {
  std::vector<std::uint64_t> c(std::size_t(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[std::size_t(i * n + j)] = i != j;
  return CoherentConfiguration::from_partition(std::size_t(n), c);
}

inline CoherentConfiguration cyclic(int n) {
  std::vector<std::uint64_t> c(std::size_t(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[std::size_t(i * n + j)] = std::uint64_t(((j - i) % n + n) % n);
  return CoherentConfiguration::from_partition(std::size_t(n), c);
}

// Distance scheme of the n-cycle.
inline CoherentConfiguration polygon(int n) {
  std::vector<std::uint64_t> c(std::size_t(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int d = ((j - i) % n + n) % n;
      c[std::size_t(i * n + j)] = std::uint64_t(std::min(d, n - d));
    }
  return CoherentConfiguration::from_partition(std::size_t(n), c);
}

inline CoherentConfiguration q2() { return wreath(complete(2), cyclic(2)).scheme; }
inline CoherentConfiguration q3() { return wreath(complete(2), cyclic(3)).scheme; }

inline std::string fixture(const std::string& name) {
  return std::string(SCHEMEKIT_FIXTURES) + "/" + name;
}

inline CoherentConfiguration load_fixture(const std::string& name) {
  return load_scheme(fixture(name)).configuration;
}

// Two colorings define the same partition of the pairs.
inline bool same_partition(std::span<const Color> a, std::span<const Color> b) {
  if (a.size() != b.size()) return false;
  std::map<Color, Color> ab, ba;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (ab.try_emplace(a[k], b[k]).first->second != b[k]) return false;
    if (ba.try_emplace(b[k], a[k]).first->second != a[k]) return false;
  }
  return true;
}

// Runs the full axiom check again on an already built configuration.
inline CoherentConfiguration revalidate(const CoherentConfiguration& c) {
  return CoherentConfiguration::validate(c.order(), std::vector<Color>(c.colors().begin(), c.colors().end()));
}

inline Eigen::MatrixXd to_double(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

// Dimension of the unital algebra generated by the matrices, by floating-point
// word closure with Gram-Schmidt. Shares no code with the exact pipeline.
inline std::size_t float_algebra_dimension(const std::vector<RationalMatrix>& gens) {
  const auto n = Eigen::Index(gens.front().rows());
  std::vector<Eigen::MatrixXd> g;
  for (const auto& m : gens) g.push_back(to_double(m));
  std::vector<Eigen::MatrixXd> basis;   // orthonormal (Frobenius)
  std::vector<Eigen::MatrixXd> words;   // the accepted words themselves
  auto try_add = [&](const Eigen::MatrixXd& w) {
    const double norm = w.norm();
    if (norm < 1e-12) return;
    Eigen::MatrixXd r = w / norm;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) r -= (b.cwiseProduct(r)).sum() * b;
    if (r.norm() < 1e-8) return;
    basis.push_back(r / r.norm());
    words.push_back(w / norm);
  };
  try_add(Eigen::MatrixXd::Identity(n, n));
  for (const auto& m : g) try_add(m);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (const auto& m : g) try_add(m * words[i]);
  return basis.size();
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range = 5,
                                    int den = 3) {
  std::uniform_int_distribution<int> num(-range, range), d(1, den);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = Rational(num(rng), d(rng));
      m(i, j).canonicalize();
    }
  return m;
}

}  // namespace testing
