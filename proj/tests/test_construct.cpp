#include <doctest.h>

#include <numeric>

#include "schemekit/quasi_thin.hpp"
#include "support.hpp"

using namespace schemekit;
using namespace testing;

namespace {

CoherentConfiguration point() { return complete(1); }

std::vector<CoherentConfiguration> fixtures() {
  return {complete(2), complete(3), complete(4), cyclic(2), cyclic(3), q2(), q3(), polygon(5)};
}

}  // namespace

TEST_CASE("direct sum") {
  const auto ds = direct_sum(complete(2), complete(2));
  CHECK(ds.configuration.order() == 4);
  CHECK(ds.configuration.rank() == 6);
  CHECK(restrict_to(ds.configuration, ds.first_points) == complete(2));
  CHECK(restrict_to(ds.configuration, ds.second_points) == complete(2));
}

TEST_CASE("direct sum of the Case2 blocks reproduces the thin residue extension") {
  const auto p = quasi_thin_profile(q2(), 0);
  const auto& ext = *p.extension;
  REQUIRE(p.blocks.size() == 2);
  const auto a = restrict_to(ext, p.blocks[0]);
  const auto b = restrict_to(ext, p.blocks[1]);
  const auto ds = direct_sum(a, b).configuration;
  // sum point k ↦ k-th point of Y_0 followed by Y_1
  std::vector<Point> to_ext;
  to_ext.insert(to_ext.end(), p.blocks[0].begin(), p.blocks[0].end());
  to_ext.insert(to_ext.end(), p.blocks[1].begin(), p.blocks[1].end());
  std::vector<Color> pulled(ext.order() * ext.order());
  for (Point x = 0; x < ext.order(); ++x)
    for (Point y = 0; y < ext.order(); ++y) pulled[x * ext.order() + y] = ext.color(to_ext[x], to_ext[y]);
  CHECK(same_partition(pulled, ds.colors()));
}

TEST_CASE("direct product") {
  const auto p = direct_product(complete(2), complete(2));
  CHECK(p.order() == 4);
  CHECK(p.rank() == 4);
  CHECK(direct_product(complete(3), point()) == complete(3));
  const auto k3 = complete(3), k2 = complete(2);
  const auto q = direct_product(k3, k2);
  for (Color s = 0; s < k3.rank(); ++s)
    for (Color t = 0; t < k2.rank(); ++t) {
      CHECK(q.valency(s * k2.rank() + t) == k3.valency(s) * k2.valency(t));
      CHECK(q.adjacency_matrix(s * k2.rank() + t) == kron(k3.adjacency_matrix(s), k2.adjacency_matrix(t)));
    }
}

TEST_CASE("wreath product") {
  const auto w = wreath(complete(2), complete(3));
  CHECK(w.scheme.order() == 6);
  CHECK(w.scheme.rank() == 3);
  std::vector<std::size_t> val;
  for (Color c = 0; c < 3; ++c) val.push_back(w.scheme.valency(c));
  CHECK(val == std::vector<std::size_t>{1, 1, 4});

  const auto w2 = wreath(complete(2), cyclic(2));
  std::vector<std::size_t> v2;
  for (Color c = 0; c < 3; ++c) v2.push_back(w2.scheme.valency(c));
  CHECK(v2 == std::vector<std::size_t>{1, 1, 2});
  CHECK(quasi_thin_profile(w2.scheme, 0).case_tag == QuasiThinCase::Case2);

  CHECK(wreath(point(), q3()).scheme == q3());
  CHECK_THROWS(wreath(direct_sum(complete(2), complete(2)).configuration, complete(2)));
}

TEST_CASE("wreath adjacency identities and epsilon identities") {
  for (const auto& x : {complete(2), cyclic(3)})
    for (const auto& y : {complete(3), q2(), polygon(5)}) {
      const auto w = wreath(x, y);
      const auto& lab = w.labeling;
      CHECK(w.scheme.rank() == x.rank() + y.rank() - 1);
      const auto iy = RationalMatrix::identity(y.order());
      const auto jx = RationalMatrix::ones(x.order(), x.order());
      for (Color s = 0; s < x.rank(); ++s)
        CHECK(w.scheme.adjacency_matrix(lab.tilde[s]) == kron(x.adjacency_matrix(s), iy));
      CHECK_FALSE(lab.bar[0]);
      for (Color t = 1; t < y.rank(); ++t)
        CHECK(w.scheme.adjacency_matrix(*lab.bar[t]) == kron(jx, y.adjacency_matrix(t)));

      const Point x0 = 0, y0 = Point(y.order() - 1), base = lab.point(x0, y0);
      for (Color s = 0; s < x.rank(); ++s) {
        const auto lhs = diagonal_projection(w.scheme.order(), w.scheme.neighbours(base, lab.tilde[s]));
        const auto rhs = kron(diagonal_projection(x.order(), x.neighbours(x0, s)),
                              diagonal_projection(y.order(), {y0}));
        CHECK(lhs == rhs);
      }
      for (Color t = 1; t < y.rank(); ++t) {
        const auto lhs = diagonal_projection(w.scheme.order(), w.scheme.neighbours(base, *lab.bar[t]));
        const auto rhs = kron(RationalMatrix::identity(x.order()),
                              diagonal_projection(y.order(), y.neighbours(y0, t)));
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("rank identities and revalidation on all fixtures") {
  const auto fx = fixtures();
  for (const auto& a : fx)
    for (const auto& b : fx) {
      const auto ds = direct_sum(a, b).configuration;
      CHECK(ds.rank() == a.rank() + b.rank() + 2 * a.fibers().size() * b.fibers().size());
      CHECK(revalidate(ds) == ds);
      const auto dp = direct_product(a, b);
      CHECK(dp.rank() == a.rank() * b.rank());
      CHECK(revalidate(dp) == dp);
      const auto wr = wreath(a, b).scheme;
      CHECK(wr.rank() == a.rank() + b.rank() - 1);
      CHECK(revalidate(wr) == wr);
    }
}

TEST_CASE("thin residue extension") {
  const auto k3 = complete(3);
  CHECK(same_partition(thin_residue_extension(k3, {0, 1}).colors(), k3.colors()));

  const auto q = q2();
  const auto h = thin_residue(q);
  const auto ext = thin_residue_extension(q, h);
  CHECK(ext.order() == 4);
  CHECK(ext.rank() == 6);
  CHECK(ext.fibers().size() == 2);
  CHECK(ext.fibers() == quotient_classes(q, h));

  CHECK_THROWS(thin_residue_extension(q, {0}));  // does not contain the thin residue
  CHECK_THROWS(thin_residue_extension(q, {0, 2}));  // not closed
}
