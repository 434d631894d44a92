#include <doctest.h>

#include <random>

#include "schemekit/quasi_thin.hpp"
#include "support.hpp"

using namespace schemekit;
using namespace testing;

TEST_CASE("wl closure examples") {
  const auto k3 = complete(3);
  CHECK(wl_closure(coloring_of(k3)) == k3);

  auto init = coloring_of(k3);
  init.colors[0] = 7;
  const auto ext = wl_closure(init);
  CHECK(ext.rank() == 5);
  REQUIRE(ext.fibers().size() == 2);
  CHECK(ext.fibers()[0] == PointSet{0});
  CHECK(ext.fibers()[1] == PointSet{1, 2});

  InitialColoring discrete{3, {0, 9, 9, 9, 1, 9, 9, 9, 2}};
  CHECK(wl_closure(discrete).rank() == 9);

  CHECK_THROWS(wl_closure(InitialColoring{2, {0, 1, 1}}));
}

TEST_CASE("one point extensions") {
  CHECK(one_point_extension(cyclic(2), 0).rank() == 4);
  CHECK(one_point_extension(cyclic(3), 1).rank() == 9);
  CHECK(one_point_extension(complete(3), 0).rank() == 5);

  // each fiber lies inside one x·s
  for (const auto& c : {complete(4), q3(), polygon(6), wreath(complete(2), complete(3)).scheme})
    for (Point x = 0; x < c.order(); ++x) {
      const auto e = one_point_extension(c, x);
      for (const auto& f : e.fibers()) {
        const Color s = c.color(x, f.front());
        for (auto p : f) CHECK(c.color(x, p) == s);
      }
      // the extension refines the original coloring
      std::vector<Color> merged(e.rank(), Color(-1));
      for (std::size_t k = 0; k < e.colors().size(); ++k) {
        auto& m = merged[e.colors()[k]];
        if (m == Color(-1)) m = c.colors()[k];
        CHECK(m == c.colors()[k]);
      }
    }
}

TEST_CASE("wl closure: fixed point and refinement on random colorings") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> order(1, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = std::size_t(order(rng));
    std::uniform_int_distribution<std::uint64_t> col(0, std::uint64_t(trial % 4 + 1));
    InitialColoring init{n, std::vector<std::uint64_t>(n * n)};
    for (auto& c : init.colors) c = col(rng);
    const auto c = wl_closure(init);
    CHECK(wl_closure(coloring_of(c)) == c);
    std::map<Color, std::uint64_t> back;
    for (std::size_t k = 0; k < n * n; ++k) {
      const auto [it, fresh] = back.try_emplace(c.colors()[k], init.colors[k]);
      CHECK(it->second == init.colors[k]);
    }
  }
}

TEST_CASE("algebra span closure") {
  std::vector<RationalMatrix> id{RationalMatrix::identity(3)};
  CHECK(algebra_span_closure(id).dimension() == 1);
  CHECK(terwilliger(complete(2), 0).dimension() == 4);
  const auto t = terwilliger(complete(3), 0);
  CHECK(t.dimension() == 5);
  CHECK(t.is_product_closed());
  CHECK(t.is_transpose_closed());
  CHECK(t.contains(RationalMatrix::identity(3)));
  CHECK(terwilliger(cyclic(3), 0).dimension() == 9);
  CHECK_THROWS(terwilliger(direct_sum(complete(2), complete(2)).configuration, 0));

  // a non-transpose-closed generator set is reported, not repaired
  std::vector<RationalMatrix> upper{RationalMatrix::from_rows({{0, 1}, {0, 0}})};
  CHECK_THROWS_AS(algebra_span_closure(upper), InternalError);
  SpanClosureOptions loose;
  loose.require_transpose_closed = false;
  CHECK(algebra_span_closure(upper, loose).dimension() == 2);
}

TEST_CASE("generator log names every element") {
  const auto t = terwilliger(q2(), 0);
  REQUIRE(t.generator_log().size() == t.dimension());
  CHECK(t.generator_log()[0] == "unit");
}

TEST_CASE("terwilliger dimensions: exact closure against the float word oracle") {
  struct Row {
    const char* name;
    CoherentConfiguration c;
    std::size_t dim;
  };
  // frozen values; the float word closure below recomputes each one independently
  const std::vector<Row> rows{
      {"K2", complete(2), 4},
      {"K3", complete(3), 5},
      {"Z3", cyclic(3), 9},
      {"K2 wr K3", wreath(complete(2), complete(3)).scheme, 11},
      {"K2 wr Q2", wreath(complete(2), q2()).scheme, 19},
      {"Z3 wr K3", wreath(cyclic(3), complete(3)).scheme, 19},
      {"K2 wr C5", wreath(complete(2), polygon(5)).scheme, 22},
      {"K3 wr K3", wreath(complete(3), complete(3)).scheme, 12},
      {"K2 wr Q3", wreath(complete(2), q3()).scheme, 30},
  };
  for (const auto& r : rows) {
    CAPTURE(r.name);
    const auto t = terwilliger(r.c, 0);
    CHECK(t.dimension() == r.dim);
    CHECK(float_algebra_dimension(terwilliger_generators(r.c, 0)) == r.dim);
  }
}

TEST_CASE("terwilliger algebra sits inside the adjacency algebra of the one point extension") {
  for (const auto& c : {complete(2), complete(3), complete(4), q2(), q3(), polygon(5)})
    for (Point x = 0; x < c.order(); ++x) {
      const auto ext = adjacency_algebra(one_point_extension(c, x));
      for (const auto& g : terwilliger_generators(c, x)) CHECK(ext.contains(g));
      const auto t = terwilliger(c, x);
      for (const auto& b : t.elements()) CHECK(ext.contains(b));
    }
}

TEST_CASE("corner of the wreath terwilliger algebra") {
  const auto w = wreath(complete(2), complete(3));
  const auto r = restriction_corner_basis(w, 0, 0);
  CHECK(r.equal);
  CHECK(r.corner.dimension() == r.generated.dimension());
  CHECK(r.corner.contains(r.corner.unit()));
  CHECK(r.corner.unit() * r.corner.unit() == r.corner.unit());

  CHECK(r.fiber_count == 1);
  CHECK(r.refined_equal);

  // several fibers off y₀: the σ_s⊗I generators need the fiber projections
  struct Row {
    CoherentConfiguration y;
    std::size_t corner, generated;
  };
  const std::vector<Row> rows{{cyclic(2), 2, 2}, {q2(), 7, 6}, {polygon(5), 10, 9}, {q3(), 14, 12}};
  for (const auto& row : rows) {
    const auto wy = wreath(complete(2), row.y);
    for (Point y0 = 0; y0 < row.y.order(); ++y0) {
      const auto c = restriction_corner_basis(wy, 0, y0);
      CAPTURE(row.y.order());
      CHECK(c.corner.dimension() == row.corner);
      CHECK(c.generated.dimension() == row.generated);
      CHECK(c.generated_inside);
      CHECK(c.refined_equal);
      CHECK(c.equal == (c.fiber_count == 1));
    }
  }
  CHECK_THROWS(restriction_corner_basis(wreath(complete(2), complete(1)), 0, 0));
}
