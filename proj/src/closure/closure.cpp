#include "schemekit/closure.hpp"

#include <array>
#include <algorithm>
#include <map>
#include <unordered_map>

namespace schemekit {

namespace {

std::vector<std::uint64_t> first_occurrence_ids(std::span<const std::uint64_t> labels,
                                                std::size_t& count) {
  std::unordered_map<std::uint64_t, std::uint64_t> ids;
  std::vector<std::uint64_t> out;
  out.reserve(labels.size());
  for (auto l : labels) out.push_back(ids.try_emplace(l, ids.size()).first->second);
  count = ids.size();
  return out;
}

}  // namespace

CoherentConfiguration wl_closure(const InitialColoring& init) {
  const std::size_t n = init.order;
  if (n == 0 || init.colors.size() != n * n)
    throw std::invalid_argument("initial coloring must be n*n with n >= 1");

  // Normalization: separate the diagonal and make colors transpose-consistent.
  std::size_t count = 0;
  std::vector<std::uint64_t> current;
  {
    std::map<std::array<std::uint64_t, 3>, std::uint64_t> ids;
    current.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::array<std::uint64_t, 3> key{init.colors[x * n + y], init.colors[y * n + x],
                                               x == y ? 1u : 0u};
        current[x * n + y] = ids.try_emplace(key, ids.size()).first->second;
      }
    count = ids.size();
  }

  std::vector<std::uint64_t> signature(n + 1);
  for (;;) {
    std::map<std::vector<std::uint64_t>, std::uint64_t> ids;
    std::vector<std::uint64_t> next(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        signature[0] = current[x * n + y];
        for (std::size_t z = 0; z < n; ++z)
          signature[z + 1] = current[x * n + z] * count + current[z * n + y];
        std::sort(signature.begin() + 1, signature.end());
        next[x * n + y] = ids.try_emplace(signature, ids.size()).first->second;
      }
    const std::size_t next_count = ids.size();
    current = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }
  std::size_t unused = 0;
  const auto labels = first_occurrence_ids(current, unused);
  return CoherentConfiguration::from_partition(n, labels);
}

InitialColoring coloring_of(const CoherentConfiguration& c) {
  InitialColoring init{c.order(), {}};
  init.colors.assign(c.colors().begin(), c.colors().end());
  return init;
}

CoherentConfiguration one_point_extension(const CoherentConfiguration& c, Point x) {
  if (x >= c.order()) throw std::out_of_range("point out of range");
  auto init = coloring_of(c);
  init.colors[std::size_t(x) * c.order() + x] = c.rank();
  return wl_closure(init);
}

AlgebraBasis::AlgebraBasis(std::vector<RationalMatrix> elements,
                           std::vector<RationalMatrix> generators, RationalMatrix unit,
                           std::vector<std::string> log)
    : elements_(std::move(elements)),
      generators_(std::move(generators)),
      unit_(std::move(unit)),
      log_(std::move(log)),
      span_(unit_.rows() * unit_.cols()) {
  log_.resize(elements_.size());
  for (const auto& e : elements_)
    if (!span_.insert(flatten(e)))
      throw std::invalid_argument("algebra basis elements are linearly dependent");
}

std::optional<RationalVector> AlgebraBasis::coordinates(const RationalMatrix& m) const {
  if (m.rows() != unit_.rows() || m.cols() != unit_.cols())
    throw DimensionMismatch("algebra membership: shape differs");
  return span_.coordinates(flatten(m));
}

bool AlgebraBasis::contains(const RationalMatrix& m) const {
  if (m.rows() != unit_.rows() || m.cols() != unit_.cols())
    throw DimensionMismatch("algebra membership: shape differs");
  return span_.contains(flatten(m));
}

bool AlgebraBasis::is_product_closed() const {
  for (const auto& a : elements_)
    for (const auto& b : elements_)
      if (!contains(a * b)) return false;
  return true;
}

bool AlgebraBasis::is_transpose_closed() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const RationalMatrix& e) { return contains(e.transpose()); });
}

AlgebraBasis algebra_span_closure(const std::vector<RationalMatrix>& generators,
                                  const SpanClosureOptions& options) {
  std::size_t n = 0;
  if (options.unit)
    n = options.unit->rows();
  else if (!generators.empty())
    n = generators.front().rows();
  else
    throw std::invalid_argument("span closure needs a unit or at least one generator");
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generator shape");

  RationalMatrix unit = options.unit ? *options.unit : RationalMatrix::identity(n);
  SpanBasis span(n * n, false);
  std::vector<RationalMatrix> elements;
  std::vector<std::string> log;
  auto add = [&](RationalMatrix m, std::string why) {
    if (span.insert(flatten(m))) {
      elements.push_back(std::move(m));
      log.push_back(std::move(why));
    }
  };
  add(unit, "unit");
  std::vector<RationalMatrix> gens;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].is_zero()) continue;
    gens.push_back(generators[j]);
    add(generators[j], "gen " + std::to_string(j));
  }
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      add(gens[j] * elements[i], "gen " + std::to_string(j) + " * elem " + std::to_string(i));

  AlgebraBasis out(std::move(elements), std::move(gens), std::move(unit), std::move(log));
  if (options.require_transpose_closed && !out.is_transpose_closed())
    throw InternalError("span closure of a transpose-closed generating set is not transpose-closed");
  return out;
}

AlgebraBasis adjacency_algebra(const CoherentConfiguration& c) {
  std::vector<RationalMatrix> sigma;
  std::vector<std::string> log;
  for (Color s = 0; s < c.rank(); ++s) {
    sigma.push_back(c.adjacency_matrix(s));
    log.push_back("sigma " + std::to_string(s));
  }
  auto gens = sigma;
  return AlgebraBasis(std::move(sigma), std::move(gens), RationalMatrix::identity(c.order()),
                      std::move(log));
}

RationalMatrix diagonal_projection(std::size_t order, const PointSet& points) {
  RationalMatrix m(order, order);
  for (auto p : points) m(p, p) = 1;
  return m;
}

std::vector<RationalMatrix> terwilliger_generators(const CoherentConfiguration& c, Point x0) {
  if (x0 >= c.order()) throw std::out_of_range("base point out of range");
  std::vector<RationalMatrix> gens;
  for (Color s = 0; s < c.rank(); ++s) gens.push_back(c.adjacency_matrix(s));
  for (Color s = 0; s < c.rank(); ++s) {
    const auto orbit = c.neighbours(x0, s);
    if (!orbit.empty()) gens.push_back(diagonal_projection(c.order(), orbit));
  }
  return gens;
}

AlgebraBasis terwilliger(const CoherentConfiguration& c, Point x0) {
  if (!c.is_homogeneous()) throw std::logic_error("Terwilliger algebra requires a scheme");
  return algebra_span_closure(terwilliger_generators(c, x0));
}

CornerReport restriction_corner_basis(const WreathProduct& w, Point x0, Point y0) {
  const auto& lab = w.labeling;
  const std::size_t nx = lab.order_x(), ny = lab.order_y(), n = nx * ny;
  if (ny < 2) throw std::invalid_argument("corner needs |Y| >= 2");
  if (x0 >= nx || y0 >= ny) throw std::out_of_range("base point out of range");

  PointSet rest_y, rest;
  for (Point y = 0; y < ny; ++y)
    if (y != y0) rest_y.push_back(y);
  for (Point p = 0; p < n; ++p)
    if (lab.y_of(p) != y0) rest.push_back(p);
  const RationalMatrix eps = diagonal_projection(n, rest);

  const auto ta = terwilliger(w.scheme, lab.point(x0, y0));
  std::vector<RationalMatrix> corner_elems;
  std::vector<std::string> corner_log;
  {
    SpanBasis span(n * n, false);
    for (std::size_t i = 0; i < ta.dimension(); ++i) {
      auto m = eps * ta.elements()[i] * eps;
      if (span.insert(flatten(m))) {
        corner_elems.push_back(std::move(m));
        corner_log.push_back("corner of elem " + std::to_string(i));
      }
    }
  }
  auto corner_gens = corner_elems;
  AlgebraBasis corner(std::move(corner_elems), std::move(corner_gens), eps, std::move(corner_log));

  const auto ext = one_point_extension(lab.base_y, y0);
  const auto jx = RationalMatrix::ones(nx, nx);
  const auto eps_y = diagonal_projection(ny, rest_y);
  std::vector<RationalMatrix> gens;
  std::size_t relations = 0;
  for (Color c = 0; c < ext.rank(); ++c) {
    const auto& src = ext.fibers()[ext.source_fiber(c)];
    const auto& dst = ext.fibers()[ext.target_fiber(c)];
    if (std::find(src.begin(), src.end(), y0) != src.end() ||
        std::find(dst.begin(), dst.end(), y0) != dst.end())
      continue;
    ++relations;
    gens.push_back(kron(jx, ext.adjacency_matrix(c)));
  }
  auto refined_gens = gens;
  for (Color s = 0; s < lab.base_x.rank(); ++s)
    gens.push_back(kron(lab.base_x.adjacency_matrix(s), eps_y));
  std::size_t fibers = 0;
  for (const auto& f : ext.fibers()) {
    if (std::find(f.begin(), f.end(), y0) != f.end()) continue;
    ++fibers;
    const auto eps_f = diagonal_projection(ny, f);
    for (Color s = 0; s < lab.base_x.rank(); ++s)
      refined_gens.push_back(kron(lab.base_x.adjacency_matrix(s), eps_f));
  }
  SpanClosureOptions opts;
  opts.unit = eps;
  auto generated = algebra_span_closure(gens, opts);
  auto refined = algebra_span_closure(refined_gens, opts);

  auto inside = [&](const AlgebraBasis& a) {
    for (const auto& m : a.elements())
      if (!corner.contains(m)) return false;
    return true;
  };
  const bool gen_inside = inside(generated);
  const bool equal = gen_inside && generated.dimension() == corner.dimension();
  const bool refined_equal = inside(refined) && refined.dimension() == corner.dimension();
  return {std::move(corner), std::move(generated), std::move(refined), relations, fibers,
          equal, refined_equal, gen_inside};
}

}  // namespace schemekit
