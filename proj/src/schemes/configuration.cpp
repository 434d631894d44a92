#include "schemekit/configuration.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace schemekit {

namespace {

std::string join(const std::vector<std::uint32_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string describe(AxiomViolation::Condition c, const std::vector<Color>& colors,
                     const std::vector<Point>& points, const std::string& detail) {
  return "axiom violation [" + to_string(c) + "] colors {" + join(colors) + "} points {" +
         join(points) + "}: " + detail;
}

// Run-length encoded sorted keys: (s·r + t, multiplicity).
using Profile = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

Profile path_profile(const std::vector<Color>& colors, std::size_t n, std::size_t r, Point x,
                     Point y, std::vector<std::uint64_t>& scratch) {
  scratch.clear();
  for (std::size_t z = 0; z < n; ++z)
    scratch.push_back(std::uint64_t(colors[x * n + z]) * r + colors[z * n + y]);
  std::sort(scratch.begin(), scratch.end());
  Profile p;
  for (auto k : scratch) {
    if (!p.empty() && p.back().first == k)
      ++p.back().second;
    else
      p.emplace_back(k, 1);
  }
  return p;
}

}  // namespace

AxiomViolation::AxiomViolation(Condition condition, std::vector<Color> colors,
                               std::vector<Point> points, const std::string& detail)
    : std::runtime_error(describe(condition, colors, points, detail)),
      condition_(condition),
      colors_(std::move(colors)),
      points_(std::move(points)) {}

std::string to_string(AxiomViolation::Condition c) {
  using C = AxiomViolation::Condition;
  switch (c) {
    case C::Shape: return "shape";
    case C::Contiguity: return "contiguity";
    case C::Diagonal: return "diagonal";
    case C::Converse: return "converse";
    case C::FiberBlock: return "fiber-block";
    case C::Intersection: return "intersection";
  }
  return "unknown";
}

CoherentConfiguration CoherentConfiguration::validate(const std::vector<std::vector<Color>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Color> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n)
      throw AxiomViolation(AxiomViolation::Condition::Shape, {}, {}, "color matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate(n, std::move(flat));
}

CoherentConfiguration CoherentConfiguration::from_partition(std::size_t order,
                                                            std::span<const std::uint64_t> labels) {
  std::unordered_map<std::uint64_t, Color> ids;
  std::vector<Color> colors;
  colors.reserve(labels.size());
  for (auto l : labels) {
    auto [it, fresh] = ids.try_emplace(l, static_cast<Color>(ids.size()));
    colors.push_back(it->second);
  }
  return validate(order, std::move(colors));
}

CoherentConfiguration CoherentConfiguration::validate(std::size_t n, std::vector<Color> colors) {
  using C = AxiomViolation::Condition;
  if (n == 0 || colors.size() != n * n)
    throw AxiomViolation(C::Shape, {}, {}, "expected n*n colors with n >= 1");

  const std::size_t r = std::size_t(*std::max_element(colors.begin(), colors.end())) + 1;
  {
    std::vector<bool> seen(r, false);
    for (auto c : colors) seen[c] = true;
    for (std::size_t s = 0; s < r; ++s)
      if (!seen[s]) throw AxiomViolation(C::Contiguity, {Color(s)}, {}, "color never occurs");
  }

  // A constant diagonal means a scheme; its identity becomes color 0.
  {
    const Color d = colors[0];
    bool constant = true;
    for (std::size_t x = 0; x < n; ++x) constant = constant && colors[x * n + x] == d;
    if (constant && d != 0)
      for (auto& c : colors) c = c == d ? 0 : (c == 0 ? d : c);
  }

  CoherentConfiguration cc;
  cc.order_ = n;
  cc.rank_ = r;
  cc.diagonal_flag_.assign(r, false);
  for (std::size_t x = 0; x < n; ++x) cc.diagonal_flag_[colors[x * n + x]] = true;
  for (std::size_t s = 0; s < r; ++s)
    if (cc.diagonal_flag_[s]) cc.diagonal_.push_back(Color(s));

  constexpr std::size_t unset = std::size_t(-1);
  std::vector<std::size_t> first(r, unset);
  cc.sizes_.assign(r, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Color c = colors[x * n + y];
      if (x != y && cc.diagonal_flag_[c])
        throw AxiomViolation(C::Diagonal, {c}, {Point(x), Point(y)},
                             "diagonal color used off the diagonal");
      if (first[c] == unset) first[c] = x * n + y;
      ++cc.sizes_[c];
    }

  cc.star_.resize(r);
  for (std::size_t s = 0; s < r; ++s) {
    const std::size_t x = first[s] / n, y = first[s] % n;
    cc.star_[s] = colors[y * n + x];
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Color c = colors[x * n + y];
      if (colors[y * n + x] != cc.star_[c])
        throw AxiomViolation(C::Converse, {c, cc.star_[c], colors[y * n + x]},
                             {Point(x), Point(y)}, "converse of a color is not a single color");
    }

  // Fibers ordered by their smallest point.
  std::vector<std::size_t> fiber_of_diag(r, unset);
  cc.point_fiber_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Color d = colors[x * n + x];
    if (fiber_of_diag[d] == unset) {
      fiber_of_diag[d] = cc.fibers_.size();
      cc.fibers_.emplace_back();
    }
    cc.fibers_[fiber_of_diag[d]].push_back(Point(x));
    cc.point_fiber_[x] = fiber_of_diag[d];
  }
  cc.source_.resize(r);
  cc.target_.resize(r);
  for (std::size_t s = 0; s < r; ++s) {
    cc.source_[s] = cc.point_fiber_[first[s] / n];
    cc.target_[s] = cc.point_fiber_[first[s] % n];
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Color c = colors[x * n + y];
      if (cc.point_fiber_[x] != cc.source_[c] || cc.point_fiber_[y] != cc.target_[c])
        throw AxiomViolation(C::FiberBlock, {c}, {Point(x), Point(y)},
                             "color class spans several fiber blocks");
    }

  std::vector<std::uint64_t> scratch;
  scratch.reserve(n);
  std::vector<Profile> reference(r);
  for (std::size_t u = 0; u < r; ++u)
    reference[u] = path_profile(colors, n, r, Point(first[u] / n), Point(first[u] % n), scratch);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Color u = colors[x * n + y];
      if (x * n + y == first[u]) continue;
      const Profile p = path_profile(colors, n, r, Point(x), Point(y), scratch);
      if (p == reference[u]) continue;
      // Report the first (s, t) whose count differs.
      const auto& ref = reference[u];
      std::uint64_t key = 0;
      std::size_t i = 0;
      while (i < p.size() && i < ref.size() && p[i] == ref[i]) ++i;
      if (i < p.size() && (i >= ref.size() || p[i].first <= ref[i].first))
        key = p[i].first;
      else
        key = ref[i].first;
      const Color s = Color(key / r), t = Color(key % r);
      const std::size_t rx = first[u] / n, ry = first[u] % n;
      throw AxiomViolation(C::Intersection, {s, t, u},
                           {Point(rx), Point(ry), Point(x), Point(y)},
                           "intersection number not constant on the relation");
    }

  for (std::size_t u = 0; u < r; ++u)
    for (const auto& [key, count] : reference[u]) cc.products_[key].emplace_back(Color(u), count);

  cc.colors_ = std::move(colors);
  return cc;
}

SchemeFlag CoherentConfiguration::scheme_flag() const {
  SchemeFlag f;
  f.is_homogeneous = diagonal_.size() == 1;
  if (f.is_homogeneous) f.identity = diagonal_.front();
  return f;
}

std::size_t CoherentConfiguration::out_valency(Color s) const {
  if (s >= rank_) throw std::out_of_range("color out of range");
  return sizes_[s] / fibers_[source_[s]].size();
}

std::size_t CoherentConfiguration::valency(Color s) const {
  if (!is_homogeneous()) throw std::logic_error("valency requires a homogeneous configuration");
  return out_valency(s);
}

std::span<const std::pair<Color, std::uint32_t>> CoherentConfiguration::product_terms(
    Color s, Color t) const {
  auto it = products_.find(std::uint64_t(s) * rank_ + t);
  if (it == products_.end()) return {};
  return it->second;
}

std::size_t CoherentConfiguration::intersection(Color s, Color t, Color u) const {
  const auto terms = product_terms(s, t);
  auto it = std::lower_bound(terms.begin(), terms.end(), u,
                             [](const auto& e, Color v) { return e.first < v; });
  return it != terms.end() && it->first == u ? it->second : 0;
}

ColorSet CoherentConfiguration::complex_product(Color s, Color t) const {
  ColorSet out;
  for (const auto& [u, p] : product_terms(s, t)) out.push_back(u);
  return out;
}

PointSet CoherentConfiguration::neighbours(Point x, Color s) const {
  PointSet out;
  for (std::size_t y = 0; y < order_; ++y)
    if (color(x, Point(y)) == s) out.push_back(Point(y));
  return out;
}

RationalMatrix CoherentConfiguration::adjacency_matrix(Color s) const {
  if (s >= rank_) throw std::out_of_range("color " + std::to_string(s) + " out of range");
  RationalMatrix m(order_, order_);
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y)
      if (colors_[x * order_ + y] == s) m(x, y) = 1;
  return m;
}

namespace {

CoherentConfiguration submatrix(const CoherentConfiguration& c, const PointSet& points) {
  const std::size_t m = points.size();
  std::vector<bool> used(c.rank(), false);
  for (auto x : points)
    for (auto y : points) used[c.color(x, y)] = true;
  std::vector<Color> remap(c.rank(), 0);
  Color next = 0;
  for (std::size_t s = 0; s < c.rank(); ++s)
    if (used[s]) remap[s] = next++;
  std::vector<Color> colors;
  colors.reserve(m * m);
  for (auto x : points)
    for (auto y : points) colors.push_back(remap[c.color(x, y)]);
  return CoherentConfiguration::validate(m, std::move(colors));
}

PointSet normalise(PointSet points, std::size_t order) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw std::invalid_argument("empty point set");
  if (points.back() >= order) throw std::out_of_range("point out of range");
  return points;
}

}  // namespace

CoherentConfiguration restrict_to(const CoherentConfiguration& c, PointSet points) {
  points = normalise(std::move(points), c.order());
  for (auto x : points)
    for (auto y : c.fibers()[c.fiber_of(x)])
      if (!std::binary_search(points.begin(), points.end(), y))
        throw std::invalid_argument("point set is not a union of fibers (fiber of " +
                                    std::to_string(x) + " leaks " + std::to_string(y) + ")");
  return submatrix(c, points);
}

CoherentConfiguration induced_on(const CoherentConfiguration& c, PointSet points) {
  return submatrix(c, normalise(std::move(points), c.order()));
}

ColorSet closed_subset_generate(const CoherentConfiguration& c, ColorSet seed) {
  if (!c.is_homogeneous()) throw std::logic_error("closed subsets require a scheme");
  std::set<Color> closed(seed.begin(), seed.end());
  closed.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Color> current(closed.begin(), closed.end());
    for (auto s : current) grew |= closed.insert(c.star(s)).second;
    for (auto s : current)
      for (auto t : current)
        for (auto u : c.complex_product(s, t)) grew |= closed.insert(u).second;
  }
  return ColorSet(closed.begin(), closed.end());
}

bool is_closed_subset(const CoherentConfiguration& c, const ColorSet& t) {
  if (!c.is_homogeneous()) return false;
  if (!std::binary_search(t.begin(), t.end(), Color(0))) return false;
  for (auto s : t) {
    if (!std::binary_search(t.begin(), t.end(), c.star(s))) return false;
    for (auto v : t)
      for (auto u : c.complex_product(s, v))
        if (!std::binary_search(t.begin(), t.end(), u)) return false;
  }
  return true;
}

ColorSet thin_residue(const CoherentConfiguration& c) {
  std::set<Color> seed;
  for (Color s = 0; s < c.rank(); ++s)
    for (auto u : c.complex_product(s, c.star(s))) seed.insert(u);
  return closed_subset_generate(c, ColorSet(seed.begin(), seed.end()));
}

std::vector<PointSet> quotient_classes(const CoherentConfiguration& c, const ColorSet& t) {
  if (!is_closed_subset(c, t)) throw std::invalid_argument("color set is not a closed subset");
  const std::size_t n = c.order();
  std::vector<bool> done(n, false);
  std::vector<PointSet> blocks;
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    PointSet block;
    for (std::size_t y = 0; y < n; ++y)
      if (std::binary_search(t.begin(), t.end(), c.color(Point(x), Point(y)))) {
        block.push_back(Point(y));
        done[y] = true;
      }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

PointSet regular_points(const CoherentConfiguration& c) {
  PointSet out;
  std::vector<std::size_t> stamp(c.rank(), std::size_t(-1));
  for (std::size_t x = 0; x < c.order(); ++x) {
    bool regular = true;
    for (std::size_t y = 0; y < c.order() && regular; ++y) {
      const Color s = c.color(Point(x), Point(y));
      regular = stamp[s] != x;
      stamp[s] = x;
    }
    if (regular) out.push_back(Point(x));
  }
  return out;
}

CoherentConfiguration relabel_points(const CoherentConfiguration& c, std::span<const Point> perm) {
  const std::size_t n = c.order();
  if (perm.size() != n) throw DimensionMismatch("permutation length");
  std::vector<Color> colors(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      colors[std::size_t(perm[x]) * n + perm[y]] = c.color(Point(x), Point(y));
  return CoherentConfiguration::validate(n, std::move(colors));
}

}  // namespace schemekit
