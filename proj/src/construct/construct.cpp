#include "schemekit/construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace schemekit {

DirectSum direct_sum(const CoherentConfiguration& a, const CoherentConfiguration& b) {
  const std::size_t n = a.order(), m = b.order(), total = n + m;
  const std::size_t ra = a.rank(), rb = b.rank();
  const std::size_t fa = a.fibers().size(), fb = b.fibers().size();
  std::vector<Color> colors(total * total);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) colors[x * total + y] = a.color(Point(x), Point(y));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      colors[(n + x) * total + n + y] = Color(ra + b.color(Point(x), Point(y)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t i = a.fiber_of(Point(x)), j = b.fiber_of(Point(y));
      colors[x * total + n + y] = Color(ra + rb + i * fb + j);
      colors[(n + y) * total + x] = Color(ra + rb + fa * fb + j * fa + i);
    }
  DirectSum out{CoherentConfiguration::validate(total, std::move(colors)), {}, {}};
  for (std::size_t x = 0; x < n; ++x) out.first_points.push_back(Point(x));
  for (std::size_t y = 0; y < m; ++y) out.second_points.push_back(Point(n + y));
  return out;
}

CoherentConfiguration direct_product(const CoherentConfiguration& a,
                                     const CoherentConfiguration& b) {
  const std::size_t n = a.order(), m = b.order(), total = n * m;
  std::vector<Color> colors(total * total);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xp = 0; xp < m; ++xp)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t yp = 0; yp < m; ++yp)
          colors[(x * m + xp) * total + y * m + yp] =
              Color(a.color(Point(x), Point(y)) * b.rank() + b.color(Point(xp), Point(yp)));
  return CoherentConfiguration::validate(total, std::move(colors));
}

WreathProduct wreath(const CoherentConfiguration& x, const CoherentConfiguration& y) {
  if (!x.is_homogeneous() || !y.is_homogeneous())
    throw std::invalid_argument("wreath product requires two schemes");
  const std::size_t nx = x.order(), ny = y.order(), total = nx * ny;
  const std::size_t rx = x.rank();
  WreathLabeling lab{x, y, {}, {}};
  for (Color s = 0; s < rx; ++s) lab.tilde.push_back(s);
  lab.bar.push_back(std::nullopt);
  for (Color t = 1; t < y.rank(); ++t) lab.bar.push_back(Color(rx - 1 + t));

  std::vector<Color> colors(total * total);
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b)
      for (std::size_t c = 0; c < nx; ++c)
        for (std::size_t d = 0; d < ny; ++d) {
          const Color t = y.color(Point(b), Point(d));
          colors[(a * ny + b) * total + c * ny + d] =
              t == 0 ? lab.tilde[x.color(Point(a), Point(c))] : *lab.bar[t];
        }
  return {CoherentConfiguration::validate(total, std::move(colors)), std::move(lab)};
}

CoherentConfiguration thin_residue_extension(const CoherentConfiguration& c, const ColorSet& t) {
  if (!is_closed_subset(c, t))
    throw std::invalid_argument("thin residue extension: color set is not a closed subset");
  for (auto u : thin_residue(c))
    if (!std::binary_search(t.begin(), t.end(), u))
      throw std::invalid_argument("thin residue extension: closed subset misses thin residue color " +
                                  std::to_string(u));
  const auto blocks = quotient_classes(c, t);
  const std::size_t n = c.order();
  std::vector<std::size_t> block_of(n);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (auto p : blocks[i]) block_of[p] = i;
  const std::uint64_t nb = blocks.size();
  std::vector<std::uint64_t> labels(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      labels[x * n + y] = (std::uint64_t(c.color(Point(x), Point(y))) * nb + block_of[x]) * nb +
                          block_of[y];
  return CoherentConfiguration::from_partition(n, labels);
}

}  // namespace schemekit
