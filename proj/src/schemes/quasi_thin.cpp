#include "schemekit/quasi_thin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "schemekit/construct.hpp"

namespace schemekit {

std::string to_string(QuasiThinCase c) {
  switch (c) {
    case QuasiThinCase::Case1: return "Case1";
    case QuasiThinCase::Case2: return "Case2";
    case QuasiThinCase::Case3: return "Case3";
    case QuasiThinCase::NotQuasiThin: return "NotQuasiThin";
    case QuasiThinCase::TperpEmpty: return "TperpEmpty";
  }
  return "unknown";
}

namespace {

// Δ×Γ is a single basic relation of e.
bool is_basic_block(const CoherentConfiguration& e, const PointSet& delta, const PointSet& gamma) {
  const Color u = e.color(delta.front(), gamma.front());
  for (auto x : delta)
    for (auto y : gamma)
      if (e.color(x, y) != u) return false;
  return e.relation_size(u) == delta.size() * gamma.size();
}

void analyse_case2(const CoherentConfiguration& c, QuasiThinProfile& p) {
  p.h = p.tperp;
  p.h.insert(p.h.begin(), Color(0));
  p.extension = thin_residue_extension(c, p.h);
  p.fibers = p.extension->fibers();
  const std::size_t f = p.fibers.size();

  p.related.assign(f, std::vector<bool>(f, false));
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < f; ++j)
      p.related[i][j] = !is_basic_block(*p.extension, p.fibers[i], p.fibers[j]);

  bool eq = true;
  for (std::size_t i = 0; i < f; ++i) {
    eq = eq && p.related[i][i];
    for (std::size_t j = 0; j < f; ++j) {
      eq = eq && p.related[i][j] == p.related[j][i];
      for (std::size_t k = 0; k < f && eq; ++k)
        if (p.related[i][j] && p.related[j][k]) eq = p.related[i][k];
    }
  }
  p.equivalence = eq;

  // Classes as connected components, ordered by their first fiber.
  std::vector<std::size_t> cls(f, f);
  for (std::size_t i = 0; i < f; ++i) {
    if (cls[i] != f) continue;
    const std::size_t id = p.classes.size();
    p.classes.emplace_back();
    std::vector<std::size_t> stack{i};
    cls[i] = id;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      p.classes[id].push_back(a);
      for (std::size_t b = 0; b < f; ++b)
        if (cls[b] == f && (p.related[a][b] || p.related[b][a])) {
          cls[b] = id;
          stack.push_back(b);
        }
    }
    std::sort(p.classes[id].begin(), p.classes[id].end());
  }

  for (const auto& members : p.classes) {
    PointSet block;
    for (auto fi : members) block.insert(block.end(), p.fibers[fi].begin(), p.fibers[fi].end());
    std::sort(block.begin(), block.end());
    p.blocks.push_back(std::move(block));
  }
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    if (std::binary_search(p.blocks[i].begin(), p.blocks[i].end(), p.base_point))
      p.base_class = i;

  p.u_sets.assign(p.blocks.size(), {});
  for (auto t : p.t2) {
    const auto nb = c.neighbours(p.base_point, t);
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
      if (std::includes(p.blocks[i].begin(), p.blocks[i].end(), nb.begin(), nb.end()))
        p.u_sets[i].push_back(t);
  }
}

}  // namespace

QuasiThinProfile quasi_thin_profile(const CoherentConfiguration& c, Point y0) {
  if (!c.is_homogeneous()) throw std::logic_error("quasi-thin profile requires a scheme");
  if (y0 >= c.order()) throw std::out_of_range("base point out of range");
  QuasiThinProfile p;
  p.base_point = y0;
  p.thin_residue = thin_residue(c);
  bool quasi = true;
  for (Color s = 0; s < c.rank(); ++s) {
    const auto v = c.valency(s);
    if (v == 1)
      p.t1.push_back(s);
    else if (v == 2)
      p.t2.push_back(s);
    else
      quasi = false;
  }
  if (!quasi) {
    p.case_tag = QuasiThinCase::NotQuasiThin;
    return p;
  }
  for (auto t : p.t2) {
    ColorSet prod = c.complex_product(t, c.star(t));
    prod.erase(std::remove(prod.begin(), prod.end(), Color(0)), prod.end());
    if (prod.size() != 1)
      throw std::logic_error("valency-2 relation " + std::to_string(t) +
                             " has no unique orthogonal");
    p.orthogonal[t] = prod.front();
    p.tperp.push_back(prod.front());
  }
  std::sort(p.tperp.begin(), p.tperp.end());
  p.tperp.erase(std::unique(p.tperp.begin(), p.tperp.end()), p.tperp.end());

  if (p.tperp.empty()) {
    p.case_tag = QuasiThinCase::TperpEmpty;
  } else if (p.tperp.size() >= 2) {
    p.case_tag = QuasiThinCase::Case3;
  } else if (std::binary_search(p.t2.begin(), p.t2.end(), p.tperp.front())) {
    p.case_tag = QuasiThinCase::Case1;
  } else {
    p.case_tag = QuasiThinCase::Case2;
    analyse_case2(c, p);
  }
  return p;
}

}  // namespace schemekit
