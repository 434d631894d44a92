#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schemekit/configuration.hpp"

namespace schemekit {

enum class QuasiThinCase {
  Case1,         // |T⊥| = 1, T⊥ ⊆ T₂
  Case2,         // |T⊥| = 1, T⊥ ⊆ T₁
  Case3,         // |T⊥| ≥ 2
  NotQuasiThin,  // some valency exceeds 2
  TperpEmpty,    // thin: T₂ = ∅
};

std::string to_string(QuasiThinCase c);

/// Quasi-thin analysis of a scheme with a base point y₀.
struct QuasiThinProfile {
  Point base_point = 0;
  ColorSet t1;                       // valency 1
  ColorSet t2;                       // valency 2
  std::map<Color, Color> orthogonal; // t ∈ T₂ ↦ t⊥
  ColorSet tperp;
  QuasiThinCase case_tag = QuasiThinCase::NotQuasiThin;
  ColorSet thin_residue;             // generated closed subset, always computed

  // Populated in Case2 only.
  ColorSet h;                              // {1} ∪ T⊥
  std::optional<CoherentConfiguration> extension;  // 𝒞_(H)
  std::vector<PointSet> fibers;            // fibers of 𝒞_(H), i.e. Y/H
  std::vector<std::vector<bool>> related;  // related[Δ][Γ]: Δ ∼ Γ
  bool equivalence = false;                // ∼ checked reflexive, symmetric, transitive
  std::vector<std::vector<std::size_t>> classes;  // fiber indices per ∼-class
  std::vector<PointSet> blocks;            // Y_i
  std::size_t base_class = 0;              // i₀
  std::vector<ColorSet> u_sets;            // U_i = {t ∈ T₂ : y₀t ⊆ Y_i}

  bool quasi_thin() const {
    return case_tag != QuasiThinCase::NotQuasiThin;
  }
};

/// Full profile; degenerate inputs are reported through case_tag. Requires a
/// scheme (throws std::logic_error otherwise).
QuasiThinProfile quasi_thin_profile(const CoherentConfiguration& c, Point y0);

}  // namespace schemekit
