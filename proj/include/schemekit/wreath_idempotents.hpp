#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schemekit/closure.hpp"
#include "schemekit/construct.hpp"
#include "schemekit/decomposition.hpp"
#include "schemekit/quasi_thin.hpp"

namespace schemekit {

/// Raised when the driver is asked about a Y it does not cover.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, QuasiThinProfile profile)
      : std::invalid_argument(what), profile(std::move(profile)) {}
  QuasiThinProfile profile;
};

/// Everything about 𝒯(X×Y, S≀T, (x₀,y₀)) that the idempotent families need.
struct WreathTerwilligerContext {
  WreathProduct wreath;
  Point x0 = 0;
  Point y0 = 0;
  Point base = 0;                                   // (x₀,y₀) as a flat point
  std::map<Color, PointSet> fsets;                  // t ∈ T ↦ F^(t) = X × y₀t
  std::map<Color, CoherentConfiguration> usubschemes;  // t ↦ U^(t) on F^(t), sorted points
  std::vector<RationalMatrix> generators;
  AlgebraBasis ta;
  QuasiThinProfile profile;  // of Y at y₀; case_tag NotQuasiThin when valencies exceed 2

  std::size_t order() const { return wreath.scheme.order(); }
};

/// Builds for any pair of schemes. Profile failures (no unique orthogonal)
/// surface as PreconditionError.
WreathTerwilligerContext build_context(const CoherentConfiguration& x, const CoherentConfiguration& y,
                                       Point x0, Point y0);

/// Σ_s n_s⁻¹ ε_{x₀s} J ε_{x₀s}.
RationalMatrix trivial_idempotent(const CoherentConfiguration& c, Point x0);

/// Places a |points|×|points| block on the given points of an order×order zero matrix.
RationalMatrix embed(const RationalMatrix& block, const PointSet& points, std::size_t order);
ComplexMatrixF embed(const ComplexMatrixF& block, const PointSet& points, std::size_t order);

/// An idempotent that is exact when a rational form was found and certified.
struct CandidateIdempotent {
  std::optional<RationalMatrix> exact;
  ComplexMatrixF numeric;
};

/// Central primitive idempotents of a factor algebra other than `trivial`.
/// Spectral projectors are reconstructed with denominators ≤ max_den and
/// kept exact only if exact certification in the factor succeeds.
/// Ordered by trace, then entrywise.
std::vector<CandidateIdempotent> nontrivial_factor_idempotents(const AlgebraBasis& factor,
                                                               const RationalMatrix& trivial,
                                                               long max_den, double tol);

CandidateIdempotent lift_tilde(const WreathTerwilligerContext& ctx, const CandidateIdempotent& e);
CandidateIdempotent lift_bar(const WreathTerwilligerContext& ctx, const CandidateIdempotent& e,
                             Color t);
CandidateIdempotent lift_hat(const WreathTerwilligerContext& ctx, const CandidateIdempotent& e,
                             Color t);

struct GMatrixFamily {
  ColorSet scope;                                      // the t's indexing the family
  std::map<Color, std::pair<Point, Point>> ordering;   // t ↦ (y_t(1), y_t(2))
  std::map<std::pair<Color, Color>, RationalMatrix> g;
  bool delta_relations = false;
  bool independent = false;
  bool ideal_closed = false;
  bool ideal_checked_on_basis = false;  // else on generators (equivalent, cheaper)
  std::size_t dimension = 0;
  std::string failure;

  bool ok() const {
    return delta_relations && independent && ideal_closed && dimension == scope.size() * scope.size();
  }
};

/// G-family over all of T₂ (Case1/Case3) or over U_i (Case2, i ≠ i₀). With
/// `reversed`, every pair ordering is swapped.
GMatrixFamily g_matrices(const WreathTerwilligerContext& ctx,
                         std::optional<std::size_t> class_index = std::nullopt,
                         bool reversed = false);

RationalMatrix e_eta(const WreathTerwilligerContext& ctx, bool reversed = false);
RationalMatrix e_eta_i(const WreathTerwilligerContext& ctx, std::size_t class_index,
                       bool reversed = false);

struct FiberPair {
  std::size_t first = 0;   // fiber indices into FiberPairReport::fibers
  std::size_t second = 0;
  bool basic = false;                  // Δ×Γ is one basic relation of 𝒞_{y₀}
  std::optional<bool> predicted;       // absent when no statement applies
  std::optional<std::size_t> class_first, class_second;  // Case2 only
};

struct FiberPairReport {
  QuasiThinCase case_tag = QuasiThinCase::NotQuasiThin;
  std::vector<PointSet> fibers;   // of 𝒞_{y₀}
  std::vector<FiberPair> pairs;   // size-2 pairs, plus cross-class pairs in Case2
  std::size_t predictions = 0;
  bool pass = true;
  std::string failure;
};

FiberPairReport fiber_pair_membership(const CoherentConfiguration& y, Point y0);

struct LedgerTerm {
  std::string name;
  std::size_t value = 0;
};

struct PathResult {
  std::string name;  // one-class-or-thin | quasi-thin | quasi-thin-case2
  std::vector<IdempotentCertificate> members;
  std::vector<GMatrixFamily> g_families;
  PartitionReport partition;
  std::vector<LedgerTerm> ledger;
  std::size_t ledger_total = 0;
  bool ledger_balances = false;  // ledger total = member count = dim Z(TA)
  bool pass = false;
  std::string failure;
};

struct TheoremReport {
  QuasiThinCase case_tag = QuasiThinCase::NotQuasiThin;
  bool one_class = false;
  bool thin = false;
  std::size_t order = 0;
  std::size_t rank = 0;
  std::size_t ta_dimension = 0;
  std::size_t center_dimension = 0;
  PathResult primary;
  std::optional<PathResult> alternate;   // run when both readings apply
  std::optional<bool> cross_path_agree;
  std::size_t oracle_count = 0;
  double oracle_distance = 0.0;
  bool oracle_agree = false;
  FiberPairReport fiber_pairs;
  double tol = 1e-9;
  bool pass = false;
  std::string failure;
};

TheoremReport verify_theorem41(const WreathTerwilligerContext& ctx, double tol = 1e-9);
TheoremReport verify_theorem41(const CoherentConfiguration& x, const CoherentConfiguration& y,
                               Point x0, Point y0, double tol = 1e-9);

}  // namespace schemekit
