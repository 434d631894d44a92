#include "schemekit/wreath_idempotents.hpp"

#include <algorithm>
#include <cmath>

namespace schemekit {

namespace {

QuasiThinProfile profile_or_throw(const CoherentConfiguration& y, Point y0) {
  try {
    return quasi_thin_profile(y, y0);
  } catch (const std::logic_error& e) {
    QuasiThinProfile p;
    p.base_point = y0;
    throw PreconditionError(e.what(), p);
  }
}

std::size_t position_of(const PointSet& points, Point p) {
  return std::size_t(std::lower_bound(points.begin(), points.end(), p) - points.begin());
}

ComplexMatrixF kron_numeric(const ComplexMatrixF& a, const RationalMatrix& b) {
  ComplexMatrixF out = ComplexMatrixF::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l).get_d();
  return out;
}

bool numeric_less(const CandidateIdempotent& a, const CandidateIdempotent& b) {
  const double ta = a.numeric.trace().real(), tb = b.numeric.trace().real();
  if (std::abs(ta - tb) > 1e-9) return ta < tb;
  for (Eigen::Index k = 0; k < a.numeric.size(); ++k) {
    const auto x = a.numeric.data()[k], y = b.numeric.data()[k];
    if (std::abs(x.real() - y.real()) > 1e-9) return x.real() < y.real();
    if (std::abs(x.imag() - y.imag()) > 1e-9) return x.imag() < y.imag();
  }
  return false;
}

bool is_basic_block(const CoherentConfiguration& e, const PointSet& delta, const PointSet& gamma) {
  const Color u = e.color(delta.front(), gamma.front());
  for (auto x : delta)
    for (auto y : gamma)
      if (e.color(x, y) != u) return false;
  return e.relation_size(u) == delta.size() * gamma.size();
}

std::pair<Point, Point> pair_of(const CoherentConfiguration& y, Point y0, Color t, bool reversed) {
  const auto pts = y.neighbours(y0, t);
  if (pts.size() != 2) throw std::logic_error("y0 t must have exactly two points");
  return reversed ? std::make_pair(pts[1], pts[0]) : std::make_pair(pts[0], pts[1]);
}

RationalMatrix eta_sum(const WreathTerwilligerContext& ctx, const ColorSet& scope, bool reversed) {
  const auto& lab = ctx.wreath.labeling;
  const std::size_t nx = lab.order_x(), ny = lab.order_y();
  RationalMatrix k(ny, ny);
  for (auto t : scope) {
    const auto [a, b] = pair_of(lab.base_y, ctx.y0, t, reversed);
    k(a, a) += 1;
    k(b, b) += 1;
    k(a, b) -= 1;
    k(b, a) -= 1;
  }
  return kron(RationalMatrix::ones(nx, nx), k) * Rational(1, 2 * nx);
}

ColorSet scope_for(const WreathTerwilligerContext& ctx, std::optional<std::size_t> class_index) {
  const auto& p = ctx.profile;
  if (class_index) {
    if (p.case_tag != QuasiThinCase::Case2)
      throw PreconditionError("class-scoped G family needs a Case2 profile", p);
    if (*class_index >= p.u_sets.size() || *class_index == p.base_class)
      throw PreconditionError("class index must name a class other than the base class", p);
    return p.u_sets[*class_index];
  }
  if (p.case_tag != QuasiThinCase::Case1 && p.case_tag != QuasiThinCase::Case3)
    throw PreconditionError("G family over T2 needs a Case1 or Case3 profile", p);
  return p.t2;
}

}  // namespace

WreathTerwilligerContext build_context(const CoherentConfiguration& x, const CoherentConfiguration& y,
                                       Point x0, Point y0) {
  if (x0 >= x.order() || y0 >= y.order()) throw std::out_of_range("base point out of range");
  auto profile = profile_or_throw(y, y0);
  auto w = wreath(x, y);
  const auto& lab = w.labeling;
  const Point base = lab.point(x0, y0);

  std::map<Color, PointSet> fsets;
  std::map<Color, CoherentConfiguration> usub;
  for (Color t = 0; t < y.rank(); ++t) {
    PointSet f;
    for (Point xx = 0; xx < x.order(); ++xx)
      for (auto yy : y.neighbours(y0, t)) f.push_back(lab.point(xx, yy));
    std::sort(f.begin(), f.end());
    usub.emplace(t, induced_on(w.scheme, f));
    fsets.emplace(t, std::move(f));
  }
  auto gens = terwilliger_generators(w.scheme, base);
  auto ta = terwilliger(w.scheme, base);
  return WreathTerwilligerContext{std::move(w), x0, y0, base, std::move(fsets), std::move(usub),
                                  std::move(gens), std::move(ta), std::move(profile)};
}

RationalMatrix trivial_idempotent(const CoherentConfiguration& c, Point x0) {
  if (x0 >= c.order()) throw std::out_of_range("base point out of range");
  RationalMatrix m(c.order(), c.order());
  for (Color s = 0; s < c.rank(); ++s) {
    const auto pts = c.neighbours(x0, s);
    if (pts.empty()) continue;
    const Rational w(1, pts.size());
    for (auto p : pts)
      for (auto q : pts) m(p, q) = w;
  }
  return m;
}

RationalMatrix embed(const RationalMatrix& block, const PointSet& points, std::size_t order) {
  if (block.rows() != points.size() || block.cols() != points.size())
    throw DimensionMismatch("embed: block does not match the point set");
  RationalMatrix m(order, order);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) m(points[i], points[j]) = block(i, j);
  return m;
}

ComplexMatrixF embed(const ComplexMatrixF& block, const PointSet& points, std::size_t order) {
  if (std::size_t(block.rows()) != points.size() || std::size_t(block.cols()) != points.size())
    throw DimensionMismatch("embed: block does not match the point set");
  ComplexMatrixF m = ComplexMatrixF::Zero(order, order);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) m(points[i], points[j]) = block(i, j);
  return m;
}

std::vector<CandidateIdempotent> nontrivial_factor_idempotents(const AlgebraBasis& factor,
                                                               const RationalMatrix& trivial,
                                                               long max_den, double tol) {
  SpectralOptions opts;
  opts.tol = tol;
  const auto projectors = numeric_central_primitive_idempotents(factor, opts);
  const Certifier cert(factor);
  const ComplexMatrixF triv = to_complex(trivial);

  std::vector<CandidateIdempotent> out;
  std::size_t trivial_hits = 0;
  for (const auto& p : projectors) {
    if (max_abs(p - triv) < 1e-6) {
      ++trivial_hits;
      continue;
    }
    CandidateIdempotent c;
    c.numeric = p;
    if (auto r = rational_reconstruct(p, max_den)) {
      try {
        if (cert.certify(*r, "factor").certified()) {
          c.numeric = to_complex(*r);
          c.exact = std::move(*r);
        }
      } catch (const NotInAlgebra&) {
      }
    }
    out.push_back(std::move(c));
  }
  if (trivial_hits != 1)
    throw std::runtime_error("trivial idempotent not found exactly once among the factor projectors");
  std::sort(out.begin(), out.end(), numeric_less);
  return out;
}

CandidateIdempotent lift_tilde(const WreathTerwilligerContext& ctx, const CandidateIdempotent& e) {
  const auto& f = ctx.fsets.at(0);
  CandidateIdempotent out;
  if (e.exact) out.exact = embed(*e.exact, f, ctx.order());
  out.numeric = embed(e.numeric, f, ctx.order());
  return out;
}

CandidateIdempotent lift_bar(const WreathTerwilligerContext& ctx, const CandidateIdempotent& e,
                             Color t) {
  if (t == 0) throw std::invalid_argument("bar lift needs a non-identity color");
  const auto& f = ctx.fsets.at(t);
  CandidateIdempotent out;
  if (e.exact) out.exact = embed(*e.exact, f, ctx.order());
  out.numeric = embed(e.numeric, f, ctx.order());
  return out;
}

CandidateIdempotent lift_hat(const WreathTerwilligerContext& ctx, const CandidateIdempotent& e,
                             Color t) {
  const auto& y = ctx.wreath.labeling.base_y;
  if (y.valency(t) != 2) throw std::invalid_argument("hat lift needs a valency-2 color");
  const auto eps = diagonal_projection(y.order(), y.neighbours(ctx.y0, t));
  CandidateIdempotent out;
  if (e.exact) out.exact = kron(*e.exact, eps);
  out.numeric = kron_numeric(e.numeric, eps);
  return out;
}

GMatrixFamily g_matrices(const WreathTerwilligerContext& ctx,
                         std::optional<std::size_t> class_index, bool reversed) {
  const auto& lab = ctx.wreath.labeling;
  const std::size_t nx = lab.order_x(), ny = lab.order_y();
  GMatrixFamily fam;
  fam.scope = scope_for(ctx, class_index);
  for (auto t : fam.scope) fam.ordering[t] = pair_of(lab.base_y, ctx.y0, t, reversed);

  const Rational w(1, 2 * nx);
  const auto jx = RationalMatrix::ones(nx, nx);
  std::map<std::pair<Color, Color>, RationalMatrix> small;
  SpanBasis kspan(ny * ny, false);
  bool independent = true;
  for (auto t : fam.scope)
    for (auto u : fam.scope) {
      const auto [a1, a2] = fam.ordering[t];
      const auto [b1, b2] = fam.ordering[u];
      RationalMatrix k(ny, ny);
      k(a1, b1) += 1;
      k(a2, b2) += 1;
      k(a1, b2) -= 1;
      k(a2, b1) -= 1;
      independent = kspan.insert(flatten(k)) && independent;
      fam.g.emplace(std::make_pair(t, u), kron(jx, k) * w);
      small.emplace(std::make_pair(t, u), std::move(k));
    }
  fam.independent = independent;
  fam.dimension = kspan.dimension();

  auto fail = [&](std::string why) {
    if (fam.failure.empty()) fam.failure = std::move(why);
  };
  if (!independent) fail("G family is linearly dependent");

  fam.delta_relations = true;
  const RationalMatrix zero(lab.order_x() * ny, lab.order_x() * ny);
  for (const auto& [tu, g1] : fam.g)
    for (const auto& [vw, g2] : fam.g) {
      const auto prod = g1 * g2;
      const bool ok = tu.second == vw.first ? prod == fam.g.at({tu.first, vw.second}) : prod == zero;
      if (!ok) {
        fam.delta_relations = false;
        fail("delta relation fails for G(" + std::to_string(tu.first) + "," +
             std::to_string(tu.second) + ") G(" + std::to_string(vw.first) + "," +
             std::to_string(vw.second) + ")");
      }
    }

  // M ∈ span{G} iff M = (1/2|X|)·J_X ⊗ K with K ∈ span{K_{t,t'}}.
  auto in_span = [&](const RationalMatrix& m) {
    RationalMatrix k(ny, ny);
    for (Point a = 0; a < ny; ++a)
      for (Point b = 0; b < ny; ++b) k(a, b) = m(lab.point(0, a), lab.point(0, b)) / w;
    for (std::size_t p = 0; p < m.rows(); ++p)
      for (std::size_t q = 0; q < m.cols(); ++q)
        if (m(p, q) != k(lab.y_of(Point(p)), lab.y_of(Point(q))) * w) return false;
    return kspan.contains(flatten(k));
  };
  const auto& pool = ctx.ta.dimension() * fam.g.size() <= 20000 ? ctx.ta.elements() : ctx.generators;
  fam.ideal_checked_on_basis = &pool == &ctx.ta.elements();
  fam.ideal_closed = true;
  for (std::size_t i = 0; i < pool.size() && fam.ideal_closed; ++i) {
    const auto bt = pool[i].transpose();
    for (const auto& [key, g] : fam.g) {
      const auto left = g * pool[i];
      const auto right = (g.transpose() * bt).transpose();
      if (!in_span(left) || !in_span(right)) {
        fam.ideal_closed = false;
        fail("G span is not closed under multiplication by " +
             std::string(fam.ideal_checked_on_basis ? "basis element " : "generator ") +
             std::to_string(i));
        break;
      }
    }
  }
  if (fam.dimension != fam.scope.size() * fam.scope.size()) fail("G span has the wrong dimension");
  return fam;
}

RationalMatrix e_eta(const WreathTerwilligerContext& ctx, bool reversed) {
  return eta_sum(ctx, scope_for(ctx, std::nullopt), reversed);
}

RationalMatrix e_eta_i(const WreathTerwilligerContext& ctx, std::size_t class_index, bool reversed) {
  return eta_sum(ctx, scope_for(ctx, class_index), reversed);
}

namespace {

FiberPairReport fiber_pairs_for(const CoherentConfiguration& y, const QuasiThinProfile& prof) {
  FiberPairReport r;
  r.case_tag = prof.case_tag;
  const auto ext = one_point_extension(y, prof.base_point);
  r.fibers = ext.fibers();
  const bool case2 = prof.case_tag == QuasiThinCase::Case2;
  const bool case13 = prof.case_tag == QuasiThinCase::Case1 || prof.case_tag == QuasiThinCase::Case3;

  std::vector<std::optional<std::size_t>> cls(r.fibers.size());
  if (case2)
    for (std::size_t f = 0; f < r.fibers.size(); ++f)
      for (std::size_t i = 0; i < prof.blocks.size(); ++i)
        if (std::includes(prof.blocks[i].begin(), prof.blocks[i].end(), r.fibers[f].begin(),
                          r.fibers[f].end()))
          cls[f] = i;

  for (std::size_t i = 0; i < r.fibers.size(); ++i)
    for (std::size_t j = 0; j < r.fibers.size(); ++j) {
      const bool both_two = r.fibers[i].size() == 2 && r.fibers[j].size() == 2;
      const bool cross = case2 && cls[i] && cls[j] && *cls[i] != *cls[j];
      if (!both_two && !cross) continue;
      FiberPair fp;
      fp.first = i;
      fp.second = j;
      fp.basic = is_basic_block(ext, r.fibers[i], r.fibers[j]);
      fp.class_first = cls[i];
      fp.class_second = cls[j];
      if (case13) fp.predicted = false;
      if (cross) fp.predicted = true;
      if (fp.predicted) {
        ++r.predictions;
        if (*fp.predicted != fp.basic) {
          r.pass = false;
          if (r.failure.empty())
            r.failure = "fiber pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") contradicts the predicted membership";
        }
      }
      r.pairs.push_back(fp);
    }
  return r;
}

struct Factors {
  std::vector<CandidateIdempotent> tilde;
  std::map<Color, std::vector<CandidateIdempotent>> bar;
  std::map<Color, std::size_t> bar_center;
  std::vector<CandidateIdempotent> hat;
  std::size_t tilde_center = 0;
  std::size_t hat_center = 0;
};

class Driver {
 public:
  Driver(const WreathTerwilligerContext& ctx, double tol)
      : ctx_(ctx), tol_(tol), cert_(ctx.ta) {
    const auto& lab = ctx.wreath.labeling;
    max_den_ = long(4 * lab.order_x() * lab.order_y());
  }

  std::size_t center_dimension() const { return cert_.center().dimension(); }

  PathResult run(int path) {
    PathResult r;
    r.name = path == 1 ? "one-class-or-thin" : path == 2 ? "quasi-thin" : "quasi-thin-case2";
    const auto& y = ctx_.wreath.labeling.base_y;

    r.members.push_back(certify(exact_candidate(trivial_idempotent(ctx_.wreath.scheme, ctx_.base)),
                                "trivial", 0));
    r.ledger.push_back({"trivial", 1});

    const auto& f1 = tilde();
    for (std::size_t k = 0; k < f1.size(); ++k)
      r.members.push_back(certify(lift_tilde(ctx_, f1[k]), "tilde", k));
    r.ledger.push_back({"tilde", factors_.tilde_center - 1});

    for (Color t = 1; t < y.rank(); ++t) {
      const bool thin_t = y.valency(t) == 1;
      if (path != 1 && !thin_t) continue;
      const auto& fb = bar(t);
      const std::string fam = "bar:" + std::to_string(t);
      for (std::size_t k = 0; k < fb.size(); ++k)
        r.members.push_back(certify(lift_bar(ctx_, fb[k], t), fam, k));
      r.ledger.push_back({fam, factors_.bar_center.at(t) - 1});
    }

    if (path != 1) {
      const auto& fh = hat();
      for (auto t : ctx_.profile.t2) {
        const std::string fam = "hat:" + std::to_string(t);
        for (std::size_t k = 0; k < fh.size(); ++k)
          r.members.push_back(certify(lift_hat(ctx_, fh[k], t), fam, k));
        r.ledger.push_back({fam, factors_.hat_center - 1});
      }
    }

    if (path == 2 && !ctx_.profile.t2.empty()) {
      r.g_families.push_back(g_matrices(ctx_));
      r.members.push_back(certify(exact_candidate(e_eta(ctx_)), "eta", 0));
      r.ledger.push_back({"eta", 1});
    }
    if (path == 3) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < ctx_.profile.blocks.size(); ++i) {
        if (i == ctx_.profile.base_class) continue;
        r.g_families.push_back(g_matrices(ctx_, i));
        r.members.push_back(
            certify(exact_candidate(e_eta_i(ctx_, i)), "eta:" + std::to_string(i), 0));
        ++count;
      }
      r.ledger.push_back({"eta", count});
    }

    for (const auto& t : r.ledger) r.ledger_total += t.value;
    r.partition = verify_partition(r.members, ctx_.ta, tol_);
    r.ledger_balances = r.ledger_total == r.members.size() && r.ledger_total == center_dimension();

    auto fail = [&](std::string why) {
      if (r.failure.empty()) r.failure = std::move(why);
    };
    for (const auto& m : r.members)
      if (!m.certified()) fail(m.failure);
    for (const auto& g : r.g_families)
      if (!g.ok()) fail(g.failure.empty() ? "G family check failed" : g.failure);
    if (!r.partition.pass) fail(r.partition.failure);
    if (!r.ledger_balances)
      fail("count ledger " + std::to_string(r.ledger_total) + " vs " +
           std::to_string(r.members.size()) + " members vs center dimension " +
           std::to_string(center_dimension()));
    r.pass = r.failure.empty();
    return r;
  }

 private:
  static CandidateIdempotent exact_candidate(RationalMatrix m) {
    CandidateIdempotent c;
    c.numeric = to_complex(m);
    c.exact = std::move(m);
    return c;
  }

  IdempotentCertificate certify(const CandidateIdempotent& c, const std::string& fam,
                                std::size_t k) const {
    if (c.exact) {
      try {
        return cert_.certify(*c.exact, fam, k);
      } catch (const NotInAlgebra&) {
        IdempotentCertificate out;
        out.family = fam;
        out.member = k;
        out.exact = true;
        out.element = *c.exact;
        out.numeric = c.numeric;
        out.trace = c.exact->trace();
        out.numeric_trace = out.trace->get_d();
        out.failure = out.label() + ": not in the algebra";
        return out;
      }
    }
    return cert_.certify(c.numeric, fam, k, tol_);
  }

  const std::vector<CandidateIdempotent>& tilde() {
    if (!tilde_done_) {
      const auto& u1 = ctx_.usubschemes.at(0);
      const Point p = Point(position_of(ctx_.fsets.at(0), ctx_.base));
      const auto t = terwilliger(u1, p);
      factors_.tilde_center = center(t).dimension();
      factors_.tilde = nontrivial_factor_idempotents(t, trivial_idempotent(u1, p), max_den_, tol_);
      tilde_done_ = true;
    }
    return factors_.tilde;
  }

  const std::vector<CandidateIdempotent>& bar(Color t) {
    auto it = factors_.bar.find(t);
    if (it == factors_.bar.end()) {
      const auto& u = ctx_.usubschemes.at(t);
      const auto a = adjacency_algebra(u);
      factors_.bar_center[t] = center(a).dimension();
      const auto triv = RationalMatrix::ones(u.order(), u.order()) * Rational(1, u.order());
      it = factors_.bar.emplace(t, nontrivial_factor_idempotents(a, triv, max_den_, tol_)).first;
    }
    return it->second;
  }

  const std::vector<CandidateIdempotent>& hat() {
    if (!hat_done_) {
      const auto& x = ctx_.wreath.labeling.base_x;
      const auto a = adjacency_algebra(x);
      factors_.hat_center = center(a).dimension();
      const auto triv = RationalMatrix::ones(x.order(), x.order()) * Rational(1, x.order());
      factors_.hat = nontrivial_factor_idempotents(a, triv, max_den_, tol_);
      hat_done_ = true;
    }
    return factors_.hat;
  }

  const WreathTerwilligerContext& ctx_;
  double tol_;
  Certifier cert_;
  long max_den_ = 1;
  Factors factors_;
  bool tilde_done_ = false;
  bool hat_done_ = false;
};

bool same_partition(const PathResult& a, const PathResult& b, double tol) {
  if (a.members.size() != b.members.size()) return false;
  const bool exact = std::all_of(a.members.begin(), a.members.end(), [](auto& m) { return m.exact; }) &&
                     std::all_of(b.members.begin(), b.members.end(), [](auto& m) { return m.exact; });
  if (exact) {
    std::vector<bool> used(b.members.size(), false);
    for (const auto& m : a.members) {
      bool found = false;
      for (std::size_t j = 0; j < b.members.size() && !found; ++j)
        if (!used[j] && *b.members[j].element == *m.element) found = used[j] = true;
      if (!found) return false;
    }
    return true;
  }
  std::vector<ComplexMatrixF> na, nb;
  for (const auto& m : a.members) na.push_back(m.numeric);
  for (const auto& m : b.members) nb.push_back(m.numeric);
  const auto match = match_projectors(na, nb);
  return match.complete && match.max_distance <= tol;
}

}  // namespace

FiberPairReport fiber_pair_membership(const CoherentConfiguration& y, Point y0) {
  return fiber_pairs_for(y, profile_or_throw(y, y0));
}

TheoremReport verify_theorem41(const WreathTerwilligerContext& ctx, double tol) {
  const auto& y = ctx.wreath.labeling.base_y;
  const auto tag = ctx.profile.case_tag;
  TheoremReport rep;
  rep.case_tag = tag;
  rep.one_class = y.rank() == 2;
  rep.thin = tag == QuasiThinCase::TperpEmpty;
  rep.order = ctx.order();
  rep.rank = ctx.wreath.scheme.rank();
  rep.ta_dimension = ctx.ta.dimension();
  rep.tol = tol;

  const bool p1 = rep.thin || rep.one_class;
  const bool p2 = tag == QuasiThinCase::Case1 || tag == QuasiThinCase::Case3;
  const bool p3 = tag == QuasiThinCase::Case2;
  if (!p1 && !p2 && !p3)
    throw PreconditionError("Y must be thin, one-class, or quasi-thin with T-perp nonempty",
                            ctx.profile);

  Driver driver(ctx, tol);
  rep.center_dimension = driver.center_dimension();
  const int primary = p2 ? 2 : p3 ? 3 : 1;
  rep.primary = driver.run(primary);
  if (p1 && primary != 1) {
    rep.alternate = driver.run(1);
    rep.cross_path_agree = same_partition(rep.primary, *rep.alternate, tol);
  }
  if (tag != QuasiThinCase::NotQuasiThin) rep.fiber_pairs = fiber_pairs_for(y, ctx.profile);

  try {
    SpectralOptions opts;
    opts.tol = tol;
    const auto projectors = numeric_central_primitive_idempotents(ctx.ta, opts);
    rep.oracle_count = projectors.size();
    std::vector<ComplexMatrixF> mine;
    for (const auto& m : rep.primary.members) mine.push_back(m.numeric);
    const auto match = match_projectors(mine, projectors);
    rep.oracle_distance = match.max_distance;
    rep.oracle_agree = match.complete && match.max_distance <= 1e-6;
  } catch (const SpectralAmbiguity&) {
    rep.oracle_agree = false;
  }

  rep.failure = rep.primary.failure;
  if (rep.failure.empty() && rep.alternate && !rep.alternate->pass)
    rep.failure = "alternate path: " + rep.alternate->failure;
  if (rep.failure.empty() && rep.cross_path_agree && !*rep.cross_path_agree)
    rep.failure = "the two applicable paths produce different partitions";
  rep.pass = rep.failure.empty();
  return rep;
}

TheoremReport verify_theorem41(const CoherentConfiguration& x, const CoherentConfiguration& y,
                               Point x0, Point y0, double tol) {
  return verify_theorem41(build_context(x, y, x0, y0), tol);
}

}  // namespace schemekit
