// Acceptance checks: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schemekit/cli.hpp"
#include "schemekit/scheme_io.hpp"
#include "schemekit/wreath_idempotents.hpp"

using namespace schemekit;
using nlohmann::json;

namespace {

// Pinned tolerances.
constexpr double kOracleTol = 1e-6;
constexpr double kMixedTol = 1e-9;
constexpr double kCrit1Seconds = 1.0;
constexpr double kCrit2Seconds = 5.0;
constexpr double kCatalogSeconds = 60.0;

const std::string kFixtures = SCHEMEKIT_FIXTURES;

enum class Outcome { Pass, Fail, Skipped };

struct Verdict {
  Outcome outcome = Outcome::Pass;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && outcome == Outcome::Pass) {
      outcome = Outcome::Fail;
      detail = what;
    }
  }
};

CoherentConfiguration load(const std::string& name) { return load_scheme(kFixtures + "/" + name).configuration; }

struct Timed {
  int code;
  json report;
  double seconds;
};

Timed verify_cli(const std::string& fx, const std::string& fy) {
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  const int code = run_command({"verify", fx, fy, "--x0", "0", "--y0", "0"}, out, err);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json j;
  if (!out.str().empty()) j = json::parse(out.str());
  return {code, j, s};
}

std::map<std::string, std::size_t> family_counts(const PathResult& p) {
  std::map<std::string, std::size_t> m;
  for (const auto& e : p.members) {
    const auto colon = e.family.find(':');
    ++m[e.family.substr(0, colon)];
  }
  return m;
}

const PathResult* path_named(const TheoremReport& r, const std::string& name) {
  if (r.primary.name == name) return &r.primary;
  if (r.alternate && r.alternate->name == name) return &*r.alternate;
  return nullptr;
}

Rational trace(const RationalMatrix& m) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

std::size_t ledger_value(const PathResult& p, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& t : p.ledger)
    if (t.name.rfind(prefix, 0) == 0) n += t.value;
  return n;
}

Verdict criterion1() {
  Verdict v;
  const auto cli = verify_cli(kFixtures + "/k2.scm", kFixtures + "/k3.scm");
  v.require(cli.code == 0, "verify exit code " + std::to_string(cli.code));
  v.require(cli.seconds < kCrit1Seconds, "runtime " + std::to_string(cli.seconds) + " s");
  const auto r = verify_theorem41(load("k2.scm"), load("k3.scm"), 0, 0);
  v.require(r.pass, "driver: " + r.failure);
  v.require(r.center_dimension == 3, "center dimension " + std::to_string(r.center_dimension));
  const auto* q = path_named(r, "quasi-thin");
  v.require(q != nullptr, "quasi-thin path not run");
  if (q) {
    const auto fam = family_counts(*q);
    v.require(q->members.size() == 3 && fam.at("trivial") == 1 && fam.count("hat") && fam.at("hat") == 1 &&
                  fam.count("eta") && fam.at("eta") == 1,
              "family structure");
    v.require(q->partition.pass && q->partition.exact, "partition not exact");
    for (const auto& m : q->members)
      if (m.family == "eta") v.require(m.exact && m.trace && *m.trace == 1, "trace(e_eta) != 1");
  }
  v.require(r.oracle_count == 3 && r.oracle_distance < kOracleTol, "numeric oracle disagrees");
  if (v.outcome == Outcome::Pass)
    v.detail = "3 idempotents, exact partition, oracle distance " + std::to_string(r.oracle_distance) +
               ", " + std::to_string(cli.seconds) + " s";
  return v;
}

Verdict criterion2() {
  Verdict v;
  const auto cli = verify_cli(kFixtures + "/k2.scm", kFixtures + "/q2.scm");
  v.require(cli.code == 0, "verify exit code " + std::to_string(cli.code));
  v.require(cli.seconds < kCrit2Seconds, "runtime " + std::to_string(cli.seconds) + " s");
  const auto r = verify_theorem41(load("k2.scm"), load("q2.scm"), 0, 0);
  v.require(r.pass, "driver: " + r.failure);
  v.require(r.case_tag == QuasiThinCase::Case2, "not Case2");
  const auto& p = r.primary;
  v.require(p.members.size() == 4 && r.center_dimension == 4, "member count / center dimension");
  const std::vector<std::size_t> expect{1, 0, 1, 1, 1};
  const std::vector<std::size_t> got{ledger_value(p, "trivial"), ledger_value(p, "tilde"),
                                     ledger_value(p, "bar"), ledger_value(p, "hat"), ledger_value(p, "eta")};
  v.require(got == expect, "count ledger");
  v.require(p.ledger_balances && p.partition.exact, "ledger or exact partition");
  if (v.outcome == Outcome::Pass)
    v.detail = "ledger 1+0+1+1+1 = 4 = center dimension, " + std::to_string(cli.seconds) + " s";
  return v;
}

Verdict criterion3() {
  Verdict v;
  std::size_t checked = 0;
  for (const auto* name : {"k2.scm", "k3.scm", "q2.scm", "q3.scm"}) {
    const auto c = load(name);
    for (Point x = 0; x < c.order(); ++x) {
      const auto ext = adjacency_algebra(one_point_extension(c, x));
      const auto t = terwilliger(c, x);
      v.require(ext.dimension() == t.dimension(),
                std::string(name) + " at " + std::to_string(x) + ": " + std::to_string(ext.dimension()) +
                    " vs " + std::to_string(t.dimension()));
      ++checked;
    }
  }
  const auto k4 = load("k4.scm");
  for (Point x = 0; x < k4.order(); ++x) {
    const auto ext = adjacency_algebra(one_point_extension(k4, x));
    const auto t = terwilliger(k4, x);
    for (const auto& b : t.elements()) v.require(ext.contains(b), "K4 inclusion");
  }
  if (v.outcome == Outcome::Pass) v.detail = std::to_string(checked) + " base points equal, K4 inclusion holds";
  return v;
}

Verdict criterion4() {
  Verdict v;
  std::size_t families = 0;
  for (const auto* name : {"k3.scm", "c5.scm", "c6.scm"}) {
    const auto y = load(name);
    for (Point y0 = 0; y0 < y.order(); ++y0) {
      const auto ctx = build_context(load("k2.scm"), y, 0, y0);
      if (ctx.profile.case_tag != QuasiThinCase::Case1 && ctx.profile.case_tag != QuasiThinCase::Case3) continue;
      const auto g = g_matrices(ctx);
      v.require(g.ok(), std::string(name) + ": " + g.failure);
      v.require(g.ideal_checked_on_basis, std::string(name) + ": ideal check not on the basis");
      ++families;
    }
  }
  v.require(families > 0, "no eligible fixture");
  if (v.outcome == Outcome::Pass) v.detail = std::to_string(families) + " G families";
  return v;
}

Verdict criterion5() {
  Verdict v;
  for (const auto* y : {"k3.scm", "q2.scm"}) {
    const auto r = verify_theorem41(load("k2.scm"), load(y), 0, 0);
    v.require(r.primary.partition.pass && r.primary.partition.exact, std::string("K2 wr ") + y + " not exact");
  }
  const auto mixed = verify_theorem41(load("z3.scm"), load("k3.scm"), 0, 0, kMixedTol);
  const auto& p = mixed.primary.partition;
  v.require(p.pass, "Z3 wr K3: " + p.failure);
  v.require(p.max_sum_deviation <= kMixedTol && p.max_cross_product <= kMixedTol, "Z3 wr K3 tolerance");
  bool any_numeric = false;
  for (const auto& m : mixed.primary.members) any_numeric |= !m.exact;
  v.require(any_numeric, "Z3 wr K3 expected complex members");
  if (v.outcome == Outcome::Pass) {
    std::ostringstream d;
    d << "exact on fixtures 1-2, mixed deviation " << std::max(p.max_sum_deviation, p.max_cross_product);
    v.detail = d.str();
  }
  return v;
}

Verdict criterion6() {
  Verdict v;
  const auto r = verify_theorem41(load("k2.scm"), load("k3.scm"), 0, 0);
  const auto* a = path_named(r, "one-class-or-thin");
  const auto* b = path_named(r, "quasi-thin");
  v.require(a && b, "both paths must run");
  if (!a || !b) return v;
  v.require(a->pass && b->pass, "a path failed");
  v.require(r.cross_path_agree.value_or(false), "driver reports disagreement");
  // independent exact comparison of the two sets of idempotents
  std::vector<RationalMatrix> ea, eb;
  for (const auto& m : a->members)
    if (m.element) ea.push_back(*m.element);
  for (const auto& m : b->members)
    if (m.element) eb.push_back(*m.element);
  v.require(ea.size() == a->members.size() && eb.size() == b->members.size(), "non-exact member");
  v.require(ea.size() == eb.size(), "different sizes");
  for (const auto& e : ea) {
    bool found = false;
    for (const auto& f : eb) found |= e == f;
    v.require(found, "idempotent of trace " + trace(e).get_str() + " unmatched");
  }
  if (v.outcome == Outcome::Pass) v.detail = std::to_string(ea.size()) + " idempotents matched exactly";
  return v;
}

Verdict criterion7() {
  Verdict v;
  const std::string dir = kFixtures + "/catalog/";
  const std::vector<std::pair<std::string, QuasiThinCase>> expected{
      {"as12_48.scm", QuasiThinCase::Case2},
      {"as12_51.scm", QuasiThinCase::Case1},
      {"as28_175.scm", QuasiThinCase::Case3},
      {"as28_176.scm", QuasiThinCase::Case3},
  };
  for (const auto& [f, tag] : expected)
    if (!std::filesystem::exists(dir + f)) {
      v.outcome = Outcome::Skipped;
      v.detail = "catalog file " + f + " not present in fixtures/catalog";
      return v;
    }
  std::ostringstream d;
  for (const auto& [f, tag] : expected) {
    std::ostringstream out, err;
    const int code = run_command({"analyze", dir + f}, out, err);
    v.require(code == 0, f + ": analyze exit " + std::to_string(code));
    if (code != 0) continue;
    v.require(json::parse(out.str())["case"] == to_string(tag), f + ": wrong case");
    const auto y = load_scheme(dir + f).configuration;
    const auto fp = fiber_pair_membership(y, 0);
    v.require(fp.pass, f + ": fiber pairs " + fp.failure);
    const auto cli = verify_cli(kFixtures + "/k2.scm", dir + f);
    v.require(cli.code == 0, f + ": verify exit " + std::to_string(cli.code));
    v.require(cli.seconds < kCatalogSeconds, f + ": runtime " + std::to_string(cli.seconds));
    d << f << ' ' << cli.seconds << " s; ";
  }
  if (v.outcome == Outcome::Pass) v.detail = d.str();
  return v;
}

CoherentConfiguration revalidate(const CoherentConfiguration& c) {
  return CoherentConfiguration::validate(c.order(), std::vector<Color>(c.colors().begin(), c.colors().end()));
}

Verdict criterion8() {
  Verdict v;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> order(1, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = std::size_t(order(rng));
    std::uniform_int_distribution<std::uint64_t> col(0, std::uint64_t(trial % 5 + 1));
    InitialColoring init{n, std::vector<std::uint64_t>(n * n)};
    for (auto& c : init.colors) c = col(rng);
    const auto c = wl_closure(init);
    v.require(wl_closure(coloring_of(c)) == c, "fixed point, trial " + std::to_string(trial));
    std::map<Color, std::uint64_t> back;
    for (std::size_t k = 0; k < n * n; ++k)
      v.require(back.try_emplace(c.colors()[k], init.colors[k]).first->second == init.colors[k],
                "refinement, trial " + std::to_string(trial));
    v.require(revalidate(c) == c, "revalidation, trial " + std::to_string(trial));
  }
  std::size_t built = 0;
  std::vector<CoherentConfiguration> fx;
  for (const auto* f : {"k2.scm", "k3.scm", "z3.scm", "c5.scm", "q2.scm"}) fx.push_back(load(f));
  for (const auto& a : fx)
    for (const auto& b : fx) {
      for (const auto& c : {direct_sum(a, b).configuration, direct_product(a, b), wreath(a, b).scheme}) {
        v.require(revalidate(c) == c, "construction revalidation");
        ++built;
      }
    }
  for (const auto& a : fx) {
    v.require(revalidate(thin_residue_extension(a, thin_residue(a))) == thin_residue_extension(a, thin_residue(a)),
              "thin residue extension revalidation");
    v.require(revalidate(one_point_extension(a, 0)) == one_point_extension(a, 0), "extension revalidation");
    built += 2;
  }
  if (v.outcome == Outcome::Pass)
    v.detail = "100 random colorings, " + std::to_string(built) + " constructions revalidated";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::function<Verdict()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8};
  bool failed = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v.outcome = Outcome::Fail;
      v.detail = std::string("exception: ") + e.what();
    }
    const char* word = v.outcome == Outcome::Pass ? "PASS" : v.outcome == Outcome::Fail ? "FAIL" : "SKIPPED";
    failed |= v.outcome == Outcome::Fail;
    std::cout << "criterion " << i + 1 << ": " << word << " - " << v.detail << '\n';
  }
  return failed ? 1 : 0;
}
