#include "schemekit/report.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace schemekit {

using nlohmann::json;

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string file_sha256(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

namespace {

json numeric_scalar(std::complex<double> z) {
  return {{"re", z.real()}, {"im", z.imag()}, {"exact", false}};
}

}  // namespace

json to_json(const IdempotentCertificate& c) {
  json j;
  j["family"] = c.family;
  j["member"] = c.member;
  j["exact"] = c.exact;
  j["trace"] = c.trace ? json(to_string(*c.trace)) : numeric_scalar(c.numeric.trace());
  j["in_algebra"] = c.in_algebra;
  j["idempotent"] = c.idempotent;
  j["central"] = c.central;
  j["primitive"] = c.primitive;
  j["certified"] = c.certified();
  if (!c.failure.empty()) j["failure"] = c.failure;
  return j;
}

json to_json(const GMatrixFamily& g) {
  json ordering = json::object();
  for (const auto& [t, p] : g.ordering) ordering[std::to_string(t)] = {p.first, p.second};
  json j = {{"scope", g.scope},
            {"ordering", ordering},
            {"dimension", g.dimension},
            {"delta_relations", g.delta_relations},
            {"independent", g.independent},
            {"ideal_closed", g.ideal_closed},
            {"ideal_checked_on", g.ideal_checked_on_basis ? "basis" : "generators"},
            {"ok", g.ok()}};
  if (!g.failure.empty()) j["failure"] = g.failure;
  return j;
}

json to_json(const FiberPairReport& r) {
  json fibers = json::array();
  for (const auto& f : r.fibers) fibers.push_back(f);
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    json e = {{"first", p.first}, {"second", p.second}, {"basic", p.basic}};
    e["predicted"] = p.predicted ? json(*p.predicted) : json(nullptr);
    if (p.class_first) e["class_first"] = *p.class_first;
    if (p.class_second) e["class_second"] = *p.class_second;
    pairs.push_back(e);
  }
  json j = {{"case", to_string(r.case_tag)},
            {"fibers", fibers},
            {"pairs", pairs},
            {"predictions", r.predictions},
            {"pass", r.pass}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

json to_json(const QuasiThinProfile& p) {
  json orth = json::object();
  for (const auto& [t, u] : p.orthogonal) orth[std::to_string(t)] = u;
  json j = {{"base_point", p.base_point},
            {"case", to_string(p.case_tag)},
            {"t1", p.t1},
            {"t2", p.t2},
            {"orthogonal", orth},
            {"tperp", p.tperp},
            {"thin_residue", p.thin_residue}};
  if (p.case_tag == QuasiThinCase::Case2) {
    j["h"] = p.h;
    j["extension_rank"] = p.extension ? p.extension->rank() : 0;
    j["equivalence"] = p.equivalence;
    j["class_count"] = p.blocks.size();
    j["blocks"] = p.blocks;
    j["base_class"] = p.base_class;
    j["u_sets"] = p.u_sets;
  }
  return j;
}

json to_json(const PathResult& r) {
  json members = json::array();
  for (const auto& m : r.members) members.push_back(to_json(m));
  json gs = json::array();
  for (const auto& g : r.g_families) gs.push_back(to_json(g));
  json ledger = json::array();
  for (const auto& t : r.ledger) ledger.push_back({{"name", t.name}, {"value", t.value}});
  json part = {{"pass", r.partition.pass},
               {"exact", r.partition.exact},
               {"size", r.partition.size},
               {"max_sum_deviation", r.partition.max_sum_deviation},
               {"max_cross_product", r.partition.max_cross_product}};
  if (!r.partition.failure.empty()) part["failure"] = r.partition.failure;
  json j = {{"name", r.name},
            {"families", members},
            {"family_count", r.members.size()},
            {"g_families", gs},
            {"partition", part},
            {"ledger", {{"terms", ledger}, {"total", r.ledger_total}, {"balances", r.ledger_balances}}},
            {"pass", r.pass}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

json to_json(const TheoremReport& r, const InputDigest& x, const InputDigest& y, Point x0, Point y0,
             std::optional<double> runtime_seconds) {
  json j;
  j["inputs"] = {{"x", {{"path", x.path}, {"sha256", x.sha256}}},
                 {"y", {{"path", y.path}, {"sha256", y.sha256}}},
                 {"x0", x0},
                 {"y0", y0}};
  j["case"] = to_string(r.case_tag);
  j["one_class"] = r.one_class;
  j["thin"] = r.thin;
  j["wreath"] = {{"order", r.order}, {"rank", r.rank}};
  j["terwilliger_dimension"] = r.ta_dimension;
  j["center_dimension"] = r.center_dimension;
  j["primary"] = to_json(r.primary);
  j["family_count"] = r.primary.members.size();
  if (r.alternate) j["alternate"] = to_json(*r.alternate);
  j["cross_path_agree"] = r.cross_path_agree ? json(*r.cross_path_agree) : json(nullptr);
  j["oracle"] = {{"count", r.oracle_count},
                 {"agree", r.oracle_agree},
                 {"max_distance", r.oracle_distance}};
  j["fiber_pairs"] = to_json(r.fiber_pairs);
  j["tolerance"] = r.tol;
  j["pass"] = r.pass;
  if (!r.failure.empty()) j["failure"] = r.failure;
  if (runtime_seconds) j["runtime_seconds"] = *runtime_seconds;
  return j;
}

std::string to_text(const TheoremReport& r) {
  std::ostringstream out;
  out << "case " << to_string(r.case_tag) << (r.one_class ? " (one-class)" : "")
      << (r.thin ? " (thin)" : "") << '\n';
  out << "wreath order " << r.order << ", rank " << r.rank << '\n';
  out << "terwilliger dimension " << r.ta_dimension << ", center dimension " << r.center_dimension
      << '\n';
  auto path = [&](const PathResult& p) {
    out << "path " << p.name << ": " << p.members.size() << " idempotents\n";
    for (const auto& m : p.members) {
      out << "  " << m.label() << (m.exact ? " exact" : " numeric") << " trace ";
      if (m.trace)
        out << to_string(*m.trace);
      else
        out << m.numeric_trace;
      out << (m.certified() ? " certified" : " FAILED: " + m.failure) << '\n';
    }
    out << "  ledger";
    for (const auto& t : p.ledger) out << ' ' << t.name << '=' << t.value;
    out << " total " << p.ledger_total << (p.ledger_balances ? " balanced" : " UNBALANCED") << '\n';
    out << "  partition " << (p.partition.pass ? "pass" : "FAIL") << (p.partition.exact ? " (exact)" : " (numeric)")
        << '\n';
  };
  path(r.primary);
  if (r.alternate) {
    path(*r.alternate);
    out << "cross-path " << (*r.cross_path_agree ? "agree" : "DISAGREE") << '\n';
  }
  out << "oracle " << r.oracle_count << " projectors, " << (r.oracle_agree ? "agree" : "DISAGREE")
      << '\n';
  out << (r.pass ? "PASS" : "FAIL: " + r.failure) << '\n';
  return out.str();
}

}  // namespace schemekit
