#include "schemekit/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "schemekit/closure.hpp"
#include "schemekit/construct.hpp"
#include "schemekit/decomposition.hpp"
#include "schemekit/report.hpp"
#include "schemekit/scheme_io.hpp"
#include "schemekit/wreath_idempotents.hpp"

namespace schemekit {

namespace {

using nlohmann::json;

// Input problems that are not parse or axiom errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const CoherentConfiguration& require_scheme(const ParsedScheme& s) {
  if (!s.configuration.is_homogeneous())
    throw UsageError(s.file.path + " is not homogeneous (an association scheme is required)");
  return s.configuration;
}

Point require_point(const CoherentConfiguration& c, long k, const std::string& what) {
  if (k < 0 || std::size_t(k) >= c.order())
    throw UsageError(what + " " + std::to_string(k) + " out of range for order " +
                     std::to_string(c.order()));
  return Point(k);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const auto s = load_scheme(file);
  const auto& c = s.configuration;
  out << "valid coherent configuration: order " << c.order() << ", rank " << c.rank() << ", fibers "
      << c.fibers().size() << (c.is_homogeneous() ? ", association scheme" : "") << '\n';
  return kPass;
}

int cmd_analyze(const std::string& file, long y0_arg, std::ostream& out) {
  const auto s = load_scheme(file);
  const auto& c = require_scheme(s);
  const Point y0 = require_point(c, y0_arg, "y0");
  json j;
  j["order"] = c.order();
  j["rank"] = c.rank();
  json valencies = json::array();
  for (Color t = 0; t < c.rank(); ++t) valencies.push_back(c.valency(t));
  j["valencies"] = valencies;
  j["regular_points"] = regular_points(c);
  try {
    const auto p = quasi_thin_profile(c, y0);
    j["profile"] = to_json(p);
    j["case"] = to_string(p.case_tag);
    if (p.quasi_thin()) j["fiber_pairs"] = to_json(fiber_pair_membership(c, y0));
  } catch (const std::logic_error& e) {
    throw UsageError(e.what());
  }
  out << j.dump(2) << '\n';
  return kPass;
}

int cmd_construct(const std::string& kind, const std::string& f1, const std::string& f2,
                  const std::string& target, std::ostream& out) {
  const auto a = load_scheme(f1);
  const auto b = load_scheme(f2);
  CoherentConfiguration result = [&] {
    if (kind == "wreath") return wreath(require_scheme(a), require_scheme(b)).scheme;
    if (kind == "product") return direct_product(a.configuration, b.configuration);
    return direct_sum(a.configuration, b.configuration).configuration;
  }();
  write_file(target, write_scheme(result));
  out << "wrote " << target << ": order " << result.order() << ", rank " << result.rank() << '\n';
  return kPass;
}

int cmd_closure(const std::string& file, long point, const std::string& target, std::ostream& out) {
  const auto s = load_scheme(file);
  const Point p = require_point(s.configuration, point, "point");
  const auto ext = one_point_extension(s.configuration, p);
  write_file(target, write_scheme(ext));
  out << "wrote " << target << ": order " << ext.order() << ", rank " << ext.rank() << ", fibers "
      << ext.fibers().size() << '\n';
  return kPass;
}

int cmd_terwilliger(const std::string& file, long x0_arg, std::ostream& out) {
  const auto s = load_scheme(file);
  const auto& c = require_scheme(s);
  const Point x0 = require_point(c, x0_arg, "x0");
  const auto t = terwilliger(c, x0);
  const auto ext = one_point_extension(c, x0);
  json j = {{"order", c.order()},
            {"rank", c.rank()},
            {"x0", x0},
            {"terwilliger_dimension", t.dimension()},
            {"center_dimension", center(t).dimension()},
            {"extension_rank", ext.rank()},
            {"extension_fibers", ext.fibers().size()},
            {"equal_dimensions", t.dimension() == ext.rank()}};
  out << j.dump(2) << '\n';
  return kPass;
}

int cmd_verify(const std::string& fx, const std::string& fy, long x0_arg, long y0_arg, double tol,
               const std::string& format, const std::string& target, bool timing,
               std::ostream& out) {
  const auto sx = load_scheme(fx);
  const auto sy = load_scheme(fy);
  const auto& x = require_scheme(sx);
  const auto& y = require_scheme(sy);
  const Point x0 = require_point(x, x0_arg, "x0");
  const Point y0 = require_point(y, y0_arg, "y0");

  const auto start = std::chrono::steady_clock::now();
  TheoremReport rep;
  try {
    rep = verify_theorem41(x, y, x0, y0, tol);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string text;
  if (format == "text") {
    text = to_text(rep);
    if (timing) text += "runtime " + std::to_string(seconds) + " s\n";
  } else {
    const InputDigest dx{fx, file_sha256(fx)}, dy{fy, file_sha256(fy)};
    text = to_json(rep, dx, dy, x0, y0, timing ? std::optional<double>(seconds) : std::nullopt)
               .dump(2) +
           "\n";
  }
  if (target.empty())
    out << text;
  else
    write_file(target, text);
  return rep.pass ? kPass : kMathFailure;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherent configurations, Terwilliger algebras and wreath idempotents", "schemekit"};
  app.require_subcommand(1);

  std::string file, file2, kind, target, format = "json";
  long x0 = 0, y0 = 0, point = 0;
  double tol = 1e-9;
  bool timing = false;

  auto* validate = app.add_subcommand("validate", "Check the coherence axioms");
  validate->add_option("file", file)->required();

  auto* analyze = app.add_subcommand("analyze", "Quasi-thin profile as JSON");
  analyze->add_option("file", file)->required();
  analyze->add_option("--y0", y0, "Base point");

  auto* construct = app.add_subcommand("construct", "Wreath, direct product or direct sum");
  construct->add_option("kind", kind)->required()->check(CLI::IsMember({"wreath", "product", "sum"}));
  construct->add_option("first", file)->required();
  construct->add_option("second", file2)->required();
  construct->add_option("-o,--output", target)->required();

  auto* closure = app.add_subcommand("closure", "One-point extension");
  closure->add_option("file", file)->required();
  closure->add_option("--point", point)->required();
  closure->add_option("-o,--output", target)->required();

  auto* terw = app.add_subcommand("terwilliger", "Terwilliger algebra dimensions");
  terw->add_option("file", file)->required();
  terw->add_option("--x0", x0)->required();

  auto* verify = app.add_subcommand("verify", "Central primitive idempotents of the wreath Terwilliger algebra");
  verify->add_option("file_x", file)->required();
  verify->add_option("file_y", file2)->required();
  verify->add_option("--x0", x0)->required();
  verify->add_option("--y0", y0)->required();
  verify->add_option("--tol", tol)->check(CLI::PositiveNumber);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  verify->add_option("-o,--output", target);
  verify->add_flag("--timing", timing, "Include runtime in the report");

  std::vector<std::string> storage{"schemekit"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*analyze) return cmd_analyze(file, y0, out);
    if (*construct) return cmd_construct(kind, file, file2, target, out);
    if (*closure) return cmd_closure(file, point, target, out);
    if (*terw) return cmd_terwilliger(file, x0, out);
    return cmd_verify(file, file2, x0, y0, tol, format, target, timing, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const AxiomViolation& e) {
    err << e.what() << "\n  witness colors ["
        << join(e.witness_colors()) << "] points [" << join(e.witness_points()) << "]\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace schemekit
