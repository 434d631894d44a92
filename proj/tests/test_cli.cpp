#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "schemekit/cli.hpp"
#include "schemekit/report.hpp"
#include "support.hpp"

using namespace schemekit;
using namespace testing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("schemekit_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

const std::vector<std::string> kFixtures{"k2.scm", "k3.scm", "k4.scm", "z2.scm", "z3.scm",
                                         "c5.scm", "c6.scm", "q2.scm", "q3.scm"};

}  // namespace

TEST_CASE("parse examples") {
  const auto p = parse_scheme("# K2\n2\n0 1\n1 0\n");
  CHECK(p.file.comments == std::vector<std::string>{"K2"});
  CHECK(p.file.order == 2);
  CHECK(p.configuration == complete(2));
  CHECK(parse_scheme("1 0").configuration.rank() == 1);
  CHECK(parse_scheme("  # indented comment\n3 0 1 1 1 0 1 1 1 0").configuration == complete(3));
}

TEST_CASE("parse errors carry positions") {
  auto position = [](std::string_view text) {
    try {
      parse_scheme(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(std::size_t(0), std::size_t(0));
  };
  CHECK(position("") == std::make_pair(std::size_t(1), std::size_t(1)));
  CHECK(position("2\n0 1\n1 x\n") == std::make_pair(std::size_t(3), std::size_t(3)));
  CHECK(position("2\n0 1\n1\n").first == 4);  // end of input
  CHECK(position("0\n").first == 1);
  CHECK(position("2\n0 1\n1 0 5\n") == std::make_pair(std::size_t(3), std::size_t(5)));
  CHECK(position("2\n0 2\n2 0\n").first != 0);  // color 1 missing
  CHECK(position("2\n1 0\n0 1\n").first != 0);  // constant nonzero diagonal
  CHECK(position("2\n0 -1\n1 0\n").first != 0);
  CHECK_THROWS_AS(parse_scheme("2\n0 1\n2 0\n"), AxiomViolation);
  CHECK_THROWS_AS(load_scheme(fixture("does_not_exist.scm")), std::runtime_error);
}

TEST_CASE("every fixture survives a write and parse round trip") {
  for (const auto& name : kFixtures) {
    CAPTURE(name);
    const auto p = load_scheme(fixture(name));
    const auto again = parse_scheme(write_scheme(p.configuration, p.file.comments));
    CHECK(again.configuration == p.configuration);
    CHECK(again.file.comments == p.file.comments);
  }
  CHECK(load_fixture("q2.scm") == q2());
  CHECK(load_fixture("q3.scm") == q3());
  CHECK(load_fixture("c5.scm") == polygon(5));
  CHECK(load_fixture("z3.scm") == cyclic(3));
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(file_sha256(fixture("k2.scm")).size() == 64);
}

TEST_CASE("exit codes") {
  CHECK(run({"validate", fixture("k3.scm")}).code == 0);
  const auto broken = run({"validate", fixture("broken.scm")});
  CHECK(broken.code == 2);
  CHECK(broken.err.find("witness colors") != std::string::npos);
  CHECK(run({"validate", fixture("missing.scm")}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", fixture("k2.scm"), fixture("k3.scm"), "--x0", "0"}).code == 2);
  CHECK(run({"verify", fixture("k2.scm"), fixture("k3.scm"), "--x0", "0", "--y0", "3"}).code == 2);
  CHECK(run({"verify", fixture("k2.scm"), fixture("k3.scm"), "--x0", "0", "--y0", "0", "--format",
             "yaml"})
            .code == 2);
  CHECK(run({"verify", fixture("k2.scm"), fixture("k3.scm"), "--x0", "0", "--y0", "1"}).code == 0);
}

TEST_CASE("verify json is complete and byte stable") {
  const std::vector<std::string> args{"verify", fixture("k2.scm"), fixture("k3.scm"), "--x0", "0", "--y0", "0"};
  const auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  for (const char* key : {"inputs", "case", "wreath", "terwilliger_dimension", "center_dimension",
                          "primary", "family_count", "cross_path_agree", "oracle", "fiber_pairs",
                          "tolerance", "pass"})
    CHECK(j.contains(key));
  CHECK_FALSE(j.contains("runtime_seconds"));
  CHECK(j["pass"] == true);
  CHECK(j["terwilliger_dimension"] == 11);
  CHECK(j["center_dimension"] == 3);
  CHECK(j["case"] == "Case1");
  CHECK(j["inputs"]["x"]["sha256"] == file_sha256(fixture("k2.scm")));

  auto timed = args;
  timed.push_back("--timing");
  CHECK(nlohmann::json::parse(run(timed).out).contains("runtime_seconds"));

  auto text = args;
  text.insert(text.end(), {"--format", "text"});
  const auto t = run(text);
  CHECK(t.code == 0);
  CHECK(t.out.find("PASS") != std::string::npos);
}

TEST_CASE("analyze, construct, closure and terwilliger commands") {
  const auto a = run({"analyze", fixture("q2.scm")});
  REQUIRE(a.code == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["case"] == "Case2");
  CHECK(j["profile"]["class_count"] == 2);

  const auto w = temp_path("wreath.scm");
  CHECK(run({"construct", "wreath", fixture("k2.scm"), fixture("z2.scm"), "-o", w}).code == 0);
  CHECK(load_scheme(w).configuration == q2());
  const auto s = temp_path("sum.scm");
  CHECK(run({"construct", "sum", fixture("k2.scm"), fixture("k3.scm"), "-o", s}).code == 0);
  CHECK(load_scheme(s).configuration.order() == 5);
  CHECK(run({"construct", "tensor", fixture("k2.scm"), fixture("k3.scm"), "-o", s}).code == 2);

  const auto c = temp_path("closure.scm");
  CHECK(run({"closure", fixture("k3.scm"), "--point", "0", "-o", c}).code == 0);
  CHECK(load_scheme(c).configuration.rank() == 5);
  CHECK(run({"closure", fixture("k3.scm"), "--point", "9", "-o", c}).code == 2);

  const auto t = run({"terwilliger", fixture("c5.scm"), "--x0", "0"});
  REQUIRE(t.code == 0);
  const auto tj = nlohmann::json::parse(t.out);
  CHECK(tj["equal_dimensions"] == true);

  // verify refuses a non-scheme
  CHECK(run({"verify", fixture("k2.scm"), s, "--x0", "0", "--y0", "0"}).code == 2);
  for (const auto& f : {w, s, c}) std::filesystem::remove(f);
}
