#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oddmp/cli.hpp"
#include "oddmp/json_io.hpp"

using namespace oddmp;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json strip_metadata(json j) {
  if (j.is_object()) j.erase("metadata");
  return j;
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("oddmp_test_" + name);
}

}  // namespace

TEST_CASE("valuation subcommand") {
  const auto r = call({"valuation", "--p", "7", "--e", "3"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("nu2_sigma") == 4);
  CHECK(j.at("broughan_zhou").at("j") == 4);
  CHECK(call({"valuation", "--p", "9", "--e", "3"}).code == 1);
  const auto bad = call({"valuation", "--p", "abc", "--e", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("precondition") != std::string::npos);
}

TEST_CASE("shapes subcommand") {
  const auto r = call({"shapes", "--k", "4"});
  CHECK(r.code == 0);
  const auto shapes = lines(r.out);
  REQUIRE(shapes.size() == 3);
  CHECK(shapes[0].at("prime_classes")[0].at("modulus") == 4);
  CHECK(shapes[0].at("exponent_classes")[0] == json::parse(R"({"residue":3,"modulus":8})"));
  CHECK(shapes[1].at("prime_classes")[0] == json::parse(R"({"residue":3,"modulus":8})"));
  CHECK(shapes[2].at("s") == 2);
  for (const auto& s : shapes) CHECK(s.get<ShapeDescriptor>().k == 4);
  const auto summary = json::parse(call({"shapes", "--k", "8", "--summary"}).out);
  CHECK(summary.at("total") == 8);
  CHECK(call({"shapes", "--k", "3"}).code == 1);
}

TEST_CASE("split, check-euler-part and mod8 subcommands") {
  const auto s = json::parse(call({"split", "--n", "3^3*5^2"}).out);
  CHECK(s.at("split").at("s") == 1);
  CHECK(s.at("identity").at("holds") == true);
  CHECK(call({"split", "--n", "12"}).code == 1);

  const auto c = json::parse(call({"check-euler-part", "--q", "5", "--beta", "1", "--other", "11:2"}).out);
  CHECK(c.at("divisibility").at("divides") == false);
  const auto o = json::parse(call({"check-euler-part", "--euler-part", "30029"}).out);
  CHECK(o.at("omega").at("omega") == 5);

  const auto t = json::parse(call({"mod8", "--table", "7"}).out);
  CHECK(t.at("solutions_mod16") == json::parse("[[1,13],[5,1],[9,5],[13,9]]"));
  const auto m = call({"mod8", "--pi", "5", "--alpha", "5", "--m-square", "3^2"});
  CHECK(m.code == 0);
  CHECK(json::parse(m.out).at("half_sigma_mod8") == 1);
  CHECK(json::parse(m.out).at("classification").at("implied") == "same_mod8");
}

TEST_CASE("certify exit codes and certificate file") {
  const auto path = temp_path("cert.json");
  const auto r = call({"certify", "--pi", "30029", "--m-constraint", "all-3-mod-4", "--out", path.string()});
  CHECK(r.code == 2);
  const auto j = json::parse(r.out);
  CHECK(j.at("kind") == "omega_parity");
  std::ifstream f(path);
  CHECK(json::parse(f) == j);
  CHECK(call({"verify-certificate", "--in", path.string()}).code == 0);

  json tampered = j;
  for (auto& w : tampered.at("witnesses"))
    if (w.at("name") == "omega") w.at("value") = 4;
  std::ofstream(path) << tampered.dump();
  const auto v = call({"verify-certificate", "--in", path.string()});
  CHECK(v.code == 1);
  CHECK(json::parse(v.out).at("valid") == false);
  std::filesystem::remove(path);

  const auto bad = call({"certify", "--pi", "209", "--m-constraint", "all-3-mod-4"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("209 = 11*19") != std::string::npos);
  CHECK(bad.err.find("pi_prime") != std::string::npos);

  CHECK(call({"certify", "--pi", "5", "--alpha", "5", "--m-constraint", "all-3-mod-4"}).code == 0);
  const auto fermat = call({"certify", "--pi", "41", "--alpha", "13", "--q", "5"});
  CHECK(fermat.code == 2);
}

TEST_CASE("search, oracle and abundancy subcommands") {
  const auto s = json::parse(call({"search", "--k", "2", "--bound", "10000", "--workers", "4"}).out);
  CHECK(s.at("hits") == json::parse("[6,28,496,8128]"));
  CHECK(s.at("metadata").contains("elapsed_ms"));
  const auto o = call({"oracle", "--family", "mod16-tables"});
  CHECK(o.code == 0);
  CHECK(json::parse(o.out).at("passed") == true);
  CHECK(call({"oracle", "--family", "nope"}).code == 1);
  const auto a = json::parse(call({"abundancy", "--n", "120"}).out);
  CHECK(a.at("numerator") == 3);
  CHECK(a.at("denominator") == 1);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"search", "--k", "2", "--bound", "x"}).code == 1);
  CHECK(call({"--format", "xml", "shapes", "--k", "2"}).code == 1);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("text format") {
  const auto r = call({"--format", "text", "shapes", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("p_1 = 1 (mod 4)") != std::string::npos);
  CHECK(call({"shapes", "--k", "2", "--format", "text"}).out == r.out);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::vector<std::string>> invocations = {
      {"valuation", "--p", "5", "--e", "5"},
      {"shapes", "--k", "48"},
      {"split", "--n", "6615"},
      {"certify", "--pi", "30029", "--m-constraint", "all-3-mod-4"},
      {"certify", "--pi-class", "1:20", "--alpha-class", "13:20", "--q", "5"},
      {"search", "--k", "3", "--bound", "20000", "--workers", "3"},
      {"oracle", "--family", "half-sigma-mod8"},
  };
  for (const auto& args : invocations) {
    const auto a = call(args);
    const auto b = call(args);
    CHECK(a.code == b.code);
    const auto ja = lines(a.out), jb = lines(b.out);
    REQUIRE(ja.size() == jb.size());
    for (std::size_t i = 0; i < ja.size(); ++i)
      CHECK(strip_metadata(ja[i]).dump() == strip_metadata(jb[i]).dump());
  }
}

TEST_CASE("config file supplies defaults that flags override") {
  const auto path = temp_path("cfg.conf");
  std::ofstream(path) << "# test config\nformat = text\nworkers = 2\nbound = 1000\n";
  const auto r = call({"--config", path.string(), "search", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 3-perfect numbers <= 1000: 120 672") != std::string::npos);
  const auto j = call({"--config", path.string(), "--format", "json", "search", "--k", "3"});
  CHECK(json::parse(j.out).at("metadata").at("workers") == 2);

  ::setenv(cli::kConfigEnv, path.string().c_str(), 1);
  CHECK(call({"abundancy", "--n", "6"}).out.find("2-perfect") != std::string::npos);
  ::unsetenv(cli::kConfigEnv);
  std::filesystem::remove(path);

  CHECK(call({"--config", "/nonexistent/oddmp.conf", "abundancy", "--n", "6"}).code == 1);
  CHECK_THROWS_AS(cli::Config::parse("no equals sign"), PreconditionError);
  CHECK(cli::Config::parse("a = 1 # c\n\n b=2").get("b") == "2");
}
