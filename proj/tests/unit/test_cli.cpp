#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "unfold/cli.hpp"
#include "unfold/report.hpp"

using namespace unfold;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "unfold");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("certify") {
  const auto r = cli({"certify", "1", "2", "8"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("DenseInStratumComponent") != std::string::npos);
  CHECK(r.out.find("genus                   5") != std::string::npos);
  CHECK(r.out.find("H(7,1)") != std::string::npos);

  const auto p = cli({"certify", "1", "2", "4"});
  CHECK(p.out.find("Inconclusive") != std::string::npos);
  CHECK(p.out.find("rank_lower_bound        1") != std::string::npos);

  CHECK(cli({"certify", "2", "4", "8", "--reduce"}).out == p.out);
  CHECK(cli({"certify", "2", "4", "8"}).code == kExitInvalidInput);
  CHECK(cli({"certify", "0", "4", "8"}).code == kExitInvalidInput);
  CHECK(cli({"certify", "-1", "4", "8"}).code == kExitInvalidInput);
  CHECK(cli({"certify", "1", "2"}).code == kExitInvalidInput);
}

TEST_CASE("certify --json round-trips") {
  const auto r = cli({"certify", "4", "5", "6", "--json"});
  REQUIRE(r.code == kExitOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["verdict"] == "DenseInStratumComponent");
  CHECK(certificate_to_json(certificate_from_json(doc)) == doc);
}

TEST_CASE("table matches the golden file") {
  const auto r = cli({"table", "--k-max", "25"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == slurp(std::filesystem::path(UNFOLD_TEST_DATA) / "dense_triangles_k25.txt"));
  CHECK(cli({"table", "--k-max", "9"}).out == "total 0\n");
  CHECK(cli({"table", "--k-max", "15"}).out ==
        "k=11 (3): (1,2,8) (1,3,7) (2,4,5)\nk=13 (3): (1,4,8) (2,3,8) (3,4,6)\nk=15 (1): (4,5,6)\ntotal 7\n");
}

TEST_CASE("stats") {
  const auto r = cli({"stats", "--k-max", "49"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("triangles 1436") != std::string::npos);
  CHECK(r.out.find("dense     1069") != std::string::npos);
  CHECK(r.out.find("total 1436 == 1436, fraction >= 0.74  ok") != std::string::npos);

  const auto s = cli({"stats", "--k-max", "25"});
  const auto gcd_block = s.out.substr(s.out.find("gcd(q1,q2,q3) = 1"));
  CHECK(gcd_block.find("dense     102") != std::string::npos);

  CHECK(cli({"stats", "--k-max", "3"}).out.find("triangles 0") != std::string::npos);
}

TEST_CASE("enumerate output is identical across worker counts and formats parse") {
  for (const std::string fmt : {"tsv", "csv", "json"}) {
    const auto a = temp_path("unfold_enum_1." + fmt);
    const auto b = temp_path("unfold_enum_4." + fmt);
    REQUIRE(cli({"enumerate", "--k-max", "35", "--format", fmt, "--workers", "1", "--out", a.string()}).code == 0);
    REQUIRE(cli({"enumerate", "--k-max", "35", "--format", fmt, "--workers", "4", "--out", b.string()}).code == 0);
    const auto text = slurp(a);
    CHECK(text == slurp(b));
    CHECK(!text.empty());
    if (fmt == "json") {
      std::istringstream lines(text);
      std::string line;
      while (std::getline(lines, line)) CHECK_NOTHROW(certificate_from_json(Json::parse(line)));
    }
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }
  const auto all = cli({"enumerate", "--k-max", "9", "--any-k", "--allow-isosceles", "--allow-common-factor"});
  CHECK(all.out.find("2\t2\t2\t6") != std::string::npos);
  CHECK(cli({"enumerate", "--k-max", "9", "--format", "xml"}).code == kExitInvalidInput);
}

TEST_CASE("digraph commands") {
  const auto v = cli({"digraph", "verify", "--random", "200", "--seed", "7"});
  CHECK(v.code == kExitOk);
  CHECK(v.out == "200/200 pass\n");

  const auto rose = temp_path("unfold_rose2.txt");
  std::ofstream(rose) << "1 2\n0 0\n0 0\n";
  const auto d = cli({"digraph", "dim", "--file", rose.string()});
  CHECK(d.code == kExitOk);
  CHECK(d.out == "loop_space_dim 2\n|E|-|V|+1 2\n");

  const auto path = temp_path("unfold_path.txt");
  std::ofstream(path) << "3 2\n0 1\n1 2\n";
  const auto p = cli({"digraph", "dim", "--file", path.string()});
  CHECK(p.code == kExitOk);
  CHECK(p.out.find("loop_space_dim 0") != std::string::npos);
  CHECK(p.out.find("not strongly connected") != std::string::npos);

  CHECK(cli({"digraph", "dim", "--file", "/nonexistent/graph.txt"}).code == kExitInvalidInput);
  std::filesystem::remove(rose);
  std::filesystem::remove(path);
}

TEST_CASE("bform") {
  const auto r = cli({"bform", "--a1", "1/3", "--a2", "1/3", "--eps1", "0", "--eps2", "0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("value 24.32588479") != std::string::npos);
  CHECK(r.out.find("nonvanishing true") != std::string::npos);
  CHECK(cli({"bform", "--a1", "1/3", "--a2", "1/3", "--eps1", "1", "--eps2", "1"}).code == kExitInvalidInput);
  const auto s = cli({"bform", "--a1", "1/5", "--a2", "2/5", "--eps1", "1", "--eps2", "0"});
  CHECK(s.out.find("nonvanishing true") != std::string::npos);
  CHECK(cli({"bform", "--a1", "1/3", "--a2", "1/3", "--tol", "1e-30"}).code == kExitCheckFailed);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitInvalidInput);
  CHECK(cli({"frobnicate"}).code == kExitInvalidInput);
  CHECK(cli({"--help"}).code == kExitOk);
}
