#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ainfp/fixtures.hpp"

using nlohmann::json;
using namespace ainfp;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("AINFP_CLI");
  REQUIRE_MESSAGE(p, "AINFP_CLI must point at the built binary");
  return p;
}

fs::path work_dir() {
  static fs::path d = [] {
    fs::path p = fs::temp_directory_path() / "ainfp_cli_test";
    fs::create_directories(p);
    return p;
  }();
  return d;
}

RunResult run(const std::string& args) {
  fs::path cap = work_dir() / "capture.txt";
  std::string cmd = cli_path() + " " + args + " > " + cap.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(cap);
  std::ostringstream os;
  os << in.rdbuf();
  r.out = os.str();
  return r;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = work_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string write_complex(const std::string& name, const FilteredSimplicialComplex& X) {
  json s = json::array();
  for (auto& [v, val] : X.simplices) s.push_back({{"vertices", v}, {"value", val}});
  return write_file(name, json{{"simplices", s}}.dump(2));
}

}  // namespace

TEST_CASE("barcode of the unit square point cloud") {
  std::string csv = write_file("square.csv", "0,0\n1,0\n1,1\n0,1\n");
  auto r = run("barcode " + csv);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["kind"] == "homology");
  bool h1 = false;
  for (auto& b : j["bars"])
    if (b["degree"] == 1 && b["lower"] == 1.0 &&
        b["upper"].get<double>() == doctest::Approx(std::sqrt(2.0)))
      h1 = true;
  CHECK(h1);
  // byte-stable output
  auto r2 = run("barcode " + csv);
  CHECK(r2.out == r.out);
}

TEST_CASE("rips output round-trips through the barcode command") {
  std::string csv = write_file("square.csv", "0,0\n1,0\n1,1\n0,1\n");
  std::string cx = (work_dir() / "square_complex.json").string();
  auto r = run("rips " + csv + " --json " + cx);
  REQUIRE(r.code == 0);
  auto direct = run("barcode " + csv);
  auto via = run("barcode " + cx);
  REQUIRE(via.code == 0);
  CHECK(via.out == direct.out);
}

TEST_CASE("empty input gives an empty barcode") {
  std::string empty = write_file("empty.csv", "");
  auto r = run("barcode " + empty);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["bars"].empty());
}

TEST_CASE("input errors exit with code 1 and a located message") {
  std::string bad = write_file("bad.csv", "0,1,2\n1,0,3\n2,4,0\n");
  auto r = run("barcode " + bad + " --dist");
  CHECK(r.code == 1);
  CHECK(r.out.find("symmetric") != std::string::npos);
  std::string notnum = write_file("notnum.csv", "0,0\n1,zap\n");
  auto r2 = run("barcode " + notnum);
  CHECK(r2.code == 1);
  CHECK(r2.out.find("notnum.csv:2") != std::string::npos);
  auto r3 = run("barcode " + (work_dir() / "missing.csv").string());
  CHECK(r3.code == 1);
}

TEST_CASE("distance of an input against itself is exactly zero") {
  std::string csv = write_file("square.csv", "0,0\n1,0\n1,1\n0,1\n");
  auto r = run("distance " + csv + " " + csv + " -N 2");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["value"] == 0.0);
  CHECK(j["exact"] == true);
}

TEST_CASE("torus vs wedge: infinite at N = 2, classical matches N = 1") {
  std::string torus = write_complex("torus.json", torus7());
  std::string wedge = write_complex("wedge.json", wedge_fixture());
  auto r2 = run("distance " + torus + " " + wedge + " -N 2");
  REQUIRE(r2.code == 0);
  json j2 = json::parse(r2.out);
  CHECK(j2["value"] == "+inf");
  CHECK(j2["exact"] == true);
  CHECK(j2["lower_bound"] == 0.0);
  auto r1 = run("distance " + torus + " " + wedge + " -N 1");
  auto rc = run("distance " + torus + " " + wedge + " --classical");
  REQUIRE(r1.code == 0);
  CHECK(rc.out == r1.out);
  json j1 = json::parse(r1.out);
  CHECK(j1["value"] == 0.0);
}

TEST_CASE("exact-only exits 3 when only a bound is available") {
  // two path graphs with enough components dying to trip the search cap
  // (cap keeps only nearest-neighbor edges, so the algebra stays small)
  std::ostringstream a, b;
  for (int i = 0; i < 12; ++i) a << i << ",0\n";
  for (int i = 0; i < 13; ++i) b << i * 0.9 << ",0\n";
  std::string pa = write_file("path_a.csv", a.str());
  std::string pb = write_file("path_b.csv", b.str());
  auto r = run("distance " + pa + " " + pb + " -N 2 --exact-only --max-dim 1 --cap 1.2");
  json j = json::parse(r.out);
  if (!j["exact"].get<bool>()) {
    CHECK(r.code == 3);
  } else {
    CHECK(r.code == 0);
  }
}

TEST_CASE("verify passes on a dg algebra fixture and on a complex") {
  std::string heis = write_file("heis.json", dump_dg_algebra(heisenberg_algebra(Field{2})));
  auto r = run("verify " + heis + " -N 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS associativity identity 3") != std::string::npos);
  std::string torus = write_complex("torus.json", torus7());
  auto r2 = run("verify " + torus);
  CHECK(r2.code == 0);
  CHECK(r2.out.find("PASS homology/cohomology duality") != std::string::npos);
}

TEST_CASE("a corrupted dg algebra is rejected with a named identity") {
  json j = json::parse(dump_dg_algebra(heisenberg_algebra(Field{2})));
  // break d^2 = 0 by redirecting a differential entry
  j["d"][0] = j["d"][3];
  std::string broken = write_file("broken.json", j.dump());
  auto r = run("verify " + broken);
  CHECK(r.code != 0);
  CHECK(r.out.find("d") != std::string::npos);
}

TEST_CASE("transfer dump reports the expected basis and operations") {
  std::string torus = write_complex("torus.json", torus7());
  auto r = run("transfer " + torus + " -N 2");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["N"] == 2);
  CHECK(j["basis"].size() == 4);  // Betti numbers 1, 2, 1
  long deg1 = 0;
  for (auto& b : j["basis"])
    if (b["degree"] == 1) ++deg1;
  CHECK(deg1 == 2);
  // the cup product pairs the two degree-1 classes
  bool pairing = false;
  for (auto& e : j["m"]["2"]) {
    auto in = e["inputs"].get<std::vector<int>>();
    if (!e["output"].empty() && j["basis"][in[0]]["degree"] == 1 &&
        j["basis"][in[1]]["degree"] == 1)
      pairing = true;
  }
  CHECK(pairing);
}

TEST_CASE("AINFP_THREADS must be a positive integer when set") {
  std::string csv = write_file("square.csv", "0,0\n1,0\n1,1\n0,1\n");
  auto r = [&] {
    fs::path cap = work_dir() / "capture.txt";
    std::string cmd = "AINFP_THREADS=zero " + cli_path() + " barcode " + csv + " > " +
                      cap.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }();
  CHECK(r == 1);
  auto ok = [&] {
    std::string cmd = "AINFP_THREADS=2 " + cli_path() + " barcode " + csv + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }();
  CHECK(ok == 0);
}
