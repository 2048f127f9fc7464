#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "diamondlab/catalog.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "diamondlab");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = diamondlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("diamondlab-test-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("verify theorem") {
  const auto r = run({"verify", "theorem"});
  REQUIRE(r.code == 0);
  const auto j = diamondlab::Json::parse(r.out);
  CHECK(j["passed"].get<bool>());
  CHECK(j["theorem"]["total"] == 840);
  CHECK(j["failures"].empty());
}

TEST_CASE("verify geometry reports the orthogonality census") {
  const auto r = run({"verify", "geometry"});
  REQUIRE(r.code == 0);
  const auto g = diamondlab::Json::parse(r.out)["geometry"];
  CHECK(g["classes"] == 35);
  CHECK(g["class_size"] == 24);
  CHECK(g["points_appearing"] == 15);
  CHECK(g["orthogonality"]["pairs"] == 595);
  CHECK(g["orthogonality"]["orthogonal_and_skew"] == 280);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"verify", "everything"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"census", "cuts", "--definition", "Mostly"}).code == 2);
  TempDir dir("usage");
  const auto svg = (dir.path / "x.svg").string();
  CHECK(run({"render", "--subject", "pattern", "--input", "3134", "--out", svg}).code == 2);
  CHECK(run({"render", "--subject", "poster", "--input", "all", "--out", svg}).code == 2);
  CHECK_FALSE(fs::exists(svg));
}

TEST_CASE("corrupted Golay data fails verification") {
  TempDir dir("golay");
  std::ifstream in(DIAMONDLAB_DATA_DIR "/golay_mog.txt");
  std::string text;
  std::string line;
  bool flipped = false;
  while (std::getline(in, line)) {
    if (!flipped && !line.empty() && line[0] != '#') {
      line[5] = line[5] == '0' ? '1' : '0';
      flipped = true;
    }
    text += line + "\n";
  }
  const auto path = dir.path / "bad.txt";
  std::ofstream(path) << text;
  const auto r = run({"verify", "all", "--golay-data", path.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("FAIL [mog]") != std::string::npos);
  CHECK(run({"verify", "mog", "--golay-data", (dir.path / "missing.txt").string()}).code == 1);
}

TEST_CASE("render") {
  TempDir dir("render");
  const auto a = dir.path / "d.svg";
  const auto b = dir.path / "d2.svg";
  REQUIRE(run({"render", "--subject", "pattern", "--input", "3131020231310202", "--out", a.string()}).code == 0);
  REQUIRE(run({"render", "--subject", "pattern", "--input", "3131020231310202", "--out", b.string()}).code == 0);
  const auto svg = slurp(a);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "<polygon") == 16);
  CHECK(svg == slurp(b));

  const auto sheet = dir.path / "points.svg";
  REQUIRE(run({"render", "--subject", "diagram", "--input", "all", "--out", sheet.string()}).code == 0);
  CHECK(count(slurp(sheet), "<g id=\"point-") == 15);

  for (const auto* subject : {"structure-plate", "orbit-sheet", "mog-sheet"}) {
    const auto p = dir.path / (std::string(subject) + ".svg");
    REQUIRE(run({"render", "--subject", subject, "--input", "all", "--out", p.string()}).code == 0);
    CHECK(fs::file_size(p) > 0);
  }
}

TEST_CASE("export is complete and reproducible") {
  TempDir one("export1");
  TempDir two("export2");
  REQUIRE(run({"export", "--out", one.path.string()}).code == 0);
  REQUIRE(run({"export", "--out", two.path.string()}).code == 0);
  const std::vector<std::string> files{"orbit.json",          "structures.json",     "reports/group.json",
                                       "reports/theorem.json", "reports/geometry.json", "reports/orthogonality.json",
                                       "reports/ring.json",    "reports/mog.json"};
  for (const auto& f : files) {
    REQUIRE(fs::exists(one.path / f));
    CHECK(slurp(one.path / f) == slurp(two.path / f));
    CHECK(diamondlab::Json::parse(slurp(one.path / f))["schema_version"] == diamondlab::kSchemaVersion);
  }
  const auto orbit = diamondlab::Json::parse(slurp(one.path / "orbit.json"));
  CHECK(orbit["patterns"].size() == 840);
  const auto structures = diamondlab::Json::parse(slurp(one.path / "structures.json"))["structures"];
  CHECK(structures.size() == 35);
  const auto& codes = orbit["patterns"];
  for (const auto& rec : structures) {
    CHECK(rec["patterns"].size() == 24);
    CHECK(rec["four_partition"].size() == 4);
    for (const auto& code : rec["patterns"]) {
      REQUIRE(std::find(codes.begin(), codes.end(), code) != codes.end());
    }
  }
}

TEST_CASE("census cuts") {
  const auto r = run({"census", "cuts", "--definition", "all"});
  REQUIRE(r.code == 0);
  const auto j = diamondlab::Json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["count"] == 16384);
  const auto one = run({"census", "cuts", "--definition", "AllMatch"});
  REQUIRE(one.code == 0);
  CHECK(diamondlab::Json::parse(one.out)["count"] == 256);
}

TEST_CASE("closure cap from the environment") {
  ::setenv("DIAMONDLAB_CAP", "1000", 1);
  const auto r = run({"verify", "group"});
  ::setenv("DIAMONDLAB_CAP", "nonsense", 1);
  const auto bad = run({"verify", "group"});
  ::unsetenv("DIAMONDLAB_CAP");
  CHECK(r.code == 1);
  CHECK(bad.code == 2);
}
