// End-to-end tests of the CLI binary. The binary path is baked in at build
// time (CONCORD_CLI_PATH); the CONCORD_CLI environment variable overrides it.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* cli = std::getenv("CONCORD_CLI");
  if (cli == nullptr) cli = CONCORD_CLI_PATH;
  const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    char tmpl[] = "/tmp/concord-cli-XXXXXX";
    path = mkdtemp(tmpl);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path / name;
    std::ofstream(p) << content;
    return p.string();
  }
};

const char* kLowerT0 =
    R"({"type":"shuffle","shuffle":{"breaks":[0,0.25,0.5,0.75,1],"perm":[4,2,3,1],"flips":[-1,-1,-1,-1]}})";

}  // namespace

TEST_CASE("measure subcommand prints the documented values") {
  TempDir dir;
  const std::string pi = dir.file("Pi.json", R"({"type":"Pi"})");
  const std::string lower = dir.file("B_lower_t0.json", kLowerT0);

  auto r = run("measure --kind rho --copula " + lower);
  CHECK(r.status == 0);
  CHECK(r.out == "-0.8125\n");

  r = run("measure --kind beta --copula " + pi);
  CHECK(r.status == 0);
  CHECK(r.out == "0\n");

  r = run("measure --kind footrule --copula " + lower + " --json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"ok\":true") != std::string::npos);
  CHECK(r.out.find("-0.3125") != std::string::npos);
}

TEST_CASE("eval subcommand") {
  TempDir dir;
  const std::string pi = dir.file("Pi.json", R"({"type":"Pi"})");
  auto r = run("eval --copula " + pi + " --u 0.5 --v 0.5");
  CHECK(r.status == 0);
  CHECK(r.out == "0.25\n");

  r = run("eval --copula " + pi + " --u 1.5 --v 0.5");
  CHECK(r.status == 2);
}

TEST_CASE("bounds subcommand prints shuffle specs and envelope pairs") {
  auto r = run("bounds --t 0 --measure tau");
  CHECK(r.status == 0);
  CHECK(r.out.find("tau [-0.75, 0.75]") != std::string::npos);
  CHECK(r.out.find("\"perm\":[4,2,3,1]") != std::string::npos);
  CHECK(r.out.find("\"perm\":[1,3,2,4]") != std::string::npos);

  r = run("bounds --t 0");
  CHECK(r.out.find("rho [") != std::string::npos);
  CHECK(r.out.find("gamma [") != std::string::npos);
}

TEST_CASE("region subcommand writes artifacts") {
  TempDir dir;
  const std::string csv_path = (dir.path / "tau.csv").string();
  auto r = run("region --measure tau --resolution 3 --format csv --out " + csv_path);
  CHECK(r.status == 0);
  std::ifstream in(csv_path);
  std::string l1, l2, l3, l4;
  std::getline(in, l1);
  std::getline(in, l2);
  std::getline(in, l3);
  std::getline(in, l4);
  CHECK(l1 == "t,lower,upper");
  CHECK(l3 == "0,-0.75,0.75");

  const std::string svg_path = (dir.path / "rho.svg").string();
  r = run("region --measure rho --resolution 51 --format svg --out " + svg_path);
  CHECK(r.status == 0);
  CHECK(fs::file_size(svg_path) > 500);

  r = run("region --measure pearson --resolution 3 --format csv --out " +
          (dir.path / "x.csv").string());
  CHECK(r.status == 2);
}

TEST_CASE("sample subcommand emits deterministic support CSV") {
  TempDir dir;
  const std::string m = dir.file("M.json", R"({"type":"M"})");
  auto r1 = run("sample --copula " + m + " --count 3 --seed 7");
  CHECK(r1.status == 0);
  auto lines_end = r1.out.find('\n');
  CHECK(r1.out.substr(0, lines_end) == "u,v");
  // v equals u on the comonotone support.
  std::size_t pos = lines_end + 1;
  int rows = 0;
  while (pos < r1.out.size()) {
    const auto next = r1.out.find('\n', pos);
    const std::string row = r1.out.substr(pos, next - pos);
    const auto comma = row.find(',');
    CHECK(row.substr(0, comma) == row.substr(comma + 1));
    pos = next + 1;
    ++rows;
  }
  CHECK(rows == 3);

  const auto r2 = run("sample --copula " + m + " --count 3 --seed 7");
  CHECK(r2.out == r1.out);  // byte-identical for identical argv
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("measure --kind rho").status == 2);           // missing --copula
  CHECK(run("measure --kind xi --copula /nonexistent.json").status == 2);
  CHECK(run("nosuchcommand").status == 2);
  TempDir dir;
  const std::string bad = dir.file("bad.json", R"({"type":"M","extra":1})");
  CHECK(run("eval --copula " + bad + " --u 0.1 --v 0.2").status == 2);
}

TEST_CASE("verify subcommand runs the suite end to end") {
  auto r = run("verify --count 200000");
  // Criterion 6 asserts the reflection sign flip for the footrule too, which
  // no statistic with range [-1/2, 1] can satisfy; the suite reports that one
  // line as FAIL (see the footrule note) and exits 1. Everything else passes.
  CHECK(r.status == 1);
  CHECK(r.out.find("PASS   1") != std::string::npos);
  CHECK(r.out.find("PASS   7") != std::string::npos);
  CHECK(r.out.find("PASS  10") != std::string::npos);
  CHECK(r.out.find("FAIL   6") != std::string::npos);
  CHECK(r.out.find("footrule reflection") != std::string::npos);
  int fail_lines = 0;
  for (std::size_t p = r.out.find("FAIL "); p != std::string::npos;
       p = r.out.find("FAIL ", p + 1))
    ++fail_lines;
  CHECK(fail_lines == 1);
}
