// End-to-end checks of the cflab binary: exit codes, determinism, file
// round-trips, CSV formats.  The binary path comes from CFLAB_BIN.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli_path() {
#ifdef CFLAB_BIN
  return CFLAB_BIN;
#else
  const char* env = std::getenv("CFLAB_BIN");
  REQUIRE(env != nullptr);
  return env;
#endif
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "cflab_cli_tests";
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args, const fs::path& stdout_file = {},
            bool raw_command = false) {
  std::string cmd = raw_command ? args : "\"" + cli_path() + "\" " + args;
  if (!stdout_file.empty()) {
    cmd += " > \"" + stdout_file.string() + "\"";
  } else {
    cmd += " > /dev/null";
  }
  cmd += " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::string kGaussian = R"('{"kind":"gaussian","mean":0,"sd":1}')";
const std::string kTriangular1 = R"('{"kind":"triangular","a":1}')";

}  // namespace

TEST_CASE("construct writes a pair file and verify round-trips it") {
  const auto dir = scratch_dir();
  const auto pair = dir / "pair.json";
  const int rc = run_cli("construct --density " + kGaussian +
                         " --sigma 1 --alpha -4 --beta 4 --no-timestamp --out " +
                         pair.string());
  CHECK(rc == 0);

  const auto parsed = json::parse(slurp(pair));
  CHECK(parsed.at("rho").get<double>() > 0.0);
  CHECK(parsed.at("bump").at("a").get<double>() == doctest::Approx(-3.14159265358979));

  const auto report = dir / "report.json";
  const int rc2 = run_cli("verify --pair " + pair.string() +
                          " --outside-n 48 --inside-n 48 --nonneg-grid 20000 "
                          "--psd-nodes 24 --no-timestamp --out " +
                          report.string());
  CHECK(rc2 == 0);
  const auto rep = json::parse(slurp(report));
  CHECK(rep.at("all_pass").get<bool>());
}

TEST_CASE("identical configs produce byte-identical reports") {
  const auto dir = scratch_dir();
  const auto out1 = dir / "det1.json";
  const auto out2 = dir / "det2.json";
  const std::string args = "certify --density " + kTriangular1 +
                           " --sigma 3.141592653589793 --no-timestamp --out ";
  CHECK(run_cli(args + out1.string()) == 0);
  CHECK(run_cli(args + out2.string()) == 0);
  const auto text1 = slurp(out1);
  CHECK(!text1.empty());
  CHECK(text1 == slurp(out2));
  // The default (timestamped) report differs from the stable one in the
  // timestamp field only.
  const auto parsed = json::parse(text1);
  CHECK(!parsed.contains("timestamp"));
  const auto out3 = dir / "det3.json";
  CHECK(run_cli("certify --density " + kTriangular1 +
                " --sigma 3.141592653589793 --out " + out3.string()) == 0);
  CHECK(json::parse(slurp(out3)).contains("timestamp"));
}

TEST_CASE("certify reports the triangular certificate") {
  const auto dir = scratch_dir();
  const auto out = dir / "cert.json";
  CHECK(run_cli("certify --density " + kTriangular1 +
                " --sigma 3.141592653589793 --no-timestamp --out " +
                out.string()) == 0);
  const auto cert = json::parse(slurp(out));
  CHECK(cert.at("certificate_found").get<bool>());
  CHECK(cert.at("E_measure").get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hypothesis violations exit with code 2") {
  CHECK(run_cli("construct --density " + kTriangular1 +
                " --sigma 3.14159265 --alpha -0.5 --beta 0.5") == 2);
  CHECK(run_cli("certify --density " + kTriangular1 +
                " --sigma 3.141592653589793 --a 2.5") == 2);
  CHECK(run_cli("construct-boundary --density " +
                std::string(R"('{"kind":"raised_cosine","alpha":0,"sigma":3.141592653589793}')") +
                " --sigma 3.141592653589793 --alpha 0") == 2);
}

TEST_CASE("verification failures exit with code 3") {
  const auto dir = scratch_dir();
  const auto pair = dir / "tampered.json";
  CHECK(run_cli("construct --density " +
                std::string(R"('{"kind":"triangular","a":8}')") +
                " --sigma 3.141592653589793 --alpha -4 --beta 4 "
                "--no-timestamp --out " +
                pair.string()) == 0);
  auto doc = json::parse(slurp(pair));
  doc["rho"] = doc["rho"].get<double>() * 2.0;
  std::ofstream(pair) << doc.dump(2);
  CHECK(run_cli("verify --pair " + pair.string() +
                " --outside-n 24 --inside-n 24 --nonneg-grid 20000 "
                "--psd-nodes 24") == 3);
}

TEST_CASE("malformed density JSON exits with code 1") {
  CHECK(run_cli("construct --density '{\"kind\":\"gaussian\",\"mean\":0}' "
                "--sigma 1 --alpha -4 --beta 4") == 1);
  CHECK(run_cli("construct --density '{not json' --sigma 1 --alpha -4 --beta 4") == 1);
  CHECK(run_cli("certify --density '{\"kind\":\"pareto\"}' --sigma 1") == 1);
}

TEST_CASE("CF_LAB_THREADS does not change results") {
  const auto dir = scratch_dir();
  const auto out1 = dir / "threads1.json";
  const auto out4 = dir / "threads4.json";
  const std::string density =
      R"('{"kind":"half_sine","alpha":0,"sigma":3.141592653589793}')";
  const std::string args = "construct-boundary --density " + density +
                           " --sigma 3.141592653589793 --alpha 0 "
                           "--no-timestamp --out ";
  CHECK(run_cli("env CF_LAB_THREADS=1 \"" + cli_path() + "\" " + args + out1.string(),
                {}, true) == 0);
  CHECK(run_cli("env CF_LAB_THREADS=4 \"" + cli_path() + "\" " + args + out4.string(),
                {}, true) == 0);
  const auto text = slurp(out1);
  CHECK(!text.empty());
  CHECK(text == slurp(out4));
}

TEST_CASE("eval-cf emits the documented CSV header and row count") {
  const auto dir = scratch_dir();
  const auto csv = dir / "cf.csv";
  CHECK(run_cli("eval-cf --density " + kTriangular1 +
                " --t-min -20 --t-max 20 --n 64 --out " + csv.string()) == 0);
  std::ifstream f(csv);
  std::string header;
  std::getline(f, header);
  CHECK(header == "t,re,im,abs");
  std::size_t rows = 0;
  for (std::string line; std::getline(f, line);) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 65);
}

TEST_CASE("bump-table emits x,F,Fprime rows") {
  const auto dir = scratch_dir();
  const auto csv = dir / "bump.csv";
  CHECK(run_cli("bump-table --a 0 --sigma 3.141592653589793 --tau 0.5 "
                "--x-min -1 --x-max 3 --n 32 --out " +
                csv.string()) == 0);
  std::ifstream f(csv);
  std::string header;
  std::getline(f, header);
  CHECK(header == "x,F,Fprime");
  std::size_t rows = 0;
  double mid_f = -1.0;
  for (std::string line; std::getline(f, line);) {
    if (line.empty()) continue;
    ++rows;
    std::istringstream ls(line);
    double x, fv, fp;
    char c1, c2;
    ls >> x >> c1 >> fv >> c2 >> fp;
    if (std::abs(x - 1.0) < 1e-12) mid_f = fv;
  }
  CHECK(rows == 33);
  CHECK(mid_f == doctest::Approx(1.0));
}
