#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = extel::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str() const { return path.string(); }
};

int error_code(const std::string& err) { return json::parse(err).at("exit_code").get<int>(); }

}  // namespace

TEST_CASE("help and version") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).out.find(extel::cli::kVersion) != std::string::npos);
}

TEST_CASE("usage errors exit with 2 and a JSON line") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"bogus"}, {"absorb"}, {"fields", "--u", "abc"}, {"--format", "xml", "fields"}}) {
    const auto r = run(args);
    CHECK(r.code == 2);
    CHECK(error_code(r.err) == 2);
  }
}

TEST_CASE("domain errors exit with 3") {
  TempDir dir("extel_cli_domain");
  const auto r = run({"--out", dir.str(), "absorb", "--hw0", "2"});
  CHECK(r.code == 3);
  CHECK(json::parse(r.err).at("message").get<std::string>().find("0 < hw0 < m c^2") !=
        std::string::npos);
  CHECK(run({"--out", dir.str(), "fields", "--u", "1.5"}).code == 3);
  CHECK(run({"--out", dir.str(), "lambshift", "--dE", "0"}).code == 3);
}

TEST_CASE("config and io errors") {
  TempDir dir("extel_cli_config");
  CHECK(run({"--config", (dir.path / "missing").string(), "fields"}).code == 4);
  std::ofstream(dir.path / "bad.cfg") << "mass = 1\n";
  CHECK(run({"--config", (dir.path / "bad.cfg").string(), "fields"}).code == 2);
  std::ofstream(dir.path / "file") << "x";
  CHECK(run({"--out", (dir.path / "file" / "sub").string(), "fields"}).code == 4);
}

TEST_CASE("absorb writes a trace and a manifest") {
  TempDir dir("extel_cli_absorb");
  const auto r = run({"--out", dir.str(), "absorb", "--hw0", "0.25", "--n-max", "3"});
  REQUIRE(r.code == 0);
  const auto csv = slurp(dir.path / "absorb.csv");
  CHECK(csv.rfind("n,E_n,u_n,alpha_n\n0,0.25,0.5,1\n1,0.46650635094610965,", 0) == 0);
  const auto manifest = json::parse(slurp(dir.path / "absorb.manifest.json"));
  CHECK(manifest.at("subcommand") == "absorb");
  CHECK(manifest.at("parameters").at("hw0") == 0.25);
  CHECK(manifest.at("config").at("m") == 1.0);
  CHECK(r.out.find("absorb.csv") != std::string::npos);
}

TEST_CASE("output is deterministic and honours the environment") {
  TempDir a("extel_cli_det_a"), b("extel_cli_det_b");
  REQUIRE(run({"--out", a.str(), "alpha-gamma"}).code == 0);
  setenv(extel::cli::kOutDirEnv, b.str().c_str(), 1);
  REQUIRE(run({"alpha-gamma"}).code == 0);
  unsetenv(extel::cli::kOutDirEnv);
  for (const char* name : {"alpha_gamma.csv", "energy_curves.csv"}) {
    CHECK(slurp(a.path / name) == slurp(b.path / name));
  }
  std::istringstream lines(slurp(a.path / "alpha_gamma.csv"));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 21);
}

TEST_CASE("every subcommand runs") {
  TempDir dir("extel_cli_all");
  std::ofstream(dir.path / "history.json")
      << R"({"steps": [{"phi_step": 1, "delta_kinetic": 0.5, "photon_energy": 0.5}]})";
  const std::vector<std::vector<std::string>> cases{
      {"fields", "--points", "9"},
      {"spin", "--kind", "photon"},
      {"electrostatic", "--history", (dir.path / "history.json").string()},
      {"phase", "--B-steps", "5"},
      {"phase", "--B", "0.3"},
      {"ensemble", "--V", "0.2", "--V", "-0.1", "--V-rfa", "0.3", "--r-points", "65"},
      {"ensemble", "--dim", "radial3d", "--domain-min", "0", "--r-points", "65"},
      {"selfenergy", "--a-points", "4"},
      {"lambshift", "--C", "2", "--dE", "0.5"},
      {"--format", "json", "fields"},
  };
  for (auto args : cases) {
    args.insert(args.begin(), {"--out", dir.str()});
    const auto r = run(args);
    CHECK_MESSAGE(r.code == 0, r.err);
  }
  const auto lamb = json::parse(slurp(dir.path / "lambshift.json"));
  CHECK(lamb.at("W_ns").get<double>() == doctest::Approx(2.0 * std::log(2.0)));
  CHECK(json::parse(slurp(dir.path / "fields.json")).size() == 65);
  CHECK(json::parse(slurp(dir.path / "electrostatic.json")).at("balanced") == true);
}

TEST_CASE("malformed history is a usage error") {
  TempDir dir("extel_cli_history");
  std::ofstream(dir.path / "h.json") << "{not json";
  CHECK(run({"--out", dir.str(), "electrostatic", "--history", (dir.path / "h.json").string()}).code == 2);
  std::ofstream(dir.path / "t.json") << R"({"steps": [{"delta_kinetic": "x"}]})";
  CHECK(run({"--out", dir.str(), "electrostatic", "--history", (dir.path / "t.json").string()}).code == 2);
}
