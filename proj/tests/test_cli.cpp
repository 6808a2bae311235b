#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "fht/cli/commands.hpp"
#include "fht/cli/csv_io.hpp"
#include "fht/cli/svg_plot.hpp"
#include "fht/errors.hpp"

using namespace fht;
using namespace fht::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("fht_cli_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

int quiet_run(const RunConfig& cfg) {
  std::ostringstream log, err;
  return run_main(cfg, log, err);
}

}  // namespace

TEST_CASE("CSV round trip is lossless") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  CsvTable t;
  for (int i = 0; i < 200; ++i) {
    t.x.push_back(dist(rng));
    t.value.push_back(dist(rng) * 1e-9);
  }
  t.x.push_back(5e-324);
  t.value.push_back(-0.0);
  t.reference = t.x;
  std::stringstream buf;
  write_csv(buf, t);
  const auto back = parse_csv(buf);
  CHECK(back.x == t.x);
  CHECK(back.value == t.value);
  REQUIRE(back.reference);
  CHECK(*back.reference == *t.reference);
}

TEST_CASE("CSV parse errors carry line numbers") {
  const auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_csv(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("a,b\n1,2\n") == 1);
  CHECK(line_of("x,value\n1,2\n3\n") == 3);
  CHECK(line_of("x,value\n1,2\n3,4,5\n") == 3);
  CHECK(line_of("x,value\n1,2\n0.5,1e\n") == 3);
  CHECK(line_of("x,value,reference\n1,2,3\n1,2\n") == 3);
  CHECK(line_of("x,value\r\n1,2\r\n\n") == 0);
}

TEST_CASE("SVG is a fixed 800x500 two-panel document") {
  const Series a{"a", {0, 1, 2}, {1, 4, 9}};
  const Series flat{"flat", {0, 1}, {2, 2}};
  const auto svg = render_svg("t <1>", Panel{"left", {a}}, Panel{"right", {flat}});
  CHECK(svg.find("width=\"800\" height=\"500\"") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("t &lt;1&gt;") != std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);
}

TEST_CASE("forward on the shipped shifted-pair data") {
  TempDir dir;
  RunConfig cfg;
  cfg.command = Command::Forward;
  cfg.input_path = fs::path(FHT_DATA_DIR) / "shifted_f_T256.csv";
  cfg.reference_path = fs::path(FHT_DATA_DIR) / "shifted_F_S256.csv";
  cfg.output_path = dir.path / "F.csv";
  cfg.plot_path = dir.path / "F.svg";
  REQUIRE(quiet_run(cfg) == kOk);

  const auto out = read_csv(cfg.output_path);
  CHECK(out.rows() == 256);
  REQUIRE(out.reference);
  const auto report = read_json(dir.path / "F.json");
  for (const char* key : {"command", "n", "mu_or_eta", "iterations", "residual_history",
                          "measured_ratio", "bound_ratio", "coercive_const", "max_error",
                          "wall_time_ms"}) {
    CHECK(report.contains(key));
  }
  CHECK(report["command"] == "forward");
  CHECK(report["n"] == 256);
  const double max_error = report["max_error"];
  CHECK(max_error < 2e-2);
  CHECK(fs::exists(dir.path / "F.uniform.csv"));
  CHECK(fs::exists(dir.path / "F.svg"));
  CHECK(read_csv(dir.path / "F.uniform.csv").rows() == 256);
}

TEST_CASE("invert annihilates a constant") {
  TempDir dir;
  const Grid s(NodeKind::S, 32);
  write_csv(dir.path / "one.csv",
            CsvTable{{s.nodes().begin(), s.nodes().end()}, std::vector<double>(32, 1.0), std::nullopt});
  RunConfig cfg;
  cfg.command = Command::Invert;
  cfg.input_path = dir.path / "one.csv";
  cfg.output_path = dir.path / "f.csv";
  REQUIRE(quiet_run(cfg) == kOk);
  for (double v : read_csv(cfg.output_path).value) CHECK(std::abs(v) < 1e-13);
}

TEST_CASE("weighted inversion workflow and exit codes") {
  TempDir dir;
  RunConfig gen;
  gen.command = Command::Sample;
  gen.side = SampleSide::F;
  gen.source = SampleSource::Spectral;
  gen.grid = NodeKind::S;
  gen.mu = 3.0;
  gen.fine_n = 512;
  gen.output_path = dir.path / "Fmu.csv";
  REQUIRE(quiet_run(gen) == kOk);

  RunConfig inv;
  inv.command = Command::CoshInvert;
  inv.mu = 3.0;
  inv.input_path = gen.output_path;
  inv.reference_path = fs::path(FHT_DATA_DIR) / "shifted_f_T256.csv";
  inv.output_path = dir.path / "f.csv";
  CHECK(quiet_run(inv) == kOk);
  const auto report = read_json(dir.path / "f.json");
  CHECK(report["mu_or_eta"] == 3.0);
  CHECK(double(report["max_error"]) < 1e-3);

  inv.method = Method::Neumann;
  inv.max_iter = 3;
  inv.output_path = dir.path / "g.csv";
  CHECK(quiet_run(inv) == kNotConverged);
  const auto partial = read_json(dir.path / "g.json");
  CHECK(partial["iterations"] == 3);
  CHECK(partial["residual_history"].size() == 3);

  inv.method = Method::MeanConstrained;
  CHECK(quiet_run(inv) == kParameterError);

  inv.method = Method::Direct;
  inv.mean_fbar = 1.0;
  CHECK(quiet_run(inv) == kParameterError);

  inv.mean_fbar.reset();
  inv.n = 128;
  CHECK(quiet_run(inv) == kInputError);

  inv.n.reset();
  inv.mu.reset();
  inv.eta = 0.9;
  CHECK(quiet_run(inv) == kParameterError);

  inv.eta.reset();
  CHECK(quiet_run(inv) == kParameterError);

  inv.mu = 3.0;
  inv.input_path = dir.path / "missing.csv";
  CHECK(quiet_run(inv) == kInputError);
}

TEST_CASE("input abscissae must be the expected nodes") {
  TempDir dir;
  const Grid t(NodeKind::T, 16);
  write_csv(dir.path / "f.csv",
            CsvTable{{t.nodes().begin(), t.nodes().end()}, std::vector<double>(16, 0.0), std::nullopt});
  RunConfig cfg;
  cfg.command = Command::Invert;
  cfg.input_path = dir.path / "f.csv";
  cfg.output_path = dir.path / "out.csv";
  std::ostringstream log, err;
  CHECK(run_main(cfg, log, err) == kInputError);
  CHECK(err.str().find("line 2") != std::string::npos);
}

TEST_CASE("mean-constrained command") {
  TempDir dir;
  RunConfig gen;
  gen.command = Command::Sample;
  gen.function = "w_u1";
  gen.side = SampleSide::F;
  gen.source = SampleSource::Oracle;
  gen.grid = NodeKind::U;
  gen.mu = 0.5;
  gen.n = 32;
  gen.output_path = dir.path / "F.csv";
  REQUIRE(quiet_run(gen) == kOk);

  RunConfig inv;
  inv.command = Command::CoshInvert;
  inv.method = Method::MeanConstrained;
  inv.mean_fbar = 0.0;
  inv.mu = 0.5;
  inv.input_path = gen.output_path;
  inv.output_path = dir.path / "f.csv";
  REQUIRE(quiet_run(inv) == kOk);
  const auto out = read_csv(inv.output_path);
  const Grid s(NodeKind::S, 32);
  for (std::size_t m = 0; m < 32; ++m) {
    CHECK(out.x[m] == s[m]);
    CHECK(std::abs(out.value[m] - 2 * s[m] * weight_w(s[m])) < 1e-6);
  }
}

TEST_CASE("condition sweep and null experiment tables") {
  TempDir dir;
  RunConfig sweep;
  sweep.command = Command::CondSweep;
  sweep.mu_list = {0.0, 3.0, 4.0};
  sweep.output_path = dir.path / "sweep.csv";
  REQUIRE(quiet_run(sweep) == kOk);
  std::ifstream in(sweep.output_path);
  std::string header, row0, row1, row2;
  std::getline(in, header);
  std::getline(in, row0);
  std::getline(in, row1);
  std::getline(in, row2);
  CHECK(header == "mu,measured,bound");
  CHECK(row0 == "0,1,1");
  CHECK(row2.rfind("4,", 0) == 0);
  CHECK(row2.find(",1490.4791") != std::string::npos);

  RunConfig null;
  null.command = Command::NullExperiment;
  null.mu = 3.0;
  null.output_path = dir.path / "null.csv";
  REQUIRE(quiet_run(null) == kOk);
  std::ifstream nin(null.output_path);
  std::string line;
  std::getline(nin, line);
  CHECK(line == "n,norm_ld,norm_lm");
  int rows = 0;
  while (std::getline(nin, line)) ++rows;
  CHECK(rows == 4);

  null.mu = 0.0;
  CHECK(quiet_run(null) == kParameterError);
}

TEST_CASE("sample validation") {
  RunConfig cfg;
  cfg.command = Command::Sample;
  cfg.output_path = "unused.csv";
  cfg.function = "nope";
  CHECK(quiet_run(cfg) == kParameterError);
  cfg.function = "shifted";
  cfg.side = SampleSide::F;
  cfg.grid = NodeKind::T;
  CHECK(quiet_run(cfg) == kParameterError);
  cfg.grid = NodeKind::S;
  cfg.mu = 1.0;
  CHECK(quiet_run(cfg) == kParameterError);
  CHECK(named_function("w_u3").F.has_value());
  CHECK_THROWS_AS(named_function("w_u"), ParameterError);
}

TEST_CASE("verify rejects eta outside the contraction range") {
  RunConfig cfg;
  cfg.command = Command::Verify;
  cfg.eta = 0.9;
  CHECK(quiet_run(cfg) == kParameterError);
}
