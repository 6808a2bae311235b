#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fht/cheb_core.hpp"
#include "fht/cosh_solver.hpp"
#include "fht/pv_oracle.hpp"
#include "fht/weight_param.hpp"

namespace fht::cli {

/// Process exit statuses; stable contract.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kNotConverged = 2,
  kInputError = 3,
  kParameterError = 4,
};

enum class Command {
  Forward,
  Invert,
  CoshForward,
  CoshInvert,
  Verify,
  CondSweep,
  NullExperiment,
  Sample,
  Figures,
};

enum class Method { Direct, Neumann, MeanConstrained };

/// Which side of a transform pair `sample` writes, and how F is obtained.
enum class SampleSide { f, F };
enum class SampleSource { ClosedForm, Oracle, Spectral };

inline constexpr std::size_t kDefaultN = 256;
inline constexpr std::size_t kMinN = 8;

struct RunConfig {
  Command command = Command::Verify;
  /// Grid size; inferred from the row count when reading an input file.
  std::optional<std::size_t> n;
  std::optional<double> mu;
  std::optional<double> eta;
  double tol = 1e-10;
  std::size_t max_iter = 10000;
  std::filesystem::path input_path;
  std::filesystem::path output_path;
  std::filesystem::path reference_path;
  std::optional<std::filesystem::path> plot_path;
  Method method = Method::Direct;
  std::optional<double> mean_fbar;

  std::string function = "shifted";
  SampleSide side = SampleSide::f;
  SampleSource source = SampleSource::ClosedForm;
  NodeKind grid = NodeKind::T;
  std::optional<std::size_t> fine_n;
  std::size_t m_points = 8192;

  std::vector<double> mu_list;
  std::vector<std::size_t> sizes;
  std::filesystem::path out_dir = ".";
};

/// Throws ParameterError when the flag combination violates RunConfig's
/// invariants for its command.
void validate(const RunConfig& cfg);

/// The weight parameter from --mu or --eta, if either is set.
std::optional<WeightParam> weight_param(const RunConfig& cfg);

/// Runs one command; progress and tables go to `log`. Library exceptions
/// propagate; run_main maps them to exit codes.
int run(const RunConfig& cfg, std::ostream& log);

/// run() with exceptions mapped to ExitCode and reported on `err`.
int run_main(const RunConfig& cfg, std::ostream& log, std::ostream& err);

/// Test function by name: "unit_circle", "shifted", or "w_u<k>" (w U_k).
struct NamedFunction {
  std::string name;
  RealFn f;
  /// Closed-form unweighted transform, when known.
  std::optional<RealFn> F;
  std::vector<double> kinks;
};

NamedFunction named_function(const std::string& name);

/// `stem.json` / `stem.uniform.csv` beside the main output.
std::filesystem::path sibling(const std::filesystem::path& output, const std::string& suffix);

}  // namespace fht::cli
