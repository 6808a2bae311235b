#include "fht/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "fht/cli/csv_io.hpp"
#include "fht/cli/figures.hpp"
#include "fht/cli/svg_plot.hpp"
#include "fht/cli/verify.hpp"
#include "fht/errors.hpp"
#include "fht/fht_spectral.hpp"

namespace fht::cli {

namespace {

using Clock = std::chrono::steady_clock;

/// Abscissae read back from 17-digit CSV match the node cosines exactly;
/// the slack admits hand-written files.
constexpr double kNodeTolerance = 1e-12;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Forward: return "forward";
    case Command::Invert: return "invert";
    case Command::CoshForward: return "cosh-forward";
    case Command::CoshInvert: return "cosh-invert";
    case Command::Verify: return "verify";
    case Command::CondSweep: return "cond-sweep";
    case Command::NullExperiment: return "null-experiment";
    case Command::Sample: return "sample";
    case Command::Figures: return "figures";
  }
  return "?";
}

bool reads_input(Command c) {
  return c == Command::Forward || c == Command::Invert || c == Command::CoshForward ||
         c == Command::CoshInvert;
}

/// Checks that the table's abscissae are the nodes of the expected grid.
Grid checked_grid(const CsvTable& table, NodeKind kind, std::optional<std::size_t> n,
                  const std::filesystem::path& path) {
  const std::size_t rows = table.rows();
  if (n && *n != rows) {
    throw ParseError(rows + 1, path.string() + " has " + std::to_string(rows) +
                                   " rows, expected n = " + std::to_string(*n));
  }
  if (rows < kMinN || rows > kMaxGridSize) {
    throw ParseError(rows + 1, path.string() + ": row count " + std::to_string(rows) +
                                   " outside [" + std::to_string(kMinN) + ", " +
                                   std::to_string(kMaxGridSize) + "]");
  }
  const Grid g(kind, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (std::abs(table.x[i] - g[i]) > kNodeTolerance) {
      throw ParseError(i + 2, "x = " + format_double(table.x[i]) + " is not " +
                                  to_string(kind) + "-node " + std::to_string(i) + " (" +
                                  format_double(g[i]) + ")");
    }
  }
  return g;
}

GridFn read_input(const RunConfig& cfg, NodeKind kind, Role role) {
  const auto table = read_csv(cfg.input_path);
  const Grid g = checked_grid(table, kind, cfg.n, cfg.input_path);
  return GridFn(g, table.value, role);
}

/// Output interpolated to the display grid. `m_density` marks S-node samples
/// of an E_m function (f w is the polynomial).
std::vector<double> uniform_values(const GridFn& out, bool m_density) {
  const auto x = display_grid(out.size());
  switch (out.grid.kind()) {
    case NodeKind::T:
      return resample(sine_coefficients(out), x, ResampleMode::WUSeries);
    case NodeKind::S:
      if (m_density) {
        auto v = resample(m_coefficients(out), x, ResampleMode::TSeries);
        for (std::size_t k = 0; k < x.size(); ++k) v[k] /= weight_w(x[k]);
        return v;
      }
      return resample(t_coefficients(out), x, ResampleMode::TSeries);
    case NodeKind::U:
      break;
  }
  throw GridMismatchError("no display interpolation for U-node output");
}

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

struct Outcome {
  GridFn input;
  GridFn output;
  bool m_density = false;
  std::optional<SolveReport> report;
};

int write_outputs(const RunConfig& cfg, const Outcome& o, Clock::time_point start,
                  std::ostream& log) {
  const std::size_t n = o.output.size();
  const std::size_t first = o.output.grid.kind() == NodeKind::T ? 1 : 0;

  std::optional<std::vector<double>> reference;
  std::optional<double> max_error;
  if (!cfg.reference_path.empty()) {
    const auto table = read_csv(cfg.reference_path);
    checked_grid(table, o.output.grid.kind(), n, cfg.reference_path);
    reference = table.value;
    double worst = 0.0;
    for (std::size_t i = first; i < n; ++i) {
      worst = std::max(worst, std::abs(o.output[i] - (*reference)[i]));
    }
    max_error = worst;
  }

  CsvTable out;
  out.x.assign(o.output.grid.nodes().begin(), o.output.grid.nodes().end());
  out.value = o.output.values;
  out.reference = reference;
  write_csv(cfg.output_path, out);

  const auto xu = display_grid(n);
  const auto vu = uniform_values(o.output, o.m_density);
  write_csv(sibling(cfg.output_path, ".uniform.csv"), CsvTable{xu, vu, std::nullopt});

  if (cfg.plot_path) {
    const std::vector<double> xin(o.input.grid.nodes().begin(), o.input.grid.nodes().end());
    Panel left{"input and output", {{"input", xin, o.input.values}, {"output", out.x, out.value}}};
    Panel right{"output on the display grid", {{"output", xu, vu}}};
    if (reference) {
      std::vector<double> err(n);
      for (std::size_t i = 0; i < n; ++i) err[i] = i < first ? 0.0 : o.output[i] - (*reference)[i];
      right = Panel{"pointwise error", {{"output - reference", out.x, err}}};
    }
    write_svg(*cfg.plot_path, command_name(cfg.command), left, right);
  }

  const auto p = weight_param(cfg);
  nlohmann::json j{{"command", command_name(cfg.command)},
                   {"n", n},
                   {"mu_or_eta", p ? nlohmann::json(p->value()) : nlohmann::json(nullptr)},
                   {"iterations", nullptr},
                   {"residual_history", nlohmann::json::array()},
                   {"measured_ratio", nullptr},
                   {"bound_ratio", nullptr},
                   {"coercive_const", nullptr},
                   {"max_error", optional_number(max_error)},
                   {"wall_time_ms", elapsed_ms(start)}};
  if (o.report) {
    j["iterations"] = o.report->iterations;
    j["residual_history"] = o.report->residual_history;
    j["measured_ratio"] = o.report->measured_ratio;
    j["bound_ratio"] = o.report->bound_ratio;
    j["coercive_const"] = o.report->coercive_const;
  }
  std::ofstream js(sibling(cfg.output_path, ".json"));
  if (!js) throw InputError("cannot write report beside " + cfg.output_path.string());
  js << j.dump(2) << '\n';

  log << command_name(cfg.command) << ": n = " << n << ", wrote " << cfg.output_path.string();
  if (max_error) log << ", max error " << format_double(*max_error);
  log << '\n';
  if (o.report && !o.report->converged) {
    log << "not converged after " << o.report->iterations << " iterations\n";
    return kNotConverged;
  }
  return kOk;
}

int run_transform(const RunConfig& cfg, std::ostream& log) {
  const auto start = Clock::now();
  switch (cfg.command) {
    case Command::Forward: {
      auto f = read_input(cfg, NodeKind::T, Role::Plain);
      auto F = fht_forward_d(f);
      return write_outputs(cfg, Outcome{std::move(f), std::move(F), false, std::nullopt}, start, log);
    }
    case Command::Invert: {
      auto F = read_input(cfg, NodeKind::S, Role::Transform);
      auto f = fht_inverse_d(F);
      return write_outputs(cfg, Outcome{std::move(F), std::move(f), false, std::nullopt}, start, log);
    }
    case Command::CoshForward: {
      auto f = read_input(cfg, NodeKind::T, Role::Plain);
      auto F = cosh_forward(f, *weight_param(cfg));
      return write_outputs(cfg, Outcome{std::move(f), std::move(F), false, std::nullopt}, start, log);
    }
    default:
      break;
  }
  const auto p = *weight_param(cfg);
  if (cfg.method == Method::MeanConstrained) {
    auto F = read_input(cfg, NodeKind::U, Role::Transform);
    auto sol = cosh_invert_mean_constrained(F, p, *cfg.mean_fbar, cfg.tol, cfg.max_iter);
    return write_outputs(cfg, Outcome{std::move(F), std::move(sol.f), true, std::move(sol.report)},
                         start, log);
  }
  auto F = read_input(cfg, NodeKind::S, Role::Transform);
  auto sol = cfg.method == Method::Direct ? cosh_invert_direct(F, p)
                                          : cosh_invert_neumann(F, p, cfg.tol, cfg.max_iter);
  return write_outputs(cfg, Outcome{std::move(F), std::move(sol.f), false, std::move(sol.report)},
                       start, log);
}

int run_verify_cmd(const RunConfig& cfg, std::ostream& log) {
  VerifyOptions opts;
  if (cfg.n) opts.sizes = {*cfg.n};
  opts.extra = weight_param(cfg);
  const auto summary = run_verify(opts, &log);
  if (!cfg.output_path.empty()) {
    std::ofstream out(cfg.output_path);
    if (!out) throw InputError("cannot write " + cfg.output_path.string());
    out << summary_json(summary) << '\n';
  }
  const auto failed = std::count_if(summary.results.begin(), summary.results.end(),
                                    [](const auto& r) { return !r.pass; });
  log << summary.results.size() - failed << "/" << summary.results.size()
      << " properties passed in " << format_double(std::round(summary.wall_time_ms)) << " ms\n";
  return failed == 0 ? kOk : kVerifyFailed;
}

int run_cond_sweep(const RunConfig& cfg, std::ostream& log) {
  const std::size_t n = cfg.n.value_or(kDefaultN);
  const auto mus = cfg.mu_list.empty() ? std::vector<double>{0, 1, 2, 3, 4} : cfg.mu_list;
  std::vector<double> m, measured, bound;
  log << "mu,measured,bound\n";
  for (double mu : mus) {
    const auto c = condition_estimate(WeightParam::cosh(mu), n);
    m.push_back(mu);
    measured.push_back(c.measured);
    bound.push_back(c.bound);
    log << format_double(mu) << ',' << format_double(c.measured) << ','
        << format_double(c.bound) << '\n';
  }
  if (!cfg.output_path.empty()) {
    write_columns(cfg.output_path, {"mu", "measured", "bound"}, {m, measured, bound});
  }
  return kOk;
}

int run_null(const RunConfig& cfg, std::ostream& log) {
  const auto sizes = cfg.sizes.empty() ? std::vector<std::size_t>{64, 128, 256, 512} : cfg.sizes;
  const auto rows = null_experiment(*weight_param(cfg), sizes);
  std::vector<double> n, ld, lm;
  log << "n,norm_ld,norm_lm\n";
  for (const auto& r : rows) {
    n.push_back(static_cast<double>(r.n));
    ld.push_back(r.norm_ld);
    lm.push_back(r.norm_lm);
    log << r.n << ',' << format_double(r.norm_ld) << ',' << format_double(r.norm_lm) << '\n';
  }
  if (!cfg.output_path.empty()) write_columns(cfg.output_path, {"n", "norm_ld", "norm_lm"}, {n, ld, lm});
  return kOk;
}

int run_sample(const RunConfig& cfg, std::ostream& log) {
  const auto fn = named_function(cfg.function);
  const std::size_t n = cfg.n.value_or(kDefaultN);
  const Grid g(cfg.grid, n);
  const auto p = weight_param(cfg).value_or(WeightParam::cosh(0.0));
  GridFn out(g, std::vector<double>(n));
  if (cfg.side == SampleSide::f) {
    out = GridFn::sample(g, fn.f);
  } else if (cfg.source == SampleSource::ClosedForm) {
    out = GridFn::sample(g, *fn.F, Role::Transform);
  } else if (cfg.source == SampleSource::Oracle) {
    const Evaluator ev{fn.f, fn.kinks};
    out = GridFn::sample(
        g, [&](double s) { return cosh_pv_forward(ev, s, p, cfg.m_points).value; },
        Role::Transform);
  } else {
    out = downsampled_cosh_data(fn.f, n, cfg.fine_n.value_or(n), p);
  }
  write_csv(cfg.output_path,
            CsvTable{std::vector<double>(g.nodes().begin(), g.nodes().end()), out.values,
                     std::nullopt});
  log << "sample: " << fn.name << " on " << n << " " << to_string(cfg.grid) << "-nodes, wrote "
      << cfg.output_path.string() << '\n';
  if (weight_param(cfg)) {
    const double fbar =
        0.5 * regular_integral([&](double t) { return p.weight(t) * fn.f(t); }, cfg.m_points);
    log << "mean_fbar " << format_double(fbar) << '\n';
  }
  return kOk;
}

int run_figures(const RunConfig& cfg, std::ostream& log) {
  const std::size_t n = cfg.n.value_or(kDefaultN);
  const std::size_t fine = cfg.fine_n.value_or(2 * n);
  const double mu = cfg.mu.value_or(3.0);
  std::filesystem::create_directories(cfg.out_dir);
  figure1(n, fine, mu, cfg.out_dir);
  const auto f2 = figure2(n, cfg.out_dir);
  const auto f3 = figure3(n, fine, mu, cfg.out_dir);
  log << "fig2 relative L_m error " << format_double(f2.relative_error) << '\n';
  log << "fig3 relative L_m error " << format_double(f3.relative_error) << '\n';
  log << "wrote fig1-3 .csv/.svg to " << cfg.out_dir.string() << '\n';
  return kOk;
}

}  // namespace

std::filesystem::path sibling(const std::filesystem::path& output, const std::string& suffix) {
  return output.parent_path() / (output.stem().string() + suffix);
}

NamedFunction named_function(const std::string& name) {
  if (name.rfind("w_u", 0) == 0) {
    int k = -1;
    try {
      std::size_t used = 0;
      k = std::stoi(name.substr(3), &used);
      if (used != name.size() - 3) k = -1;
    } catch (const std::exception&) {
      k = -1;
    }
    if (k < 0 || k >= kMaxDegree) throw ParameterError("bad function name '" + name + "'");
    return NamedFunction{
        name, [k](double x) { return weight_w(x) * cheb_eval(Basis::SecondKindU, k, x); },
        RealFn([k](double x) { return cheb_eval(Basis::FirstKindT, k + 1, x); }), {}};
  }
  const auto pr = pair(name);
  return NamedFunction{pr.name, pr.f, pr.F, pr.kinks};
}

std::optional<WeightParam> weight_param(const RunConfig& cfg) {
  if (cfg.mu) return WeightParam::cosh(*cfg.mu);
  if (cfg.eta) return WeightParam::cos(*cfg.eta);
  return std::nullopt;
}

void validate(const RunConfig& cfg) {
  const auto fail = [](const std::string& msg) { throw ParameterError(msg); };
  if (cfg.n && (*cfg.n < kMinN || *cfg.n > kMaxGridSize)) {
    fail("--n must lie in [" + std::to_string(kMinN) + ", " + std::to_string(kMaxGridSize) + "]");
  }
  if (cfg.mu && cfg.eta) fail("set at most one of --mu and --eta");
  weight_param(cfg);
  if (!(cfg.tol > 0.0)) fail("--tol must be positive");
  if (cfg.max_iter == 0) fail("--max-iter must be positive");
  if (cfg.m_points < kMinOraclePoints) fail("--m-points must be at least 64");
  if (cfg.fine_n && (*cfg.fine_n < kMinN || *cfg.fine_n > kMaxGridSize)) fail("--fine out of range");

  const bool weighted = cfg.mu || cfg.eta;
  const bool mean_method = cfg.command == Command::CoshInvert && cfg.method == Method::MeanConstrained;
  if (mean_method != cfg.mean_fbar.has_value()) {
    fail("--mean-fbar is required with, and only with, --method mean_constrained");
  }
  switch (cfg.command) {
    case Command::Forward:
    case Command::Invert:
      if (weighted) fail("forward/invert take no weight; use cosh-forward/cosh-invert");
      break;
    case Command::CoshForward:
    case Command::CoshInvert:
      if (!weighted) fail("set exactly one of --mu and --eta");
      break;
    case Command::CondSweep:
      if (weighted) fail("cond-sweep takes --mu-list");
      break;
    case Command::NullExperiment:
      if (!cfg.mu || cfg.eta || *cfg.mu == 0.0) fail("null-experiment needs a nonzero --mu");
      break;
    case Command::Figures:
      if (cfg.eta) fail("figures take --mu only");
      break;
    case Command::Sample: {
      if (cfg.output_path.empty()) fail("sample needs --output");
      if (cfg.side == SampleSide::f && cfg.source != SampleSource::ClosedForm) {
        fail("samples of f are always closed-form");
      }
      if (cfg.side == SampleSide::F && cfg.source == SampleSource::ClosedForm) {
        if (weighted) fail("no closed form for the weighted transform; use --source oracle|spectral");
        if (!named_function(cfg.function).F) fail("no closed-form transform for " + cfg.function);
        if (cfg.grid == NodeKind::T) fail("transform samples live on S- or U-nodes");
      }
      if (cfg.source == SampleSource::Oracle && cfg.grid == NodeKind::T) {
        fail("oracle samples live on S- or U-nodes");
      }
      if (cfg.source == SampleSource::Spectral && cfg.grid != NodeKind::S) {
        fail("spectral samples live on S-nodes");
      }
      named_function(cfg.function);
      break;
    }
    case Command::Verify:
      break;
  }
  if (reads_input(cfg.command) && (cfg.input_path.empty() || cfg.output_path.empty())) {
    fail("--input and --output are required");
  }
}

int run(const RunConfig& cfg, std::ostream& log) {
  validate(cfg);
  switch (cfg.command) {
    case Command::Verify: return run_verify_cmd(cfg, log);
    case Command::CondSweep: return run_cond_sweep(cfg, log);
    case Command::NullExperiment: return run_null(cfg, log);
    case Command::Sample: return run_sample(cfg, log);
    case Command::Figures: return run_figures(cfg, log);
    default: return run_transform(cfg, log);
  }
}

int run_main(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  try {
    return run(cfg, log);
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kParameterError;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const GridMismatchError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidSizeError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kParameterError;
  }
}

}  // namespace fht::cli
