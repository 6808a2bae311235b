#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "fht/cli/commands.hpp"

namespace {

using fht::cli::Command;
using fht::cli::RunConfig;

void add_grid_size(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-n,--n", cfg.n, "grid size (inferred from input files)");
}

void add_weight(CLI::App* sub, RunConfig& cfg) {
  auto* mu = sub->add_option("--mu", cfg.mu, "cosh weight parameter");
  auto* eta = sub->add_option("--eta", cfg.eta, "cos weight parameter, |eta| < pi/4");
  mu->excludes(eta);
}

void add_io(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-i,--input", cfg.input_path, "input CSV (x,value)")->required();
  sub->add_option("-o,--output", cfg.output_path, "output CSV")->required();
  sub->add_option("--reference", cfg.reference_path, "expected output CSV on the output grid");
  sub->add_option("--plot", cfg.plot_path, "SVG plot path");
  add_grid_size(sub, cfg);
}

void add_iteration(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--tol", cfg.tol, "successive-difference tolerance")->capture_default_str();
  sub->add_option("--max-iter", cfg.max_iter, "iteration cap")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Finite Hilbert transform toolkit"};
  app.require_subcommand(1);

  auto* fwd = app.add_subcommand("forward", "FHT of f on T-nodes");
  add_io(fwd, cfg);
  auto* inv = app.add_subcommand("invert", "inverse FHT of F on S-nodes");
  add_io(inv, cfg);

  auto* cfwd = app.add_subcommand("cosh-forward", "weighted FHT of f on T-nodes");
  add_io(cfwd, cfg);
  add_weight(cfwd, cfg);

  auto* cinv = app.add_subcommand("cosh-invert", "invert the weighted FHT");
  add_io(cinv, cfg);
  add_weight(cinv, cfg);
  add_iteration(cinv, cfg);
  const std::map<std::string, fht::cli::Method> methods{
      {"direct", fht::cli::Method::Direct},
      {"neumann", fht::cli::Method::Neumann},
      {"mean_constrained", fht::cli::Method::MeanConstrained}};
  cinv->add_option("--method", cfg.method, "direct | neumann | mean_constrained")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  cinv->add_option("--mean-fbar", cfg.mean_fbar, "(1/2) int k(t) f(t) dt, for mean_constrained");

  auto* ver = app.add_subcommand("verify", "run the property suites");
  add_weight(ver, cfg);
  ver->add_option("-n,--n", cfg.n, "single grid size instead of 64 and 256");
  ver->add_option("-o,--output", cfg.output_path, "JSON summary path");

  auto* sweep = app.add_subcommand("cond-sweep", "condition number against its bound");
  add_grid_size(sweep, cfg);
  sweep->add_option("--mu-list", cfg.mu_list, "comma-separated mu values")->delimiter(',');
  sweep->add_option("-o,--output", cfg.output_path, "CSV path");

  auto* null = app.add_subcommand("null-experiment", "weighted FHT of cos(mu w(t))");
  null->add_option("--mu", cfg.mu, "cosh weight parameter")->required();
  null->add_option("--sizes", cfg.sizes, "comma-separated grid sizes")->delimiter(',');
  null->add_option("-o,--output", cfg.output_path, "CSV path");

  auto* sample = app.add_subcommand("sample", "write test samples as CSV");
  sample->add_option("--function", cfg.function, "unit_circle | shifted | w_u<k>")
      ->capture_default_str();
  const std::map<std::string, fht::cli::SampleSide> sides{{"f", fht::cli::SampleSide::f},
                                                          {"F", fht::cli::SampleSide::F}};
  sample->add_option("--side", cfg.side, "f | F")->transform(CLI::CheckedTransformer(sides));
  const std::map<std::string, fht::cli::SampleSource> sources{
      {"closed_form", fht::cli::SampleSource::ClosedForm},
      {"oracle", fht::cli::SampleSource::Oracle},
      {"spectral", fht::cli::SampleSource::Spectral}};
  sample->add_option("--source", cfg.source, "closed_form | oracle | spectral")
      ->transform(CLI::CheckedTransformer(sources, CLI::ignore_case));
  const std::map<std::string, fht::NodeKind> grids{
      {"T", fht::NodeKind::T}, {"S", fht::NodeKind::S}, {"U", fht::NodeKind::U}};
  sample->add_option("--grid", cfg.grid, "T | S | U")
      ->transform(CLI::CheckedTransformer(grids, CLI::ignore_case));
  sample->add_option("--fine", cfg.fine_n, "spectral source: compute at this size, then downsample");
  sample->add_option("--m-points", cfg.m_points, "oracle panels")->capture_default_str();
  sample->add_option("-o,--output", cfg.output_path, "CSV path")->required();
  add_grid_size(sample, cfg);
  add_weight(sample, cfg);

  auto* figs = app.add_subcommand("figures", "shifted-pair figures as CSV and SVG");
  figs->add_option("--out-dir", cfg.out_dir, "output directory")->capture_default_str();
  figs->add_option("--mu", cfg.mu, "cosh weight parameter (default 3)");
  figs->add_option("--fine", cfg.fine_n, "size of the data-generation grid (default 2n)");
  add_grid_size(figs, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fht::cli::kParameterError;
  }

  const std::map<CLI::App*, Command> commands{
      {fwd, Command::Forward},          {inv, Command::Invert},
      {cfwd, Command::CoshForward},     {cinv, Command::CoshInvert},
      {ver, Command::Verify},           {sweep, Command::CondSweep},
      {null, Command::NullExperiment},  {sample, Command::Sample},
      {figs, Command::Figures}};
  cfg.command = commands.at(app.get_subcommands().front());
  return fht::cli::run_main(cfg, std::cout, std::cerr);
}
