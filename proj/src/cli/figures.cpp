#include "fht/cli/figures.hpp"

#include <cmath>
#include <string>

#include "fht/cli/csv_io.hpp"
#include "fht/cli/svg_plot.hpp"
#include "fht/cosh_solver.hpp"
#include "fht/fht_spectral.hpp"

namespace fht::cli {

namespace {

std::vector<double> on_display(const GridFn& f_t) {
  const auto x = display_grid(f_t.size());
  return resample(sine_coefficients(f_t), x, ResampleMode::WUSeries);
}

std::vector<double> transform_on_display(const GridFn& F_s) {
  const auto x = display_grid(F_s.size());
  return resample(t_coefficients(F_s), x, ResampleMode::TSeries);
}

RecoveryResult emit_recovery(const std::string& stem, const std::string& title, GridFn original,
                             GridFn recovered, const std::filesystem::path& out_dir) {
  const auto x = display_grid(original.size());
  std::vector<double> f(x.size());
  const auto& shifted = pair("shifted");
  for (std::size_t k = 0; k < x.size(); ++k) f[k] = shifted.f(x[k]);
  const auto inv = on_display(recovered);
  std::vector<double> err(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) err[k] = inv[k] - f[k];

  RecoveryResult r{std::move(original), std::move(recovered), 0.0, out_dir / (stem + ".csv"),
                   out_dir / (stem + ".svg")};
  r.relative_error = relative_lm_error(r.recovered, r.original);
  write_columns(r.csv, {"x", "f", "f_inverted", "error"}, {x, f, inv, err});
  write_svg(r.svg, title,
            Panel{"original and inverted f(t)", {{"original", x, f}, {"inverted", x, inv}}},
            Panel{"error of inverted f(t)", {{"inverted - original", x, err}}});
  return r;
}

}  // namespace

double relative_lm_error(const GridFn& a, const GridFn& b) {
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a[i] - b[i];
  return norm(GridFn(a.grid, std::move(d)), Space::Lm2) / norm(b, Space::Lm2);
}

GridFn downsampled_cosh_data(const RealFn& f, std::size_t n, std::size_t fine_n,
                             const WeightParam& p) {
  const Grid fine(NodeKind::T, fine_n);
  const auto F_fine = cosh_forward(GridFn::sample(fine, f), p);
  std::vector<double> tilde(fine_n);
  for (std::size_t m = 0; m < fine_n; ++m) tilde[m] = F_fine[m] / p.weight(F_fine.grid[m]);
  auto coarse = downsample(GridFn(F_fine.grid, std::move(tilde)), n);
  for (std::size_t m = 0; m < n; ++m) coarse.values[m] *= p.weight(coarse.grid[m]);
  coarse.role = Role::Transform;
  return coarse;
}

void figure1(std::size_t n, std::size_t fine_n, double mu, const std::filesystem::path& out_dir) {
  const auto shifted = pair("shifted");
  const auto p = WeightParam::cosh(mu);
  const auto x = display_grid(n);
  std::vector<double> f(n), F(n);
  for (std::size_t k = 0; k < n; ++k) {
    f[k] = shifted.f(x[k]);
    F[k] = shifted.F(x[k]);
  }
  auto data = downsampled_cosh_data(shifted.f, n, fine_n, p);
  for (std::size_t m = 0; m < n; ++m) data.values[m] /= p.weight(data.grid[m]);
  const auto tilde = transform_on_display(data);
  write_columns(out_dir / "fig1.csv", {"x", "f", "F", "F_tilde_mu"}, {x, f, F, tilde});
  write_svg(out_dir / "fig1.svg", "Shifted pair, mu = " + std::to_string(mu).substr(0, 4),
            Panel{"original f(t)", {{"f", x, f}}},
            Panel{"F(s) and F~_mu(s)", {{"F", x, F}, {"F~_mu", x, tilde}}});
}

RecoveryResult figure2(std::size_t n, const std::filesystem::path& out_dir) {
  const auto shifted = pair("shifted");
  const Grid s(NodeKind::S, n);
  const Grid t(NodeKind::T, n);
  const auto recovered = fht_inverse_d(GridFn::sample(s, shifted.F, Role::Transform));
  return emit_recovery("fig2", "Inversion of the shifted pair",
                       GridFn::sample(t, shifted.f), recovered, out_dir);
}

RecoveryResult figure3(std::size_t n, std::size_t fine_n, double mu,
                       const std::filesystem::path& out_dir) {
  const auto shifted = pair("shifted");
  const auto p = WeightParam::cosh(mu);
  const Grid t(NodeKind::T, n);
  auto recovered = cosh_invert_direct(downsampled_cosh_data(shifted.f, n, fine_n, p), p).f;
  return emit_recovery("fig3", "Weighted inversion, mu = " + std::to_string(mu).substr(0, 4),
                       GridFn::sample(t, shifted.f), std::move(recovered), out_dir);
}

}  // namespace fht::cli
