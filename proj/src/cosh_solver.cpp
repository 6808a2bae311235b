#include "fht/cosh_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fht/errors.hpp"
#include "fht/fht_spectral.hpp"
#include "fht/pv_oracle.hpp"
#include "fht/trig_transforms.hpp"

namespace fht {

namespace {

constexpr double kPi = std::numbers::pi;

void require_kind(const GridFn& f, NodeKind kind, const char* who) {
  if (f.grid.kind() != kind) {
    throw GridMismatchError(std::string(who) + ": expected samples on " +
                            to_string(kind) + "-nodes, got " +
                            to_string(f.grid.kind()) + "-nodes");
  }
}

void require_iteration_args(double tol, std::size_t max_iter, const char* who) {
  if (!(tol > 0.0)) throw ParameterError(std::string(who) + ": tol must be positive");
  if (max_iter == 0) throw ParameterError(std::string(who) + ": max_iter must be positive");
}

std::vector<double> sample_on(const Grid& g, double (WeightParam::*fn)(double) const,
                              const WeightParam& p) {
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = (p.*fn)(g[i]);
  return v;
}

std::vector<double> times(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

// C3 S1^T v on S-nodes.
std::vector<double> forward_d(std::span<const double> v) {
  const auto c3 = cached(TransformKind::C3, v.size());
  const auto s1 = cached(TransformKind::S1, v.size());
  return fht::apply(*c3, fht::apply(*s1, v, true));
}

// S1 C3^T v on T-nodes.
std::vector<double> inverse_d(std::span<const double> v) {
  const auto c3 = cached(TransformKind::C3, v.size());
  const auto s1 = cached(TransformKind::S1, v.size());
  return fht::apply(*s1, fht::apply(*c3, v, true));
}

// S1 C3^T D_s C3 S1^T D_t v.
std::vector<double> apply_md(const DiagWeights& d, const std::vector<double>& v) {
  return inverse_d(times(d.d_s, forward_d(times(d.d_t, v))));
}

// H_m^{-1}[r_u * H_m[r_s * v]] for v on S-nodes.
std::vector<double> apply_mm(const std::vector<double>& r_s, const std::vector<double>& r_u,
                             const std::vector<double>& v) {
  const Grid s(NodeKind::S, v.size());
  const auto F = fht_forward_m(GridFn(s, times(r_s, v)));
  const Grid u(NodeKind::U, v.size());
  return fht_inverse_m(GridFn(u, times(r_u, F.values))).values;
}

double diff_norm(const Grid& g, const std::vector<double>& a, const std::vector<double>& b,
                 Space space) {
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return norm(GridFn(g, std::move(d)), space);
}

// Ratios of residuals at or below the floor are roundoff, not contraction.
double max_ratio(const std::vector<double>& hist, double floor) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < hist.size(); ++i) {
    if (hist[i] > floor && hist[i + 1] > floor) {
      worst = std::max(worst, hist[i + 1] / hist[i]);
    }
  }
  return worst;
}

double roundoff_floor(double scale) {
  return 1e3 * std::numeric_limits<double>::epsilon() *
         std::max(scale, std::numeric_limits<double>::min());
}

// sum_{n>=1} c_n U_{n-1}(x)
double shifted_u_series(const std::vector<double>& c, double x) {
  double acc = 0.0, um = 0.0, uc = 1.0;
  for (std::size_t n = 1; n < c.size(); ++n) {
    acc += c[n] * uc;
    const double un = 2.0 * x * uc - um;
    um = uc;
    uc = un;
  }
  return acc;
}

// sum_n d_n T_{n+1}(x)
double shifted_t_series(const std::vector<double>& d, double x) {
  double acc = 0.0, tm = 1.0, tc = x;
  for (std::size_t n = 0; n < d.size(); ++n) {
    const double tn = 2.0 * x * tc - tm;
    tm = tc;
    tc = tn;
    acc += d[n] * tm;
  }
  return acc;
}

ChebCoeffs ratio_t_series(const WeightParam& p, std::size_t n) {
  const Grid s(NodeKind::S, n);
  return t_coefficients(GridFn(s, sample_on(s, &WeightParam::ratio, p)));
}

}  // namespace

DiagWeights diag_weights(const WeightParam& p, std::size_t n) {
  const Grid s(NodeKind::S, n);
  const Grid t(NodeKind::T, n);
  return DiagWeights{sample_on(s, &WeightParam::ratio, p), sample_on(t, &WeightParam::ratio, p),
                     sample_on(s, &WeightParam::weight, p),
                     sample_on(t, &WeightParam::weight, p)};
}

GridFn cosh_forward(const GridFn& f, const WeightParam& p) {
  require_kind(f, NodeKind::T, "cosh_forward");
  const std::size_t n = f.size();
  const auto d = diag_weights(p, n);
  const auto fhat = times(d.cosh_t, f.values);
  const auto a = forward_d(fhat);
  const auto b = forward_d(times(d.d_t, fhat));
  std::vector<double> F(n);
  for (std::size_t m = 0; m < n; ++m) {
    F[m] = d.cosh_s[m] * (a[m] - p.sign() * d.d_s[m] * b[m]);
  }
  return GridFn(Grid(NodeKind::S, n), std::move(F), Role::Transform);
}

Eigen::MatrixXd system_matrix(const WeightParam& p, std::size_t n) {
  const auto c3 = cached(TransformKind::C3, n);
  const auto s1 = cached(TransformKind::S1, n);
  const auto d = diag_weights(p, n);
  const Eigen::MatrixXd a = c3->entries * s1->entries.transpose();
  const Eigen::Map<const Eigen::VectorXd> ds(d.d_s.data(), static_cast<Eigen::Index>(n));
  const Eigen::Map<const Eigen::VectorXd> dt(d.d_t.data(), static_cast<Eigen::Index>(n));
  const Eigen::MatrixXd m = a.transpose() * ds.asDiagonal() * a * dt.asDiagonal();
  return Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) -
         p.sign() * m;
}

Solution cosh_invert_direct(const GridFn& F_mu, const WeightParam& p) {
  require_kind(F_mu, NodeKind::S, "cosh_invert_direct");
  const std::size_t n = F_mu.size();
  const auto d = diag_weights(p, n);
  std::vector<double> Ft(n);
  for (std::size_t m = 0; m < n; ++m) Ft[m] = F_mu[m] / d.cosh_s[m];
  const auto rhs = inverse_d(Ft);

  const Grid t(NodeKind::T, n);
  SolveReport report;
  report.iterations = 1;
  report.bound_ratio = p.contraction();
  report.coercive_const = p.coercive_const();

  std::vector<double> fhat = rhs;
  if (!p.is_zero()) {
    const Eigen::MatrixXd k = system_matrix(p, n);
    const Eigen::Map<const Eigen::VectorXd> b(rhs.data(), static_cast<Eigen::Index>(n));
    const Eigen::VectorXd x = Eigen::PartialPivLU<Eigen::MatrixXd>(k).solve(b);
    if (!x.allFinite()) throw InternalError("cosh_invert_direct: LU solve produced non-finite values");
    fhat.assign(x.data(), x.data() + n);
    const Eigen::VectorXd r = k * x - b;
    report.final_defect = norm(GridFn(t, std::vector<double>(r.data(), r.data() + n)), Space::Ld2);
  }

  std::vector<double> f(n);
  for (std::size_t m = 0; m < n; ++m) f[m] = fhat[m] / d.cosh_t[m];
  f[0] = 0.0;
  return Solution{GridFn(t, std::move(f)), std::move(report)};
}

Solution cosh_invert_neumann(const GridFn& F_mu, const WeightParam& p, double tol,
                             std::size_t max_iter) {
  require_kind(F_mu, NodeKind::S, "cosh_invert_neumann");
  require_iteration_args(tol, max_iter, "cosh_invert_neumann");
  const std::size_t n = F_mu.size();
  const auto d = diag_weights(p, n);
  std::vector<double> Ft(n);
  for (std::size_t m = 0; m < n; ++m) Ft[m] = F_mu[m] / d.cosh_s[m];
  const auto f0 = inverse_d(Ft);
  const Grid t(NodeKind::T, n);

  SolveReport report;
  report.bound_ratio = p.contraction();
  report.coercive_const = p.coercive_const();
  report.converged = false;

  std::vector<double> cur = f0;
  while (report.iterations < max_iter) {
    auto next = apply_md(d, cur);
    for (std::size_t i = 0; i < n; ++i) next[i] = f0[i] + p.sign() * next[i];
    const double diff = diff_norm(t, next, cur, Space::Ld2);
    cur = std::move(next);
    ++report.iterations;
    report.residual_history.push_back(diff);
    if (diff < tol) {
      report.converged = true;
      break;
    }
  }
  report.measured_ratio =
      max_ratio(report.residual_history, roundoff_floor(norm(GridFn(t, f0), Space::Ld2)));
  auto check = apply_md(d, cur);
  for (std::size_t i = 0; i < n; ++i) check[i] = cur[i] - p.sign() * check[i];
  report.final_defect = diff_norm(t, check, f0, Space::Ld2);

  std::vector<double> f(n);
  for (std::size_t m = 0; m < n; ++m) f[m] = cur[m] / d.cosh_t[m];
  f[0] = 0.0;
  return Solution{GridFn(t, std::move(f)), std::move(report)};
}

double mean_correction(const WeightParam& p, std::size_t n, double s) {
  if (!(std::abs(s) < 1.0)) throw DomainError("mean_correction: s must lie in (-1, 1)");
  const double log_term = (std::log1p(s) - std::log1p(-s)) / kPi;
  if (p.is_zero()) return -log_term;
  return p.sign() * p.ratio(s) * fht_tseries(ratio_t_series(p, n), s) - log_term;
}

double weighted_mean(const GridFn& f, const WeightParam& p) {
  if (f.grid.kind() == NodeKind::U) {
    throw GridMismatchError("weighted_mean: U-nodes carry no L_m rule for f");
  }
  const std::size_t n = f.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += p.weight(f.grid[i]) * f[i] * std::sin(f.grid.angle(i));
  }
  return 0.5 * kPi * acc / static_cast<double>(n);
}

Solution cosh_invert_mean_constrained(const GridFn& F_mu, const WeightParam& p,
                                      double mean_fbar, double tol, std::size_t max_iter) {
  require_kind(F_mu, NodeKind::U, "cosh_invert_mean_constrained");
  require_iteration_args(tol, max_iter, "cosh_invert_mean_constrained");
  if (!std::isfinite(mean_fbar)) {
    throw ParameterError("cosh_invert_mean_constrained: mean_fbar must be finite");
  }
  const std::size_t n = F_mu.size();
  const Grid s(NodeKind::S, n);
  const Grid u(NodeKind::U, n);
  const auto r_s = sample_on(s, &WeightParam::ratio, p);
  const auto r_u = sample_on(u, &WeightParam::ratio, p);
  const auto k_s = sample_on(s, &WeightParam::weight, p);
  const ChebCoeffs rc = ratio_t_series(p, n);

  std::vector<double> rhs(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = u[j];
    const double log_term = (std::log1p(x) - std::log1p(-x)) / kPi;
    const double g = p.is_zero() ? -log_term
                                 : p.sign() * r_u[j] * fht_tseries(rc, x) - log_term;
    rhs[j] = F_mu[j] / p.weight(x) + mean_fbar * g;
  }
  const auto f0 = fht_inverse_m(GridFn(u, std::move(rhs))).values;

  SolveReport report;
  report.bound_ratio = p.contraction();
  report.coercive_const = p.coercive_const();
  report.converged = false;

  std::vector<double> cur = f0;
  while (report.iterations < max_iter) {
    auto next = apply_mm(r_s, r_u, cur);
    for (std::size_t i = 0; i < n; ++i) next[i] = f0[i] + p.sign() * next[i];
    const double diff = diff_norm(s, next, cur, Space::Lm2);
    cur = std::move(next);
    ++report.iterations;
    report.residual_history.push_back(diff);
    if (diff < tol) {
      report.converged = true;
      break;
    }
  }
  report.measured_ratio =
      max_ratio(report.residual_history, roundoff_floor(norm(GridFn(s, f0), Space::Lm2)));
  auto check = apply_mm(r_s, r_u, cur);
  for (std::size_t i = 0; i < n; ++i) check[i] = cur[i] - p.sign() * check[i];
  report.final_defect = diff_norm(s, check, f0, Space::Lm2);

  std::vector<double> f(n);
  for (std::size_t m = 0; m < n; ++m) f[m] = (cur[m] + mean_fbar) / k_s[m];
  return Solution{GridFn(s, std::move(f)), std::move(report)};
}

double KernelFn::operator()(double x) const {
  if (!(std::abs(x) <= 1.0)) throw DomainError("kernel: argument outside [-1, 1]");
  return kind == KernelKind::Kd ? shifted_u_series(series.coeffs, x)
                                : -shifted_t_series(series.coeffs, x);
}

KernelFn kernel(KernelKind kind, const WeightParam& p, const Grid& eval_grid) {
  const std::size_t n = eval_grid.size();
  ChebCoeffs series;
  if (kind == KernelKind::Kd) {
    series = ratio_t_series(p, n);
  } else {
    const Grid u(NodeKind::U, n);
    series = u_coefficients(GridFn(u, sample_on(u, &WeightParam::ratio, p)));
  }
  KernelFn k{kind, eval_grid, {}, std::move(series)};
  k.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) k.values[i] = k(eval_grid[i]);
  return k;
}

GridFn composite_operator(KernelKind kind, const WeightParam& p, const GridFn& f) {
  const std::size_t n = f.size();
  if (kind == KernelKind::Kd) {
    require_kind(f, NodeKind::T, "composite_operator");
    return GridFn(f.grid, apply_md(diag_weights(p, n), f.values));
  }
  require_kind(f, NodeKind::S, "composite_operator");
  const Grid u(NodeKind::U, n);
  return GridFn(f.grid, apply_mm(sample_on(f.grid, &WeightParam::ratio, p),
                                 sample_on(u, &WeightParam::ratio, p), f.values));
}

GridFn kernel_form_operator(KernelKind kind, const WeightParam& p, const GridFn& f,
                            std::size_t m_points) {
  require_kind(f, kind == KernelKind::Kd ? NodeKind::T : NodeKind::S, "kernel_form_operator");
  const std::size_t n = f.size();
  const auto k = kernel(kind, p, f.grid);
  const auto rule = regular_rule(m_points);

  // r(u) f(u) at the quadrature nodes, f continued by its spectral interpolant
  std::vector<double> rf;
  if (kind == KernelKind::Kd) {
    rf = resample(sine_coefficients(f), rule.nodes, ResampleMode::WUSeries);
  } else {
    rf = resample(m_coefficients(f), rule.nodes, ResampleMode::TSeries);
    for (std::size_t q = 0; q < m_points; ++q) rf[q] /= weight_w(rule.nodes[q]);
  }
  std::vector<double> ku(m_points);
  for (std::size_t q = 0; q < m_points; ++q) {
    rf[q] *= p.ratio(rule.nodes[q]);
    ku[q] = k(rule.nodes[q]);
  }

  std::vector<double> out(n, 0.0);
  const std::size_t first = kind == KernelKind::Kd ? 1 : 0;
  for (std::size_t i = first; i < n; ++i) {
    const double t = f.grid[i];
    const double kt = k.values[i];
    double acc = 0.0;
    for (std::size_t q = 0; q < m_points; ++q) {
      const double dt = t - rule.nodes[q];
      double quot;
      if (std::abs(dt) > 1e-12) {
        quot = (kt - ku[q]) / dt;
      } else {
        constexpr double h = 1e-6;
        quot = (k(std::min(1.0, t + h)) - k(std::max(-1.0, t - h))) / (2.0 * h);
      }
      acc += quot * rf[q] * rule.weights[q];
    }
    const double w = std::sin(f.grid.angle(i));
    const double r = p.ratio(t);
    const double scale = kind == KernelKind::Kd ? w : 1.0 / w;
    out[i] = r * r * f[i] + scale * acc / kPi;
  }
  return GridFn(f.grid, std::move(out));
}

ConditionEstimate condition_estimate(const WeightParam& p, std::size_t n) {
  ConditionEstimate c;
  c.bound = p.condition_bound();
  if (p.is_zero()) {
    c.measured = 1.0;
    return c;
  }
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(system_matrix(p, n));
  const auto& sv = svd.singularValues();
  c.measured = sv(0) / sv(sv.size() - 1);
  return c;
}

std::vector<NullRow> null_experiment(const WeightParam& p, std::vector<std::size_t> sizes) {
  if (p.flavor() != WeightParam::Flavor::CoshReal || p.is_zero()) {
    throw ParameterError("null_experiment: requires a real, nonzero mu");
  }
  std::sort(sizes.begin(), sizes.end());
  std::vector<NullRow> rows;
  rows.reserve(sizes.size());
  const double mu = p.value();
  for (std::size_t n : sizes) {
    const Grid t(NodeKind::T, n);
    const auto f = GridFn::sample(t, [mu](double x) { return std::cos(mu * weight_w(x)); });
    const auto F = cosh_forward(f, p);
    rows.push_back(NullRow{n, norm(F, Space::Ld2), norm(F, Space::Lm2)});
  }
  return rows;
}

GridFn downsample(const GridFn& F, std::size_t n) {
  require_kind(F, NodeKind::S, "downsample");
  const Grid s(NodeKind::S, n);
  return GridFn(s, resample(t_coefficients(F), s.nodes(), ResampleMode::TSeries), F.role);
}

}  // namespace fht
