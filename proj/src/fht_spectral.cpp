#include "fht/fht_spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fht/errors.hpp"
#include "fht/trig_transforms.hpp"

namespace fht {

namespace {

void require_kind(const GridFn& f, NodeKind kind, const char* who) {
  if (f.grid.kind() != kind) {
    throw GridMismatchError(std::string(who) + ": expected samples on " +
                            to_string(kind) + "-nodes, got " +
                            to_string(f.grid.kind()) + "-nodes");
  }
}

}  // namespace

GridFn fht_forward_d(const GridFn& f) {
  require_kind(f, NodeKind::T, "fht_forward_d");
  const std::size_t n = f.size();
  const auto c3 = cached(TransformKind::C3, n);
  const auto s1 = cached(TransformKind::S1, n);
  return GridFn(Grid(NodeKind::S, n), fht::apply(*c3, fht::apply(*s1, f.values, true)),
                Role::Transform);
}

GridFn fht_inverse_d(const GridFn& F) {
  require_kind(F, NodeKind::S, "fht_inverse_d");
  const std::size_t n = F.size();
  const auto c3 = cached(TransformKind::C3, n);
  const auto s1 = cached(TransformKind::S1, n);
  return GridFn(Grid(NodeKind::T, n), fht::apply(*s1, fht::apply(*c3, F.values, true)));
}

GridFn fht_forward_m(const GridFn& f) {
  require_kind(f, NodeKind::S, "fht_forward_m");
  const std::size_t n = f.size();
  const Grid u(NodeKind::U, n);
  std::vector<double> g(n);
  for (std::size_t m = 0; m < n; ++m) g[m] = f[m] * std::sin(f.grid.angle(m));

  const auto ma = cached(TransformKind::MAnalysisCos, n);
  const auto d = fht::apply(*ma, g);
  // U_n(u_j) = (N+1)/2 * MSynthesisSin(n, j) / sin^2(theta_j)
  const auto ms = cached(TransformKind::MSynthesisSin, n);
  auto F = fht::apply(*ms, d, true);
  const double half = 0.5 * (static_cast<double>(n) + 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double sj = std::sin(u.angle(j));
    F[j] = -half * F[j] / (sj * sj);
  }
  return GridFn(u, std::move(F), Role::Transform);
}

GridFn fht_inverse_m(const GridFn& F) {
  require_kind(F, NodeKind::U, "fht_inverse_m");
  const std::size_t n = F.size();
  const Grid s(NodeKind::S, n);
  const auto ms = cached(TransformKind::MSynthesisSin, n);
  const auto e = fht::apply(*ms, F.values);
  // T_{n+1}(s_m) = N/2 * MAnalysisCos(n, m)
  const auto ma = cached(TransformKind::MAnalysisCos, n);
  auto f = fht::apply(*ma, e, true);
  const double half = 0.5 * static_cast<double>(n);
  for (std::size_t m = 0; m < n; ++m) f[m] = -half * f[m] / std::sin(s.angle(m));
  return GridFn(s, std::move(f));
}

double range_defect(const GridFn& F) {
  require_kind(F, NodeKind::S, "range_defect");
  const auto c3 = cached(TransformKind::C3, F.size());
  return fht::apply(*c3, F.values, true)[0];
}

PlancherelReport plancherel_check(const GridFn& f, Flavor flavor) {
  PlancherelReport r;
  if (flavor == Flavor::D) {
    require_kind(f, NodeKind::T, "plancherel_check");
    const auto F = fht_forward_d(f);
    r.lhs = inner_product(F, F, Space::Ld2);
    r.rhs = inner_product(f, f, Space::Ld2);
  } else {
    require_kind(f, NodeKind::S, "plancherel_check");
    const auto F = fht_forward_m(f);
    const double mean = mean_integral(f) / std::numbers::pi;
    r.lhs = inner_product(F, F, Space::Lm2);
    r.rhs = inner_product(f, f, Space::Lm2) - mean * mean;
  }
  r.defect = std::abs(r.lhs - r.rhs);
  return r;
}

ChebCoeffs t_coefficients(const GridFn& F) {
  require_kind(F, NodeKind::S, "t_coefficients");
  const std::size_t n = F.size();
  const auto c3 = cached(TransformKind::C3, n);
  auto a = fht::apply(*c3, F.values, true);
  const double dn = static_cast<double>(n);
  a[0] *= std::sqrt(1.0 / dn);
  for (std::size_t k = 1; k < n; ++k) a[k] *= std::sqrt(2.0 / dn);
  return ChebCoeffs{Basis::FirstKindT, std::move(a)};
}

ChebCoeffs sine_coefficients(const GridFn& f) {
  require_kind(f, NodeKind::T, "sine_coefficients");
  const std::size_t n = f.size();
  const auto s1 = cached(TransformKind::S1, n);
  auto a = fht::apply(*s1, f.values, true);
  const double scale = std::sqrt(2.0 / static_cast<double>(n));
  for (auto& v : a) v *= scale;
  return ChebCoeffs{Basis::SecondKindU, std::move(a)};
}

ChebCoeffs u_coefficients(const GridFn& F) {
  require_kind(F, NodeKind::U, "u_coefficients");
  const auto ms = cached(TransformKind::MSynthesisSin, F.size());
  return ChebCoeffs{Basis::SecondKindU, fht::apply(*ms, F.values)};
}

ChebCoeffs m_coefficients(const GridFn& f) {
  require_kind(f, NodeKind::S, "m_coefficients");
  std::vector<double> g(f.size());
  for (std::size_t m = 0; m < g.size(); ++m) g[m] = f[m] * std::sin(f.grid.angle(m));
  return t_coefficients(GridFn(f.grid, std::move(g)));
}

double mean_integral(const GridFn& f) {
  require_kind(f, NodeKind::S, "mean_integral");
  double acc = 0.0;
  for (std::size_t m = 0; m < f.size(); ++m) acc += f[m] * std::sin(f.grid.angle(m));
  return std::numbers::pi * acc / static_cast<double>(f.size());
}

double fht_tseries(const ChebCoeffs& a, double s) {
  if (!(std::abs(s) < 1.0)) {
    throw DomainError("fht_tseries: s must lie in (-1, 1)");
  }
  const auto& c = a.coeffs;
  if (c.empty()) return 0.0;
  const double log_term = std::log1p(s) - std::log1p(-s);
  // (T_{k-1}, T_k) and (P_{k-1}, P_k), starting at k = 1
  double t_prev = 1.0, t_cur = s;
  double p_prev = 0.0, p_cur = 2.0;
  double acc = c[0] * log_term;
  if (c.size() > 1) acc += c[1] * (t_cur * log_term - p_cur);
  for (std::size_t k = 1; k + 1 < c.size(); ++k) {
    // int_{-1}^{1} T_k dt
    const double ik = (k % 2 == 1) ? 0.0 : 2.0 / (1.0 - static_cast<double>(k * k));
    const double p_next = 2.0 * s * p_cur - p_prev + 2.0 * ik;
    const double t_next = 2.0 * s * t_cur - t_prev;
    p_prev = p_cur;
    p_cur = p_next;
    t_prev = t_cur;
    t_cur = t_next;
    acc += c[k + 1] * (t_cur * log_term - p_cur);
  }
  return acc / std::numbers::pi;
}

}  // namespace fht
