#include "fht/pv_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fht/errors.hpp"

namespace fht {

namespace {

constexpr double kPi = std::numbers::pi;

void check_args(double s, std::size_t m_points, const char* who) {
  if (!(std::abs(s) < 1.0)) {
    throw DomainError(std::string(who) + ": s must lie in (-1, 1)");
  }
  if (m_points < kMinOraclePoints) {
    throw InvalidSizeError(std::string(who) + ": m_points must be at least " +
                           std::to_string(kMinOraclePoints));
  }
}

bool near_kink(const Evaluator& f, double s) {
  for (double k : f.kinks) {
    if (std::abs(s - k) < kKinkRadius) return true;
  }
  return false;
}

}  // namespace

QuadratureRule regular_rule(std::size_t m_points) {
  if (m_points == 0) throw InvalidSizeError("regular_rule: no panels");
  const double h = kPi / static_cast<double>(m_points);
  QuadratureRule rule{std::vector<double>(m_points), std::vector<double>(m_points)};
  for (std::size_t k = 0; k < m_points; ++k) {
    const double th = (static_cast<double>(k) + 0.5) * h;
    rule.nodes[k] = std::cos(th);
    rule.weights[k] = std::sin(th) * h;
  }
  return rule;
}

double regular_integral(const RealFn& g, std::size_t m_points) {
  const auto rule = regular_rule(m_points);
  double acc = 0.0;
  for (std::size_t k = 0; k < m_points; ++k) acc += g(rule.nodes[k]) * rule.weights[k];
  return acc;
}

OracleValue pv_fht(const Evaluator& f, double s, std::size_t m_points) {
  check_args(s, m_points, "pv_fht");
  const double fs = f.fn(s);
  const double reg = regular_integral(
      [&](double t) { return t == s ? 0.0 : (f.fn(t) - fs) / (s - t); }, m_points);
  const double log_term = std::log1p(s) - std::log1p(-s);
  return OracleValue{(reg + fs * log_term) / kPi, near_kink(f, s)};
}

OracleValue cosh_pv_forward(const Evaluator& f, double s, const WeightParam& p,
                            std::size_t m_points) {
  auto out = pv_fht(f, s, m_points);
  if (p.is_zero()) return out;
  const double extra = regular_integral(
      [&](double t) { return p.weight_minus_one_over(s - t) * f.fn(t); }, m_points);
  out.value += extra / kPi;
  return out;
}

double pv_fht_over_w(const RealFn& h, double s, std::size_t m_points) {
  check_args(s, m_points, "pv_fht_over_w");
  const double ths = std::acos(s);
  const double sin_s = std::sin(ths);
  const double hs = h(s);
  const double step = kPi / static_cast<double>(m_points);
  double acc = 0.0;
  for (std::size_t k = 0; k < m_points; ++k) {
    const double th = (static_cast<double>(k) + 0.5) * step;
    if (th == ths) continue;
    acc += h(std::cos(th)) / (s - std::cos(th)) - hs / (sin_s * (th - ths));
  }
  acc *= step;
  acc += hs / sin_s * std::log((kPi - ths) / ths);
  return acc / kPi;
}

AnalyticPair pair(std::string_view name) {
  if (name == "unit_circle") {
    return AnalyticPair{
        "unit_circle",
        [](double t) { return std::abs(t) <= 1.0 ? std::sqrt((1.0 - t) * (1.0 + t)) : 0.0; },
        [](double s) { return s; },
        {},
        "smooth in the interior; square-root behaviour at t = -1 and t = 1"};
  }
  if (name == "shifted") {
    return AnalyticPair{
        "shifted",
        [](double t) {
          if (t < -0.9 || t > 0.7) return 0.0;
          const double x = t + 0.1;
          return std::sqrt(std::max(0.0, 0.64 - x * x));
        },
        [](double s) {
          const double x = s + 0.1;
          if (s >= -0.9 && s <= 0.7) return x;
          return x - std::copysign(std::sqrt(x * x - 0.64), x);
        },
        {-0.9, 0.7},
        "square-root kinks at t = -0.9 and t = 0.7; f vanishes outside [-0.9, 0.7]"};
  }
  throw ParameterError("unknown analytic pair '" + std::string(name) + "'");
}

}  // namespace fht
