#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fht/weight_param.hpp"

namespace fht {

using RealFn = std::function<double(double)>;

/// A function on [-1, 1] together with the interior points where it is not
/// smooth.
struct Evaluator {
  RealFn fn;
  std::vector<double> kinks;
};

struct OracleValue {
  double value = 0.0;
  /// Set when s lies within kKinkRadius of a listed kink.
  bool reduced_accuracy = false;
};

inline constexpr double kKinkRadius = 1e-3;
inline constexpr std::size_t kMinOraclePoints = 64;

/// Composite midpoint rule in theta, t = cos(theta): nodes cos(theta_k) and
/// weights sin(theta_k) pi / m for int_{-1}^{1} g(t) dt.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule regular_rule(std::size_t m_points);

/// int_{-1}^{1} g(t) dt by regular_rule.
double regular_integral(const RealFn& g, std::size_t m_points);

/// (1/pi) PV int f(t) / (s - t) dt by singularity subtraction:
///   (1/pi) [ int (f(t) - f(s)) / (s - t) dt + f(s) ln((1 + s) / (1 - s)) ].
/// Requires |s| < 1 and m_points >= kMinOraclePoints.
OracleValue pv_fht(const Evaluator& f, double s, std::size_t m_points);

/// (1/pi) PV int k(s - t) f(t) / (s - t) dt, as pv_fht plus the regular
/// term (1/pi) int (k(s - t) - 1) / (s - t) f(t) dt.
OracleValue cosh_pv_forward(const Evaluator& f, double s, const WeightParam& p,
                            std::size_t m_points);

/// (1/pi) PV int h(t) / (w(t) (s - t)) dt, integrated in theta with the
/// subtraction h(s) / (sin(theta_s) (theta - theta_s)).
double pv_fht_over_w(const RealFn& h, double s, std::size_t m_points);

struct AnalyticPair {
  std::string name;
  RealFn f;
  RealFn F;
  std::vector<double> kinks;
  std::string smoothness_notes;

  Evaluator evaluator() const { return Evaluator{f, kinks}; }
};

/// "unit_circle": f = w, F = s.
/// "shifted": the disc of radius 0.8 centred at -0.1 and its transform.
/// Unknown names raise ParameterError.
AnalyticPair pair(std::string_view name);

}  // namespace fht
