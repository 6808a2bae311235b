#include "fht/weight_param.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fht/errors.hpp"

namespace fht {

WeightParam WeightParam::cosh(double mu) {
  if (!std::isfinite(mu)) throw ParameterError("mu must be finite");
  return WeightParam(Flavor::CoshReal, mu);
}

WeightParam WeightParam::cos(double eta) {
  if (!std::isfinite(eta)) throw ParameterError("eta must be finite");
  if (!(std::abs(eta) < std::numbers::pi / 4.0)) {
    throw ParameterError("|eta| must be below pi/4 for a contraction, got " +
                         std::to_string(eta));
  }
  return WeightParam(Flavor::CosImaginary, eta);
}

double WeightParam::weight(double x) const {
  return flavor_ == Flavor::CoshReal ? std::cosh(value_ * x) : std::cos(value_ * x);
}

double WeightParam::ratio(double x) const {
  return flavor_ == Flavor::CoshReal ? std::tanh(value_ * x) : std::tan(value_ * x);
}

double WeightParam::weight_minus_one_over(double x) const {
  if (x == 0.0) return 0.0;
  if (flavor_ == Flavor::CoshReal) {
    const double h = std::sinh(0.5 * value_ * x);
    return 2.0 * h * h / x;
  }
  const double h = std::sin(0.5 * value_ * x);
  return -2.0 * h * h / x;
}

double WeightParam::contraction() const {
  const double r = ratio(1.0);
  return r * r;
}

double WeightParam::coercive_const() const {
  if (flavor_ == Flavor::CoshReal) {
    const double c = std::cosh(value_);
    return 1.0 / (c * c);
  }
  return 1.0 - contraction();
}

double WeightParam::condition_bound() const {
  // (1 + c) / (1 - c) without the cancellation in 1 - c near mu = 4
  return flavor_ == Flavor::CoshReal ? std::cosh(2.0 * value_)
                                     : 1.0 / std::cos(2.0 * value_);
}

}  // namespace fht
