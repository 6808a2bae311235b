#pragma once

namespace fht {

/// Weight parameter of the kernel cosh(mu (s - t)) / (s - t), or of its
/// cos(eta (s - t)) counterpart for mu = i eta.
///
/// With k(x) the weight and r(x) the ratio below,
///   k(s - t) = k(s) k(t) (1 - sign() r(s) r(t)),
/// so both flavors share one real code path.
class WeightParam {
 public:
  enum class Flavor { CoshReal, CosImaginary };

  /// Any finite mu.
  static WeightParam cosh(double mu);
  /// Finite eta with |eta| < pi/4; otherwise ParameterError.
  static WeightParam cos(double eta);

  Flavor flavor() const noexcept { return flavor_; }
  double value() const noexcept { return value_; }

  /// cosh(mu x) or cos(eta x).
  double weight(double x) const;
  /// tanh(mu x) or tan(eta x).
  double ratio(double x) const;
  /// (k(x) - 1) / x, with the x -> 0 limit 0. Computed without cancellation.
  double weight_minus_one_over(double x) const;
  /// +1 for cosh, -1 for cos.
  double sign() const noexcept { return flavor_ == Flavor::CoshReal ? 1.0 : -1.0; }
  /// tanh^2(|mu|) or tan^2(|eta|); always < 1.
  double contraction() const;
  /// 1 - contraction(), the coercive constant.
  double coercive_const() const;
  /// (1 + c) / (1 - c), the 2-norm condition bound of the direct system.
  double condition_bound() const;

  bool is_zero() const noexcept { return value_ == 0.0; }

 private:
  WeightParam(Flavor f, double v) : flavor_(f), value_(v) {}

  Flavor flavor_;
  double value_;
};

}  // namespace fht
