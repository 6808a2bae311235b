#include "fht/trig_transforms.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

#include "fht/errors.hpp"

namespace fht {

namespace {
constexpr double kPi = std::numbers::pi;
}

TransformMatrix build(TransformKind kind, std::size_t n) {
  if (n < 2) {
    throw InvalidSizeError("transform size must be at least 2, got " +
                           std::to_string(n));
  }
  const double dn = static_cast<double>(n);
  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd e(N, N);
  switch (kind) {
    case TransformKind::C3: {
      const double scale = std::sqrt(2.0 / dn);
      for (Eigen::Index m = 0; m < N; ++m) {
        e(m, 0) = std::sqrt(1.0 / dn);
        for (Eigen::Index k = 1; k < N; ++k) {
          e(m, k) = scale * std::cos((static_cast<double>(m) + 0.5) *
                                     static_cast<double>(k) * kPi / dn);
        }
      }
      break;
    }
    case TransformKind::S1: {
      const double scale = std::sqrt(2.0 / dn);
      for (Eigen::Index m = 0; m < N; ++m) {
        for (Eigen::Index k = 0; k < N; ++k) {
          e(m, k) = scale * std::sin(static_cast<double>(m) *
                                     static_cast<double>(k) * kPi / dn);
        }
      }
      break;
    }
    case TransformKind::MAnalysisCos: {
      for (Eigen::Index k = 0; k < N; ++k) {
        for (Eigen::Index m = 0; m < N; ++m) {
          e(k, m) = 2.0 / dn *
                    std::cos(static_cast<double>(k + 1) *
                             (static_cast<double>(m) + 0.5) * kPi / dn);
        }
      }
      break;
    }
    case TransformKind::MSynthesisSin: {
      for (Eigen::Index k = 0; k < N; ++k) {
        for (Eigen::Index j = 0; j < N; ++j) {
          const double theta = static_cast<double>(j + 1) * kPi / (dn + 1.0);
          e(k, j) = 2.0 / (dn + 1.0) *
                    std::sin(static_cast<double>(k + 1) * theta) *
                    std::sin(theta);
        }
      }
      break;
    }
  }
  return TransformMatrix{kind, n, std::move(e)};
}

std::shared_ptr<const TransformMatrix> cached(TransformKind kind, std::size_t n) {
  static std::mutex mutex;
  static std::map<std::pair<TransformKind, std::size_t>,
                  std::shared_ptr<const TransformMatrix>>
      cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{kind, n}];
  if (!slot) slot = std::make_shared<const TransformMatrix>(build(kind, n));
  return slot;
}

std::vector<double> apply(const TransformMatrix& m, std::span<const double> v,
                          bool transposed) {
  if (v.size() != m.n) {
    throw InvalidSizeError("apply: vector length " + std::to_string(v.size()) +
                           " does not match matrix size " + std::to_string(m.n));
  }
  const Eigen::Map<const Eigen::VectorXd> x(v.data(),
                                            static_cast<Eigen::Index>(v.size()));
  std::vector<double> out(m.n);
  Eigen::Map<Eigen::VectorXd> y(out.data(), static_cast<Eigen::Index>(m.n));
  if (transposed) {
    y.noalias() = m.entries.transpose() * x;
  } else {
    y.noalias() = m.entries * x;
  }
  return out;
}

}  // namespace fht
