#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fht {

enum class TransformKind {
  /// DCT-III on S-nodes: c3(m, n) = sqrt(2/N) * (1/sqrt2 | cos((m+0.5) n pi/N)).
  /// Row = node m, column = coefficient n. Orthogonal.
  C3,
  /// DST-I on T-nodes: s1(m, n) = sqrt(2/N) sin(m n pi / N). Row 0 and column
  /// 0 vanish; S1^T S1 = diag(0, 1, ..., 1).
  S1,
  /// Analysis of g = f w on S-nodes in the basis T_{n+1}:
  /// entry(n, m) = (2/N) cos((n+1)(m+0.5) pi / N). Row = coefficient.
  MAnalysisCos,
  /// Analysis of F on U-nodes in the basis U_n:
  /// entry(n, j) = 2/(N+1) sin((n+1) theta_j) sin(theta_j), theta_j = (j+1) pi/(N+1).
  /// Row = coefficient.
  MSynthesisSin,
};

struct TransformMatrix {
  TransformKind kind;
  std::size_t n;
  Eigen::MatrixXd entries;
};

/// Dense matrix from the closed-form entries. Throws InvalidSizeError for n < 2.
TransformMatrix build(TransformKind kind, std::size_t n);

/// Shared immutable copy of build(kind, n); safe to call concurrently.
std::shared_ptr<const TransformMatrix> cached(TransformKind kind, std::size_t n);

/// M v, or M^T v when transposed is set.
std::vector<double> apply(const TransformMatrix& m, std::span<const double> v,
                          bool transposed = false);

}  // namespace fht
