#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fht {

/// Largest grid the library is designed for (dense O(N^2) transforms).
inline constexpr std::size_t kMaxGridSize = 512;
/// Recurrence evaluation is refused beyond 4 * kMaxGridSize.
inline constexpr int kMaxDegree = 4 * static_cast<int>(kMaxGridSize);

enum class NodeKind {
  S,  ///< s_m = cos((m + 0.5) pi / N), m = 0..N-1 (Gauss-Chebyshev, first kind)
  T,  ///< t_m = cos(m pi / N), m = 0..N-1 (t_0 = 1, -1 excluded)
  U,  ///< u_j = cos(j pi / (N + 1)), j = 1..N (Gauss-Chebyshev, second kind)
};

const char* to_string(NodeKind kind) noexcept;

/// Immutable set of collocation nodes in [-1, 1], ordered by increasing
/// angle (so decreasing abscissa).
class Grid {
 public:
  Grid(NodeKind kind, std::size_t n);

  NodeKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  double operator[](std::size_t i) const { return nodes_[i]; }
  std::span<const double> nodes() const noexcept { return nodes_; }

  /// Angle theta_i with nodes[i] = cos(theta_i).
  double angle(std::size_t i) const;

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.kind_ == b.kind_ && a.size() == b.size();
  }

 private:
  NodeKind kind_;
  std::vector<double> nodes_;
};

/// Builds a grid from the closed-form cosines; throws InvalidSizeError for n < 2.
Grid cgl_nodes(NodeKind kind, std::size_t n);

enum class Role { Plain, HatMu, Transform, TildeMu };

/// Samples attached to a grid.
struct GridFn {
  Grid grid;
  std::vector<double> values;
  Role role = Role::Plain;

  GridFn(Grid g, std::vector<double> v, Role r = Role::Plain);

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }

  /// Samples fn at the nodes of g.
  template <class Fn>
  static GridFn sample(const Grid& g, Fn&& fn, Role r = Role::Plain) {
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = fn(g[i]);
    return GridFn(g, std::move(v), r);
  }
};

enum class Basis { FirstKindT, SecondKindU };

/// Coefficients a_0..a_{N-1} of a Chebyshev series.
struct ChebCoeffs {
  Basis basis = Basis::FirstKindT;
  std::vector<double> coeffs;
};

/// T_n(x) or U_n(x) by the three-term recurrence.
double cheb_eval(Basis basis, int n, double x);

/// w(t) = sqrt(1 - t^2); exactly 0 at +-1.
double weight_w(double t);

enum class Space { Ld2, Lm2 };

/// Discrete weighted inner product (1/pi) int f g / w  (Ld2) or
/// (1/pi) int f g w  (Lm2).
///
/// The rule is picked from the grid kind:
///   Ld2 on S: (1/N) sum f g                  Gauss-Chebyshev, exact to degree 2N-1
///   Ld2 on T: (1/N) sum_{m>=1} f g           trapezoid in theta, node t_0 skipped
///   Lm2 on U: 1/(N+1) sum f g sin^2(theta_j) Gauss-Chebyshev second kind
///   Lm2 on S: (1/N) sum f g w^2
///   Lm2 on T: (1/N) sum_{m>=1} f g w^2
/// Ld2 on U and mismatched f/g grids raise GridMismatchError.
double inner_product(const GridFn& f, const GridFn& g, Space space);

double norm(const GridFn& f, Space space);

/// Quadrature weights of inner_product for one grid/space combination.
std::vector<double> quadrature_weights(const Grid& grid, Space space);

enum class ResampleMode {
  TSeries,   ///< sum a_n T_n(x)
  WUSeries,  ///< w(x) sum a_n U_{n-1}(x), U_{-1} = 0
};

std::vector<double> resample(const ChebCoeffs& coeffs,
                             std::span<const double> targets,
                             ResampleMode mode);

/// Evenly spaced display abscissae x_k = (2k + 1 - N) / N, k = 0..N-1.
std::vector<double> display_grid(std::size_t n);

}  // namespace fht
