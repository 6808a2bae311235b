#include "fht/cheb_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fht/errors.hpp"

namespace fht {

namespace {

constexpr double kPi = std::numbers::pi;

double node_angle(NodeKind kind, std::size_t i, std::size_t n) {
  const double di = static_cast<double>(i);
  const double dn = static_cast<double>(n);
  switch (kind) {
    case NodeKind::S:
      return (di + 0.5) * kPi / dn;
    case NodeKind::T:
      return di * kPi / dn;
    case NodeKind::U:
      return (di + 1.0) * kPi / (dn + 1.0);
  }
  return 0.0;
}

void check_domain(double x, const char* who) {
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError(std::string(who) + ": argument " + std::to_string(x) +
                      " outside [-1, 1]");
  }
}

}  // namespace

const char* to_string(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::S:
      return "S";
    case NodeKind::T:
      return "T";
    case NodeKind::U:
      return "U";
  }
  return "?";
}

Grid::Grid(NodeKind kind, std::size_t n) : kind_(kind) {
  if (n < 2) {
    throw InvalidSizeError("grid size must be at least 2, got " +
                           std::to_string(n));
  }
  nodes_.resize(n);
  for (std::size_t i = 0; i < n; ++i) nodes_[i] = std::cos(node_angle(kind, i, n));
}

double Grid::angle(std::size_t i) const { return node_angle(kind_, i, size()); }

Grid cgl_nodes(NodeKind kind, std::size_t n) { return Grid(kind, n); }

GridFn::GridFn(Grid g, std::vector<double> v, Role r)
    : grid(std::move(g)), values(std::move(v)), role(r) {
  if (values.size() != grid.size()) {
    throw GridMismatchError("sample count " + std::to_string(values.size()) +
                            " does not match grid size " +
                            std::to_string(grid.size()));
  }
}

double cheb_eval(Basis basis, int n, double x) {
  check_domain(x, "cheb_eval");
  if (n < 0 || n > kMaxDegree) {
    throw InvalidSizeError("cheb_eval: degree " + std::to_string(n) +
                           " outside [0, " + std::to_string(kMaxDegree) + "]");
  }
  double prev = 1.0;
  double cur = basis == Basis::FirstKindT ? x : 2.0 * x;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double weight_w(double t) {
  check_domain(t, "weight_w");
  // (1 - t)(1 + t) keeps the result exact at the endpoints.
  return std::sqrt((1.0 - t) * (1.0 + t));
}

std::vector<double> quadrature_weights(const Grid& grid, Space space) {
  const std::size_t n = grid.size();
  const double dn = static_cast<double>(n);
  std::vector<double> q(n, 0.0);
  switch (grid.kind()) {
    case NodeKind::S:
      for (std::size_t m = 0; m < n; ++m) {
        const double w = std::sin(grid.angle(m));
        q[m] = (space == Space::Ld2 ? 1.0 : w * w) / dn;
      }
      break;
    case NodeKind::T:
      for (std::size_t m = 1; m < n; ++m) {
        const double w = std::sin(grid.angle(m));
        q[m] = (space == Space::Ld2 ? 1.0 : w * w) / dn;
      }
      break;
    case NodeKind::U:
      if (space == Space::Ld2) {
        throw GridMismatchError("Ld2 inner product is not defined on U-nodes");
      }
      for (std::size_t j = 0; j < n; ++j) {
        const double w = std::sin(grid.angle(j));
        q[j] = w * w / (dn + 1.0);
      }
      break;
  }
  return q;
}

double inner_product(const GridFn& f, const GridFn& g, Space space) {
  if (!(f.grid == g.grid)) {
    throw GridMismatchError("inner_product: operands sampled on different grids");
  }
  const auto q = quadrature_weights(f.grid, space);
  double acc = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) acc += q[i] * f[i] * g[i];
  return acc;
}

double norm(const GridFn& f, Space space) {
  return std::sqrt(inner_product(f, f, space));
}

std::vector<double> resample(const ChebCoeffs& coeffs,
                             std::span<const double> targets,
                             ResampleMode mode) {
  const auto& a = coeffs.coeffs;
  if (static_cast<int>(a.size()) > kMaxDegree + 1) {
    throw InvalidSizeError("resample: series longer than the degree cap");
  }
  std::vector<double> out(targets.size(), 0.0);
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const double x = targets[k];
    check_domain(x, "resample");
    double acc = 0.0;
    if (mode == ResampleMode::TSeries) {
      double tm = 1.0, tc = x;
      if (!a.empty()) acc += a[0];
      for (std::size_t n = 1; n < a.size(); ++n) {
        acc += a[n] * tc;
        const double tn = 2.0 * x * tc - tm;
        tm = tc;
        tc = tn;
      }
      out[k] = acc;
    } else {
      // term n carries U_{n-1}; U_{-1} = 0 drops a_0
      double um = 0.0, uc = 1.0;
      for (std::size_t n = 1; n < a.size(); ++n) {
        acc += a[n] * uc;
        const double un = 2.0 * x * uc - um;
        um = uc;
        uc = un;
      }
      out[k] = weight_w(x) * acc;
    }
  }
  return out;
}

std::vector<double> display_grid(std::size_t n) {
  if (n < 2) throw InvalidSizeError("display grid needs at least 2 points");
  std::vector<double> x(n);
  const double dn = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = (2.0 * static_cast<double>(k) + 1.0 - dn) / dn;
  }
  return x;
}

}  // namespace fht
