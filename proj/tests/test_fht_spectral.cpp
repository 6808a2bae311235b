#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "fht/errors.hpp"
#include "fht/fht_spectral.hpp"
#include "fht/pv_oracle.hpp"

using namespace fht;
using doctest::Approx;

namespace {

double max_diff(const GridFn& a, const std::function<double(double)>& fn, std::size_t first = 0) {
  double m = 0.0;
  for (std::size_t i = first; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - fn(a.grid[i])));
  return m;
}

double u_n(int n, double x) { return cheb_eval(Basis::SecondKindU, n, x); }
double t_n(int n, double x) { return cheb_eval(Basis::FirstKindT, n, x); }

}  // namespace

TEST_CASE("forward d-flavor") {
  for (std::size_t n : {64u, 256u}) {
    const Grid t(NodeKind::T, n);
    const auto F = fht_forward_d(GridFn::sample(t, weight_w));
    CHECK(F.grid.kind() == NodeKind::S);
    CHECK(max_diff(F, [](double s) { return s; }) < 1e-12);

    const auto F2 = fht_forward_d(GridFn::sample(t, [](double x) { return 2 * x * weight_w(x); }));
    CHECK(max_diff(F2, [](double s) { return 2 * s * s - 1; }) < 1e-12);

    const auto F0 = fht_forward_d(GridFn(t, std::vector<double>(n, 0.0)));
    CHECK(max_diff(F0, [](double) { return 0.0; }) == 0.0);
  }
}

TEST_CASE("forward d-flavor ignores the sample at t0") {
  const Grid t(NodeKind::T, 32);
  auto f = GridFn::sample(t, weight_w);
  const auto a = fht_forward_d(f);
  f.values[0] = 42.0;
  const auto b = fht_forward_d(f);
  CHECK(a.values == b.values);
}

TEST_CASE("inverse d-flavor") {
  const Grid s(NodeKind::S, 64);
  const auto f = fht_inverse_d(GridFn::sample(s, [](double x) { return x; }));
  CHECK(f.grid.kind() == NodeKind::T);
  CHECK(f[0] == 0.0);
  CHECK(max_diff(f, weight_w) < 1e-12);

  const auto z = fht_inverse_d(GridFn::sample(s, [](double) { return 1.0; }));
  CHECK(max_diff(z, [](double) { return 0.0; }) < 1e-13);
}

TEST_CASE("inverse of the shifted pair") {
  const auto pr = pair("shifted");
  const Grid s(NodeKind::S, 256);
  const Grid t(NodeKind::T, 256);
  const auto f = fht_inverse_d(GridFn::sample(s, pr.F));
  const auto ref = GridFn::sample(t, pr.f);
  std::vector<double> d(256);
  for (std::size_t i = 0; i < 256; ++i) d[i] = f[i] - ref[i];
  CHECK(norm(GridFn(t, d), Space::Lm2) / norm(ref, Space::Lm2) < 1e-2);
}

TEST_CASE("m-flavor basis maps") {
  const Grid s(NodeKind::S, 64);
  const auto F1 = fht_forward_m(GridFn::sample(s, [](double x) { return x / weight_w(x); }));
  CHECK(F1.grid.kind() == NodeKind::U);
  CHECK(max_diff(F1, [](double) { return -1.0; }) < 1e-10);

  const auto F0 = fht_forward_m(GridFn::sample(s, [](double x) { return 1.0 / weight_w(x); }));
  CHECK(max_diff(F0, [](double) { return 0.0; }) < 1e-10);

  const auto F3 = fht_forward_m(GridFn::sample(s, [](double x) { return t_n(3, x) / weight_w(x); }));
  CHECK(max_diff(F3, [](double u) { return -(4 * u * u - 1); }) < 1e-10);

  const Grid u(NodeKind::U, 64);
  const auto f1 = fht_inverse_m(GridFn::sample(u, [](double) { return 1.0; }));
  CHECK(max_diff(f1, [](double x) { return -x / weight_w(x); }) < 1e-10);
  const auto f0 = fht_inverse_m(GridFn(u, std::vector<double>(64, 0.0)));
  CHECK(max_diff(f0, [](double) { return 0.0; }) == 0.0);

  const auto f2 = GridFn::sample(s, [](double x) { return t_n(2, x) / weight_w(x); });
  CHECK(max_diff(fht_inverse_m(fht_forward_m(f2)), [](double x) { return t_n(2, x) / weight_w(x); }) <
        1e-10);
}

TEST_CASE("m-flavor sign agrees with the oracle") {
  // F(u) of T_1/w is -1, checked by the theta-substituted principal value
  const double v = pv_fht_over_w([](double x) { return x; }, 0.37, 8192);
  CHECK(v == Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("inverse m-flavor output has zero mean") {
  const Grid u(NodeKind::U, 48);
  const auto f = fht_inverse_m(GridFn::sample(u, [](double x) { return std::exp(x) + x * x; }));
  CHECK(std::abs(mean_integral(f)) < 1e-10);
}

TEST_CASE("range defect") {
  const Grid s(NodeKind::S, 32);
  CHECK(std::abs(range_defect(GridFn::sample(s, [](double x) { return x; }))) < 1e-13);
  CHECK(range_defect(GridFn::sample(s, [](double) { return 1.0; })) == Approx(std::sqrt(32.0)));
  const Grid t(NodeKind::T, 32);
  const auto F = fht_forward_d(GridFn::sample(t, [](double x) { return std::exp(x) * weight_w(x); }));
  CHECK(std::abs(range_defect(F)) < 1e-12);
}

TEST_CASE("d-flavor coefficients start at zero") {
  const Grid t(NodeKind::T, 16);
  const auto a = sine_coefficients(GridFn::sample(t, [](double x) { return std::cos(x); }));
  CHECK(a.coeffs[0] == 0.0);
}

TEST_CASE("Plancherel checks") {
  const Grid t(NodeKind::T, 64);
  const Grid s(NodeKind::S, 64);
  const auto r1 = plancherel_check(GridFn::sample(t, [](double x) { return weight_w(x) * u_n(3, x); }), Flavor::D);
  CHECK(r1.defect < 1e-10);

  const auto w = GridFn::sample(s, weight_w);
  const auto r2 = plancherel_check(w, Flavor::M);
  // ||w||^2_Lm = 3/8, mean term (int w / pi)^2 = 1/4
  CHECK(r2.rhs == Approx(0.125).epsilon(1e-13));
  CHECK(r2.defect < 1e-10);

  const auto r3 = plancherel_check(GridFn::sample(s, [](double x) { return weight_w(x) * u_n(1, x); }), Flavor::M);
  CHECK(r3.defect < 1e-10);
  CHECK(r3.lhs == Approx(r3.rhs));

  CHECK_THROWS_AS(plancherel_check(w, Flavor::D), GridMismatchError);
}

TEST_CASE("round trip, isometries and the norm inequality") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (std::size_t n : {64u, 256u}) {
    const Grid t(NodeKind::T, n);
    const Grid s(NodeKind::S, n);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    const GridFn f(t, v);
    const auto back = fht_inverse_d(fht_forward_d(f));
    CHECK(back[0] == 0.0);
    for (std::size_t i = 1; i < n; ++i) CHECK(std::abs(back[i] - f[i]) < 1e-12);

    std::vector<double> a(n - 1);
    for (auto& x : a) x = dist(rng);
    const auto g = GridFn::sample(t, [&](double x) {
      double acc = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * u_n(int(k), x);
      return weight_w(x) * acc;
    });
    CHECK(std::abs(norm(fht_forward_d(g), Space::Ld2) - norm(g, Space::Ld2)) < 1e-10);

    const auto h = GridFn::sample(s, [&](double x) {
      double acc = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * t_n(int(k + 1), x);
      return acc / weight_w(x);
    });
    CHECK(std::abs(norm(fht_forward_m(h), Space::Lm2) - norm(h, Space::Lm2)) < 1e-10);

    const GridFn r(s, v);
    const auto R = fht_forward_m(r);
    CHECK(inner_product(R, R, Space::Lm2) <= inner_product(r, r, Space::Lm2) + 1e-10);
  }
}

TEST_CASE("closed-form transform of a T-series") {
  const ChebCoeffs a{Basis::FirstKindT, {0.3, -1.0, 0.5, 0.25, 0.1}};
  const Evaluator ev{[&](double x) {
                       double acc = 0.0;
                       for (std::size_t k = 0; k < a.coeffs.size(); ++k) acc += a.coeffs[k] * t_n(int(k), x);
                       return acc;
                     },
                     {}};
  for (double s : {-0.8, -0.1, 0.45, 0.93}) {
    CHECK(fht_tseries(a, s) == Approx(pv_fht(ev, s, 8192).value).epsilon(1e-7));
  }
  CHECK_THROWS_AS(fht_tseries(a, 1.0), DomainError);
}

TEST_CASE("oracle agreement for smooth f at interior S-nodes") {
  const auto fn = [](double x) { return weight_w(x) * (1.0 + 2.0 * x + x * x * x); };
  const Grid t(NodeKind::T, 256);
  const auto F = fht_forward_d(GridFn::sample(t, fn));
  const Evaluator ev{fn, {}};
  for (std::size_t m = 0; m < 256; m += 5) {
    CHECK(std::abs(F[m] - pv_fht(ev, F.grid[m], 32768).value) < 1e-6);
  }
}

TEST_CASE("shifted pair: spectral error is largest at the kinks") {
  // square-root kinks limit pointwise accuracy; see the acceptance report
  const auto pr = pair("shifted");
  const Grid t(NodeKind::T, 256);
  const auto F = fht_forward_d(GridFn::sample(t, pr.f));
  double near = 0.0, far = 0.0;
  for (std::size_t m = 0; m < 256; ++m) {
    const double s = F.grid[m];
    const double e = std::abs(F[m] - pr.F(s));
    const bool close = std::abs(s + 0.9) < 0.1 || std::abs(s - 0.7) < 0.1;
    (close ? near : far) = std::max(close ? near : far, e);
  }
  CHECK(near > far);
  CHECK(near < 2e-2);
}

TEST_CASE("wrong grid kinds are rejected") {
  const GridFn s(Grid(NodeKind::S, 8), std::vector<double>(8, 1.0));
  const GridFn t(Grid(NodeKind::T, 8), std::vector<double>(8, 1.0));
  CHECK_THROWS_AS(fht_forward_d(s), GridMismatchError);
  CHECK_THROWS_AS(fht_inverse_d(t), GridMismatchError);
  CHECK_THROWS_AS(fht_forward_m(t), GridMismatchError);
  CHECK_THROWS_AS(fht_inverse_m(s), GridMismatchError);
  CHECK_THROWS_AS(range_defect(t), GridMismatchError);
}
