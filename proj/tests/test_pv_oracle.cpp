#include <cmath>
#include <numbers>

#include <doctest.h>

#include "fht/cheb_core.hpp"
#include "fht/errors.hpp"
#include "fht/pv_oracle.hpp"

using namespace fht;
using doctest::Approx;

namespace {

const Evaluator kCircle{[](double x) { return weight_w(x); }, {}};
const Evaluator kOne{[](double) { return 1.0; }, {}};

}  // namespace

TEST_CASE("pv_fht closed forms") {
  CHECK(std::abs(pv_fht(kCircle, 0.5, 4096).value - 0.5) < 1e-6);
  CHECK(std::abs(pv_fht(kOne, 0.5, 64).value - std::log(3.0) / std::numbers::pi) < 1e-8);
  CHECK(std::abs(pv_fht(kOne, 0.0, 64).value) < 1e-15);
}

TEST_CASE("pv_fht argument checks") {
  CHECK_THROWS_AS(pv_fht(kOne, 1.0, 128), DomainError);
  CHECK_THROWS_AS(pv_fht(kOne, 0.2, 63), InvalidSizeError);
  CHECK_THROWS_AS(pv_fht_over_w([](double) { return 1.0; }, -1.0, 128), DomainError);
}

TEST_CASE("convergence under doubling") {
  double prev = std::abs(pv_fht(kCircle, 0.5, 256).value - 0.5);
  for (std::size_t m = 512; m <= 8192; m *= 2) {
    const double e = std::abs(pv_fht(kCircle, 0.5, m).value - 0.5);
    CHECK(prev / e >= 3.0);
    prev = e;
  }
}

TEST_CASE("principal value of 1/w vanishes") {
  for (double s : {0.2, 0.6}) {
    CHECK(std::abs(pv_fht_over_w([](double) { return 1.0; }, s, 4096)) < 1e-4);
  }
}

TEST_CASE("weighted oracle") {
  const auto p0 = WeightParam::cosh(0.0);
  CHECK(cosh_pv_forward(kCircle, 0.3, p0, 1024).value == pv_fht(kCircle, 0.3, 1024).value);

  // frozen at 8192 panels; 16384 panels agree to 1e-9
  const auto p = WeightParam::cosh(0.5);
  CHECK(cosh_pv_forward(kCircle, 0.3, p, 8192).value == Approx(0.3190809339).epsilon(1e-8));
  CHECK(std::abs(cosh_pv_forward(kCircle, 0.0, p, 8192).value) < 1e-12);
}

TEST_CASE("weighted oracle on cos(mu w)") {
  // finite and clearly nonzero; the null experiment measures the same quantity
  const Evaluator f{[](double x) { return std::cos(3.0 * weight_w(x)); }, {}};
  const double v = cosh_pv_forward(f, 0.25, WeightParam::cosh(3.0), 8192).value;
  CHECK(v == Approx(-0.8114778).epsilon(1e-6));
}

TEST_CASE("analytic pairs") {
  const auto sh = pair("shifted");
  CHECK(sh.F(0.0) == Approx(0.1));
  CHECK(sh.F(0.9) == Approx(0.4));
  CHECK(sh.f(-0.9) == Approx(0.0).epsilon(1e-7));
  CHECK(sh.f(0.7) == Approx(0.0).epsilon(1e-7));
  CHECK(sh.f(0.75) == 0.0);
  CHECK(sh.kinks.size() == 2);
  CHECK(!sh.smoothness_notes.empty());

  const auto uc = pair("unit_circle");
  CHECK(uc.F(0.3) == 0.3);
  CHECK(uc.f(0.6) == Approx(0.8));

  CHECK_THROWS_AS(pair("triangle"), ParameterError);
}

TEST_CASE("shifted pair self-consistency away from kinks") {
  const auto sh = pair("shifted");
  for (double s : {-0.5, 0.0, 0.3, 0.85}) {
    const auto r = pv_fht(sh.evaluator(), s, 8192);
    CHECK(!r.reduced_accuracy);
    CHECK(std::abs(r.value - sh.F(s)) < 1e-5);
  }
}

TEST_CASE("evaluation at a kink is flagged") {
  const auto sh = pair("shifted");
  CHECK(pv_fht(sh.evaluator(), 0.7, 1024).reduced_accuracy);
  CHECK(pv_fht(sh.evaluator(), -0.9, 1024).reduced_accuracy);
  CHECK(!pv_fht(sh.evaluator(), -0.5, 1024).reduced_accuracy);
}

TEST_CASE("regular rule integrates polynomials and w-type integrands") {
  CHECK(regular_integral([](double t) { return t * t; }, 256) == Approx(2.0 / 3.0).epsilon(1e-5));
  CHECK(regular_integral([](double t) { return weight_w(t); }, 256) ==
        Approx(std::numbers::pi / 2).epsilon(1e-5));
}
