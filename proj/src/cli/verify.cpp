#include "fht/cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include <json.hpp>

#include "fht/cli/figures.hpp"
#include "fht/cosh_solver.hpp"
#include "fht/fht_spectral.hpp"
#include "fht/pv_oracle.hpp"

namespace fht::cli {

namespace {

constexpr std::size_t kOraclePoints = 8192;
/// Nodes within 1e-4 of t = 1 need the finer rule for 1e-6 agreement.
constexpr std::size_t kOracleFinePoints = 32768;
constexpr std::size_t kKernelFormN = 32;
constexpr double kPaperConditionBound = 1490.5;

class Recorder {
 public:
  Recorder(std::vector<PropertyResult>& out, std::ostream* log) : out_(out), log_(log) {}

  void at_most(const std::string& name, std::size_t n, double value, double threshold) {
    add(name, n, value, threshold, Relation::AtMost, value <= threshold);
  }
  void at_least(const std::string& name, std::size_t n, double value, double threshold) {
    add(name, n, value, threshold, Relation::AtLeast, value >= threshold);
  }

 private:
  void add(const std::string& name, std::size_t n, double value, double threshold,
           Relation rel, bool pass) {
    // NaN fails both relations
    out_.push_back(PropertyResult{name, n, value, threshold, rel, pass && !std::isnan(value)});
    if (log_) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "%s  n=%-4zu %-44s %.3e %s %.3e\n",
                    out_.back().pass ? "PASS" : "FAIL", n, name.c_str(), value,
                    rel == Relation::AtMost ? "<=" : ">=", threshold);
      *log_ << buf;
    }
  }

  std::vector<PropertyResult>& out_;
  std::ostream* log_;
};

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b,
                    std::size_t first = 0) {
  double m = 0.0;
  for (std::size_t i = first; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<double> random_coeffs(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> a(count);
  for (auto& v : a) v = dist(rng);
  return a;
}

// w(t) sum_{k<count} a_k U_k(t)
GridFn w_u_combination(const Grid& g, const std::vector<double>& a) {
  return GridFn::sample(g, [&](double x) {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * cheb_eval(Basis::SecondKindU, int(k), x);
    return weight_w(x) * acc;
  });
}

double smooth_test_fn(double x) { return weight_w(x) * (1.0 + 2.0 * x + x * x * x); }

void spectral_suite(Recorder& rec, std::size_t n, std::mt19937_64& rng) {
  const Grid t(NodeKind::T, n);
  const Grid s(NodeKind::S, n);

  {
    auto v = random_coeffs(rng, n);
    const GridFn f(t, v);
    const auto back = fht_inverse_d(fht_forward_d(f));
    rec.at_most("d-flavor round trip", n, max_abs_diff(back.values, f.values, 1), 1e-12);
  }
  {
    const auto f = w_u_combination(t, random_coeffs(rng, n - 1));
    const auto F = fht_forward_d(f);
    rec.at_most("d-flavor isometry", n, std::abs(norm(F, Space::Ld2) - norm(f, Space::Ld2)),
                1e-10);
  }
  {
    const auto a = random_coeffs(rng, n - 1);
    const auto f = GridFn::sample(s, [&](double x) {
      double acc = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        acc += a[k] * cheb_eval(Basis::FirstKindT, int(k + 1), x);
      }
      return acc / weight_w(x);
    });
    const auto F = fht_forward_m(f);
    rec.at_most("m-flavor isometry", n, std::abs(norm(F, Space::Lm2) - norm(f, Space::Lm2)),
                1e-10);
  }
  {
    const auto f = w_u_combination(s, {1.0, 0.0, 1.0});
    rec.at_most("m-flavor Plancherel with mean term", n,
                plancherel_check(f, Flavor::M).defect, 1e-10);
    const auto g = w_u_combination(t, random_coeffs(rng, 31));
    rec.at_most("d-flavor Plancherel", n, plancherel_check(g, Flavor::D).defect, 1e-10);
  }
  {
    const GridFn f(s, random_coeffs(rng, n));
    const auto F = fht_forward_m(f);
    const double gap = inner_product(F, F, Space::Lm2) - inner_product(f, f, Space::Lm2);
    rec.at_most("m-flavor norm inequality", n, gap, 1e-10);
  }
  {
    const GridFn one(s, std::vector<double>(n, 1.0));
    const auto f = fht_inverse_d(one);
    rec.at_most("range-defect annihilation", n,
                *std::max_element(f.values.begin(), f.values.end(),
                                  [](double a, double b) { return std::abs(a) < std::abs(b); }),
                1e-12);
  }
  {
    const auto F = fht_forward_d(GridFn::sample(t, [](double x) { return weight_w(x); }));
    rec.at_most("unit circle forward", n, max_abs_diff(F.values, std::vector<double>(s.nodes().begin(), s.nodes().end())), 1e-12);
  }
  {
    const auto F = fht_forward_d(GridFn::sample(t, smooth_test_fn));
    const Evaluator ev{smooth_test_fn, {}};
    double worst = 0.0;
    for (std::size_t m = 0; m < n; m += std::max<std::size_t>(1, n / 16)) {
      worst = std::max(worst, std::abs(F[m] - pv_fht(ev, s[m], kOracleFinePoints).value));
    }
    rec.at_most("oracle agreement, smooth f", n, worst, 1e-6);
  }
}

void cosh_suite(Recorder& rec, std::size_t n) {
  const Grid t(NodeKind::T, n);
  const Grid s(NodeKind::S, n);
  const auto f = GridFn::sample(t, smooth_test_fn);

  {
    const auto p0 = WeightParam::cosh(0.0);
    const double fwd = max_abs_diff(cosh_forward(f, p0).values, fht_forward_d(f).values);
    const auto F = GridFn::sample(s, [](double x) { return x * x + x; });
    const double inv =
        max_abs_diff(cosh_invert_direct(F, p0).f.values, fht_inverse_d(F).values);
    rec.at_most("degeneration at mu = 0", n, std::max(fwd, inv), 1e-14);
  }

  for (double mu : {0.5, 1.0, 2.0}) {
    const auto p = WeightParam::cosh(mu);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      const auto g = GridFn::sample(t, [k](double x) {
        return weight_w(x) * cheb_eval(Basis::SecondKindU, int(k), x);
      });
      worst = std::min(worst, norm(cosh_forward(g, p), Space::Ld2) / norm(g, Space::Ld2));
    }
    rec.at_least("coerciveness mu = " + std::to_string(mu).substr(0, 3), n, worst,
                 p.coercive_const() - 1e-8);
  }

  std::vector<std::pair<std::string, WeightParam>> params{
      {"mu = 0.5", WeightParam::cosh(0.5)}, {"mu = 1.0", WeightParam::cosh(1.0)},
      {"eta = 0.3", WeightParam::cos(0.3)}, {"eta = 0.5", WeightParam::cos(0.5)},
      {"eta = 0.7", WeightParam::cos(0.7)}};
  for (const auto& [label, p] : params) {
    const auto F = cosh_forward(f, p);
    const auto it = cosh_invert_neumann(F, p, 1e-12, 10000);
    const auto direct = cosh_invert_direct(F, p);
    rec.at_most("contraction " + label, n, it.report.measured_ratio, p.contraction() + 0.02);
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = it.f[i] - direct.f[i];
    rec.at_most("direct vs Neumann " + label, n, norm(GridFn(t, d), Space::Ld2), 1e-8);
    rec.at_most("direct round trip " + label, n, relative_lm_error(direct.f, f), 1e-8);
  }

  for (double mu : {3.0, 4.0}) {
    const auto c = condition_estimate(WeightParam::cosh(mu), n);
    rec.at_most("condition number mu = " + std::to_string(mu).substr(0, 3), n, c.measured,
                c.bound * (1.0 + 1e-6));
  }
}


void once_suite(Recorder& rec, const VerifyOptions& opts) {
  {
    const auto p = WeightParam::cosh(1.0);
    for (auto kind : {KernelKind::Kd, KernelKind::Km}) {
      const bool d = kind == KernelKind::Kd;
      const Grid g(d ? NodeKind::T : NodeKind::S, kKernelFormN);
      const auto k = kernel(kind, p, g);
      rec.at_most(std::string("kernel parity ") + (d ? "Kd" : "Km"), kKernelFormN,
                  std::abs(k(0.5) - k(-0.5)), 1e-10);
      const auto f = d ? GridFn::sample(g, smooth_test_fn)
                       : GridFn::sample(g, [](double x) { return (x + x * x * x) / weight_w(x); });
      rec.at_most(std::string("kernel form ") + (d ? "Kd" : "Km"), kKernelFormN,
                  max_abs_diff(composite_operator(kind, p, f).values,
                               kernel_form_operator(kind, p, f).values),
                  1e-3);
    }
    const auto k = kernel(KernelKind::Kd, p, Grid(NodeKind::T, 64));
    const double oracle = -pv_fht_over_w([](double x) { return std::tanh(x); }, 0.3, kOraclePoints);
    rec.at_most("kernel Kd against oracle", 64, std::abs(k(0.3) - oracle), 1e-6);
  }
  {
    constexpr std::size_t n = 64;
    const auto p = WeightParam::cosh(0.5);
    const Grid s(NodeKind::S, n);
    const Grid u(NodeKind::U, n);
    const auto fn = [](double x) { return 2.0 * x * weight_w(x); };
    const Evaluator ev{fn, {}};
    const auto F = GridFn::sample(u, [&](double x) { return cosh_pv_forward(ev, x, p, kOraclePoints).value; });
    const auto f = GridFn::sample(s, fn);
    const auto sol = cosh_invert_mean_constrained(F, p, weighted_mean(f, p), 1e-12, 1000);
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = sol.f[i] - f[i];
    rec.at_most("mean-constrained round trip mu = 0.5", n,
                norm(GridFn(s, d), Space::Lm2) / norm(f, Space::Lm2), 1e-6);
    rec.at_most("mean-constrained contraction mu = 0.5", n, sol.report.measured_ratio,
                p.contraction() + 0.02);
  }
  {
    const Evaluator ev{[](double x) { return weight_w(x); }, {}};
    const double e1 = std::abs(pv_fht(ev, 0.5, 1024).value - 0.5);
    const double e2 = std::abs(pv_fht(ev, 0.5, 2048).value - 0.5);
    rec.at_least("oracle convergence factor per doubling", 2048, e1 / e2, 3.0);
    const double z = std::max(std::abs(pv_fht_over_w([](double) { return 1.0; }, 0.2, 4096)),
                              std::abs(pv_fht_over_w([](double) { return 1.0; }, 0.6, 4096)));
    rec.at_most("oracle PV of 1/w vanishes", 4096, z, 1e-4);
  }
  {
    const auto rows = null_experiment(WeightParam::cosh(3.0), {64, 128, 256, 512});
    double finite = 0.0;
    for (const auto& r : rows) finite += std::isfinite(r.norm_ld) && std::isfinite(r.norm_lm);
    rec.at_least("null experiment rows", 512, finite, 4.0);
  }
  if (opts.extra) {
    const auto& p = *opts.extra;
    constexpr std::size_t n = 256;
    const auto c = condition_estimate(p, n);
    const bool cosh = p.flavor() == WeightParam::Flavor::CoshReal;
    const std::string label = (cosh ? "mu = " : "eta = ") + std::to_string(p.value()).substr(0, 4);
    rec.at_most("condition number " + label, n, c.measured, c.bound * (1.0 + 1e-6));
    if (cosh && p.value() == 4.0) {
      rec.at_most("condition bound matches 1490.5", n, std::abs(c.bound - kPaperConditionBound),
                  0.05);
    }
    if (!cosh || std::abs(p.value()) <= 2.0) {
      const Grid t(NodeKind::T, n);
      const auto F = cosh_forward(GridFn::sample(t, smooth_test_fn), p);
      const auto it = cosh_invert_neumann(F, p, 1e-12, 10000);
      rec.at_most("contraction " + label, n, it.report.measured_ratio, p.contraction() + 0.02);
    }
  }
}

}  // namespace

bool VerifySummary::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

VerifySummary run_verify(const VerifyOptions& opts, std::ostream* log) {
  const auto start = std::chrono::steady_clock::now();
  VerifySummary summary;
  Recorder rec(summary.results, log);
  std::mt19937_64 rng(20240601);

  for (std::size_t n : opts.sizes) {
    spectral_suite(rec, n, rng);
    cosh_suite(rec, n);
  }
  once_suite(rec, opts);

  summary.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::string summary_json(const VerifySummary& summary) {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& r : summary.results) {
    props.push_back({{"name", r.name},
                     {"n", r.n},
                     {"value", r.value},
                     {"threshold", r.threshold},
                     {"relation", r.relation == Relation::AtMost ? "<=" : ">="},
                     {"pass", r.pass}});
  }
  nlohmann::json j{{"command", "verify"},
                   {"passed", summary.all_passed()},
                   {"wall_time_ms", summary.wall_time_ms},
                   {"properties", props}};
  return j.dump(2);
}

}  // namespace fht::cli
