#pragma once

#include "fht/cheb_core.hpp"

namespace fht {

/// d-flavor: f in L_d^2 sampled on T-nodes, F in E_d^2 on S-nodes.
/// m-flavor: f in E_m^2 sampled on S-nodes, F in L_m^2 on U-nodes.
enum class Flavor { D, M };

// Sign convention: F(s) = (1/pi) PV int f(t) / (s - t) dt, so that
//   H[w U_n] = T_{n+1},   H[T_{n+1} / w] = -U_n,   H[1 / w] = 0.

/// F = C3 S1^T f. The sample at t_0 = 1 is never read.
GridFn fht_forward_d(const GridFn& f);

/// f = S1 C3^T F. The T_0 component of F (which violates the range
/// condition) is annihilated; f(t_0) = 0.
GridFn fht_inverse_d(const GridFn& F);

/// f w = c_0 + sum_k c_k T_k on S-nodes  ->  F = -sum_n c_{n+1} U_n on U-nodes.
/// The c_0 / w component maps to zero.
GridFn fht_forward_m(const GridFn& f);

/// F = sum e_n U_n on U-nodes  ->  f = -(1/w) sum e_n T_{n+1} on S-nodes.
/// The result has zero mean, <f, 1/w>_m = 0.
GridFn fht_inverse_m(const GridFn& F);

/// First component of C3^T F, (1/sqrt N) sum F(s_m). Zero iff F passes the
/// discrete range condition.
double range_defect(const GridFn& F);

struct PlancherelReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double defect = 0.0;
};

/// D: ||F||^2_Ld against ||f||^2_Ld (f on T-nodes).
/// M: ||F||^2_Lm against ||f||^2_Lm - (int f dt / pi)^2 (f on S-nodes).
PlancherelReport plancherel_check(const GridFn& f, Flavor flavor);

/// F on S-nodes -> a with F = sum a_n T_n (Chebyshev interpolant).
ChebCoeffs t_coefficients(const GridFn& F);

/// f on T-nodes -> a with f = w sum a_n U_{n-1}, i.e. f(cos th) = sum a_n sin(n th).
/// These are also the T-coefficients of fht_forward_d(f).
ChebCoeffs sine_coefficients(const GridFn& f);

/// F on U-nodes -> e with F = sum e_n U_n.
ChebCoeffs u_coefficients(const GridFn& F);

/// f on S-nodes -> c with f w = sum c_k T_k.
ChebCoeffs m_coefficients(const GridFn& f);

/// int f dt for f on S-nodes, (pi/N) sum f(s_m) w(s_m).
double mean_integral(const GridFn& f);

/// H[sum a_n T_n](s) for |s| < 1 in closed form:
/// H[T_n](s) = (T_n(s) ln((1+s)/(1-s)) - P_n(s)) / pi with
/// P_n(s) = int (T_n(t) - T_n(s)) / (t - s) dt.
double fht_tseries(const ChebCoeffs& a, double s);

}  // namespace fht
