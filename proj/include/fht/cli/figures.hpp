#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "fht/cheb_core.hpp"
#include "fht/pv_oracle.hpp"
#include "fht/weight_param.hpp"

namespace fht::cli {

struct RecoveryResult {
  GridFn original;
  GridFn recovered;
  /// ||recovered - original||_Lm / ||original||_Lm on the T-nodes.
  double relative_error = 0.0;
  std::filesystem::path csv;
  std::filesystem::path svg;
};

/// f of the shifted pair on the display grid; F and F~_mu = F_mu / cosh(mu s)
/// on the display grid, F~_mu computed spectrally at fine_n and interpolated
/// from its downsampled values at n.
void figure1(std::size_t n, std::size_t fine_n, double mu,
             const std::filesystem::path& out_dir);

/// Inverts the closed-form F of the shifted pair on S-nodes of size n.
RecoveryResult figure2(std::size_t n, const std::filesystem::path& out_dir);

/// Generates F~_mu spectrally at fine_n, downsamples to n, inverts by the
/// direct cosh solver.
RecoveryResult figure3(std::size_t n, std::size_t fine_n, double mu,
                       const std::filesystem::path& out_dir);

/// F_mu on S-nodes of size n from the spectral forward at fine_n, with
/// F~_mu = F_mu / k(s) as the interpolated quantity.
GridFn downsampled_cosh_data(const RealFn& f, std::size_t n, std::size_t fine_n,
                             const WeightParam& p);

/// Relative L_m error of a on T-nodes, against b.
double relative_lm_error(const GridFn& a, const GridFn& b);

}  // namespace fht::cli
