#pragma once

#include <complex>
#include <vector>

#include "theta/certified.hpp"
#include "theta/characteristic.hpp"
#include "theta/siegel.hpp"

namespace theta {

// Evaluation of the classical theta function with characteristics,
//
//   Theta[eps; eps'](z, tau) =
//     sum over l in Z^g of exp 2 pi i { (1/2) (l + eps/2)^T tau (l + eps/2)
//                                      + (l + eps/2)^T (z + eps'/2) },
//
// truncated to the box ||l + eps/2 + c||_inf <= R centered on the Gaussian
// peak, c = (Im tau)^{-1} Im z. The radius comes from a union bound on the
// Gaussian tail using the cached eigenvalue bound b <= lambda_min(Im tau):
// R starts at the smallest integer with
//
//   (2R+3)^g * exp(-pi b (R - ||eps/2||_inf - ||c||_inf)^2) < tol
//
// and is bumped until the exact ring-sum tail bound (including the
// exp(pi c^T Im(tau) c) growth factor for z != 0) certifies err < tol.
// Summation is plain lexicographic over the box, so results are bit-identical
// across runs; EvalParams::compensated turns on Kahan accumulation where
// residual budgets are tight.
struct EvalParams {
    double tol = 1e-12;
    int max_radius = 200;
    bool compensated = false;
};

CertifiedComplex theta(const Characteristic& ch, const std::vector<std::complex<double>>& z,
                       const SiegelMatrix& tau, const EvalParams& params = {});

// theta at z = 0; returns exact 0 (err 0) for integral odd characteristics.
CertifiedComplex theta_constant(const Characteristic& ch, const SiegelMatrix& tau,
                                const EvalParams& params = {});

// Multiplier in Theta[ch](z + n + tau m, tau) = factor * Theta[ch](z, tau):
//   exp 2 pi i { (n.eps - m.eps')/2 - m.z - (1/2) m^T tau m }.
std::complex<double> quasi_period_factor(const Characteristic& ch,
                                         const std::vector<std::complex<double>>& z,
                                         const std::vector<int>& n, const std::vector<int>& m,
                                         const SiegelMatrix& tau);

} // namespace theta
