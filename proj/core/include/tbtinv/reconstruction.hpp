#ifndef TBTINV_RECONSTRUCTION_HPP
#define TBTINV_RECONSTRUCTION_HPP

#include <cstdint>

#include "tbtinv/extraction.hpp"
#include "tbtinv/theta.hpp"
#include "tbtinv/types.hpp"

namespace tbtinv {

/// Node-placement knobs for the recovery grids.
struct GridOptions {
  double radius_lambda = 0.9;       // psi-image radius of the lambda nodes
  double radius_mu = 1.1;           // zeta-image radius of the mu nodes
  double collision_threshold = 0.05;  // min |lambda_p - mu_p| for the omega pole
  int max_redraws = 8;
  double cond_limit = 1e10;  // admissible kappa for G(lambda) and the Vandermonde factors
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// u-hat recovered from g12 alone: -i (l1-i/2)^{-n} (l2-i/2)^{-m} theta(l)
/// G(l)^{-1} col[0; 1_m; 0; 1_n].
CVec u_hat(const GPair& gp, const BivarPoly& theta, Complex l1, Complex l2);

/// Definitional u-hat and u built from Gamma/GammaHat and resolvents;
/// these are the oracles for the recovery formulas.
CVec u_hat_direct(const TbtSymbol& sym, Complex l1, Complex l2);
CRow u_direct(const TbtSymbol& sym, Complex u1, Complex u2);

/// u recovered from u-hat by the flip/signature transform.
CRow u_row(const GPair& gp, const BivarPoly& theta, Complex u1, Complex u2);

/// omega = i (lambda_p - mu_p)^{-1} u(mu) P_p u-hat(lambda), p in {1, 2}.
Complex omega(const GPair& gp, const BivarPoly& theta, Complex l1, Complex l2,
              Complex u1, Complex u2, int p = 1);

/// Recover the full mn x mn matrix R from the pair alone by sampling omega
/// on tensor grids and solving the two Kronecker-Vandermonde systems.
CMat recover_r(const GPair& gp, const BivarPoly& theta, const GridOptions& opt = {});
CMat recover_r(const GPair& gp, const GridOptions& opt = {});

/// rho(y, z) = h(conj z)^* R h(y); coefficients of rho are the entries of R.
Complex rho_eval(const CMat& r, int m, int n, Complex y1, Complex y2, Complex z1,
                 Complex z2);

/// rho via omega and the Moebius change of variables.
Complex rho_from_omega(const GPair& gp, const BivarPoly& theta, Complex y1, Complex y2,
                       Complex z1, Complex z2);

}  // namespace tbtinv

#endif
