#ifndef TBTINV_THETA_HPP
#define TBTINV_THETA_HPP

#include "tbtinv/extraction.hpp"
#include "tbtinv/types.hpp"

namespace tbtinv {

/// Bivariate polynomial in (l1, l2); coeffs(a, b) multiplies l1^a l2^b.
struct BivarPoly {
  CMat coeffs;

  int deg1() const { return static_cast<int>(coeffs.rows()) - 1; }
  int deg2() const { return static_cast<int>(coeffs.cols()) - 1; }

  Complex eval(Complex l1, Complex l2) const;
};

/// q(l) = (l1 - i/2)^n (l2 - i/2)^m.
Complex q_poly(Complex l1, Complex l2, int m, int n);

/// The 2(m+n)-order matrix function G(l) built around g12/g21.
CMat assemble_g(const GPair& gp, Complex l1, Complex l2);

/// Skew-symmetrization diag{J_{2m} U_{2m}, -J_{2n} U_{2n}} G(l); throws
/// IntegrityError when the result is not skew (corrupted pair).
CMat skew_g(const GPair& gp, Complex l1, Complex l2);

struct ThetaResult {
  BivarPoly theta;
  /// Leading coefficient of the Pfaffian polynomial before normalization;
  /// must have magnitude 1 for an admissible pair.
  Complex raw_leading{};
};

/// theta(l) = sqrt(det G(l)) as a polynomial of degree (n, m), computed by
/// Pfaffian evaluation on a tensor grid and interpolation, normalized so
/// the coefficient of l1^n l2^m equals -1.
ThetaResult theta_poly(const GPair& gp);

/// Scalar cross-check K T^{-1} (A_2 - l2 I)^{-1} (A_1 - l1 I)^{-1} 1.
Complex theta_tilde(const TbtSymbol& sym, Complex l1, Complex l2);

}  // namespace tbtinv

#endif
