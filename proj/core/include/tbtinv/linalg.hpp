#ifndef TBTINV_LINALG_HPP
#define TBTINV_LINALG_HPP

#include "tbtinv/types.hpp"

namespace tbtinv::linalg {

/// Solve A X = B by LU with partial pivoting. Throws SingularMatrixError
/// when the smallest pivot is negligible relative to the largest one.
CMat lu_solve(const CMat& a, const CMat& b);

CMat inverse(const CMat& a);

/// Determinant via the same pivoted LU (test oracle for the Pfaffian).
Complex determinant(const CMat& a);

/// 1-norm condition number estimate; +inf for singular input.
double condition_estimate(const CMat& a);

/// Number of singular values above tol * sigma_max.
int numerical_rank(const CMat& a, double tol = 1e-10);

/// Pfaffian of an even-order skew-symmetric matrix (skew in the plain
/// transpose sense) by Parlett-Reid tridiagonalization with pivoting.
/// The permutation parity is tracked, so the sign is exact and
/// pf(S)^2 = det(S).
Complex pfaffian(const CMat& s, double skew_tol = 1e-10);

}  // namespace tbtinv::linalg

#endif
