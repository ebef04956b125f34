#ifndef TBTINV_STRUCTURED_HPP
#define TBTINV_STRUCTURED_HPP

#include "tbtinv/symbol.hpp"
#include "tbtinv/types.hpp"

namespace tbtinv::structured {

/// Discrete-integration operators: the big shift operators A_1, A_2 of
/// order mn and their scalar analogs of orders n and m.
struct AOperators {
  CMat a1;   // mn x mn, block lower triangular
  CMat a2;   // mn x mn, block diagonal of n lower-triangular Toeplitz blocks
  CMat sa1;  // n x n scalar analog of a1
  CMat sa2;  // m x m scalar analog of a2 (equals one diagonal block of a2)
};

AOperators build_a(int m, int n);

/// Lower-triangular Toeplitz block with i/2 on the diagonal and i below;
/// building block of all A operators.
CMat lower_shift(int r);

/// Anti-identity of the given order.
CMat flip(int size);

/// diag{I_r, -I_r} of order 2r.
CMat signature(int r);

struct MBlocks {
  CMat m11;  // mn x m
  CMat m21;  // m x mn
  CMat m31;  // mn x m  (= m21^*)
  CMat m41;  // m x mn
  CMat m12;  // mn x n
  CMat m22;  // n x mn
  CMat m32;  // mn x n  (= m22^*)
  CMat m42;  // n x mn
};

MBlocks build_m_blocks(const TbtSymbol& sym);

struct KBlocks {
  CRow k;    // 1 x mn
  CMat k11;  // n x m
  CMat k12;  // m x n
};

KBlocks build_k_blocks(const TbtSymbol& sym);

struct PiPair {
  CMat pi;      // mn x 2m (p=1) or mn x 2n (p=2)
  CMat pi_hat;  // 2m x mn (p=1) or 2n x mn (p=2)
};

PiPair build_pi(const TbtSymbol& sym, int p);

/// Relative Frobenius residual of A_p T - T A_p^* = i Pi_p PiHat_p.
double verify_identity(const TbtSymbol& sym, int p);

/// Relative residual of the auxiliary identity for the M_4p blocks,
/// valid for (s, p) in {(1, 2), (2, 1)}.
double verify_aux_identity(const TbtSymbol& sym, int s, int p);

/// psi(l) = (l + i/2) / (l - i/2); pole at l = i/2.
Complex mobius_psi(Complex l);

/// phi(x) = (i/2)(x + 1) / (x - 1), inverse of psi; pole at x = 1.
Complex mobius_phi(Complex x);

/// Closed-form (A_2 - l2 I)^{-1} (A_1 - l1 I)^{-1} 1 (length mn).
CVec resolvent_col(Complex l1, Complex l2, int m, int n);

/// Closed-form 1^* (A_1^* - u1 I)^{-1} (A_2^* - u2 I)^{-1} (length mn).
CRow resolvent_row(Complex u1, Complex u2, int m, int n);

/// Scalar-block resolvents: (lower_shift(r) - l I)^{-1} 1_r and
/// 1_r^* (lower_shift(r)^* - u I)^{-1}.
CVec scalar_resolvent_col(Complex l, int r);
CRow scalar_resolvent_row(Complex u, int r);

}  // namespace tbtinv::structured

#endif
