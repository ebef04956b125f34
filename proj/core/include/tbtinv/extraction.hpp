#ifndef TBTINV_EXTRACTION_HPP
#define TBTINV_EXTRACTION_HPP

#include "tbtinv/symbol.hpp"
#include "tbtinv/types.hpp"

namespace tbtinv {

/// Minimal-information pair: g12 is 2m x 2n, g21 the flip/signature image
/// of g12 (enforced at construction, single source of truth).
struct GPair {
  int m = 1;
  int n = 1;
  CMat g12;
  CMat g21;

  static GPair from_g12(CMat g12, int m, int n);
};

/// g21 = -U_{2n} J_{2n} g12^T J_{2m} U_{2m}.
CMat g21_from_g12(const CMat& g12, int m, int n);

/// Inverse of the transform above (the same flip/sign pattern solved for g12).
CMat g12_from_g21(const CMat& g21, int m, int n);

struct Extraction {
  GPair pair;
  /// Max relative gap between the definitional g21 and the one obtained by
  /// transforming g12; a free integrity check on the whole block assembly.
  double g21_discrepancy = 0.0;
};

/// Compute g12 (and g21) from an invertible TBT matrix.
Extraction extract_g(const TbtSymbol& sym);

struct GammaSet {
  CMat gamma1;      // mn x 2m
  CMat gamma_hat1;  // 2m x mn
  CMat gamma2;      // mn x 2n
  CMat gamma_hat2;  // 2n x mn
};

/// Gamma_p = T^{-1} Pi_p, GammaHat_p = PiHat_p T^{-1}.
GammaSet gammas(const TbtSymbol& sym);

}  // namespace tbtinv

#endif
