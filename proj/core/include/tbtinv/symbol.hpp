#ifndef TBTINV_SYMBOL_HPP
#define TBTINV_SYMBOL_HPP

#include <cstdint>
#include <utility>

#include "tbtinv/types.hpp"

namespace tbtinv {

/// Generating coefficients t_r^(s) of a Toeplitz-block-Toeplitz matrix,
/// r in [-(n-1), n-1] (outer block offset), s in [-(m-1), m-1] (inner offset).
struct TbtSymbol {
  int m = 1;  // inner block order
  int n = 1;  // number of blocks per side
  CMat coeffs;  // (2n-1) x (2m-1); coeffs(r+n-1, s+m-1) = t_r^(s)

  TbtSymbol() : coeffs(CMat::Zero(1, 1)) {}
  TbtSymbol(int m_, int n_) : m(m_), n(n_), coeffs(CMat::Zero(2 * n_ - 1, 2 * m_ - 1)) {
    if (m_ < 1 || n_ < 1) throw std::invalid_argument("TbtSymbol: m, n must be >= 1");
  }

  Complex& at(int r, int s) { return coeffs(r + n - 1, s + m - 1); }
  const Complex& at(int r, int s) const { return coeffs(r + n - 1, s + m - 1); }

  int order() const { return m * n; }
};

/// Dense mn x mn matrix with entry (m(i-1)+j, m(k-1)+l) = t_{i-k}^{(j-l)}.
CMat assemble(const TbtSymbol& sym);

/// Nearest TBT symbol (mean over each (r, s) diagonal class) and the
/// max-norm deviation of A from its TBT projection, normalized by max|A|.
std::pair<TbtSymbol, double> project_tbt(const CMat& a, int m, int n);

/// Seeded random symbol: coefficients uniform in [-1,1]^2, then t_0^(0)
/// shifted by dominance * m * n to bias toward invertibility.
TbtSymbol random_symbol(int m, int n, std::uint64_t seed, double dominance = 0.0);

}  // namespace tbtinv

#endif
