#include "tbtinv/symbol.hpp"

#include <random>

namespace tbtinv {

CMat assemble(const TbtSymbol& sym) {
  const int m = sym.m, n = sym.n;
  CMat t(m * n, m * n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= m; ++j)
        for (int l = 1; l <= m; ++l)
          t(m * (i - 1) + j - 1, m * (k - 1) + l - 1) = sym.at(i - k, j - l);
  return t;
}

std::pair<TbtSymbol, double> project_tbt(const CMat& a, int m, int n) {
  if (a.rows() != m * n || a.cols() != m * n) {
    throw std::invalid_argument("project_tbt: matrix must be mn x mn");
  }
  TbtSymbol sym(m, n);
  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(2 * n - 1, 2 * m - 1);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= m; ++j)
        for (int l = 1; l <= m; ++l) {
          sym.at(i - k, j - l) += a(m * (i - 1) + j - 1, m * (k - 1) + l - 1);
          counts(i - k + n - 1, j - l + m - 1) += 1.0;
        }
  sym.coeffs = sym.coeffs.cwiseQuotient(counts.cast<Complex>());

  const double denom = max_abs(a);
  const double dev = denom == 0.0 ? 0.0 : max_abs(a - assemble(sym)) / denom;
  return {std::move(sym), dev};
}

TbtSymbol random_symbol(int m, int n, std::uint64_t seed, double dominance) {
  TbtSymbol sym(m, n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int r = -(n - 1); r <= n - 1; ++r) {
    for (int s = -(m - 1); s <= m - 1; ++s) {
      const double re = dist(rng);
      const double im = dist(rng);
      sym.at(r, s) = Complex{re, im};
    }
  }
  sym.at(0, 0) += dominance * m * n;
  return sym;
}

}  // namespace tbtinv
