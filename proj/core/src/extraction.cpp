#include "tbtinv/extraction.hpp"

#include "tbtinv/linalg.hpp"
#include "tbtinv/structured.hpp"

namespace tbtinv {

using structured::flip;
using structured::signature;

GPair GPair::from_g12(CMat g12, int m, int n) {
  if (g12.rows() != 2 * m || g12.cols() != 2 * n) {
    throw std::invalid_argument("GPair: g12 must be 2m x 2n");
  }
  if (!all_finite(g12)) throw std::invalid_argument("GPair: g12 has non-finite entries");
  GPair gp;
  gp.m = m;
  gp.n = n;
  gp.g21 = g21_from_g12(g12, m, n);
  gp.g12 = std::move(g12);
  return gp;
}

CMat g21_from_g12(const CMat& g12, int m, int n) {
  if (g12.rows() != 2 * m || g12.cols() != 2 * n) {
    throw std::invalid_argument("g21_from_g12: shape mismatch");
  }
  return -flip(2 * n) * signature(n) * g12.transpose() * signature(m) * flip(2 * m);
}

CMat g12_from_g21(const CMat& g21, int m, int n) {
  if (g21.rows() != 2 * n || g21.cols() != 2 * m) {
    throw std::invalid_argument("g12_from_g21: shape mismatch");
  }
  // U J (.) J U undoes the flip/sign algebra; transpose last.
  return (-signature(n) * flip(2 * n) * g21 * flip(2 * m) * signature(m)).transpose();
}

Extraction extract_g(const TbtSymbol& sym) {
  const int m = sym.m, n = sym.n;
  const CMat r = linalg::inverse(assemble(sym));
  const auto pi1 = structured::build_pi(sym, 1);
  const auto pi2 = structured::build_pi(sym, 2);
  const auto kb = structured::build_k_blocks(sym);

  CMat corr12 = CMat::Zero(2 * m, 2 * n);
  corr12.block(0, 0, m, n) = CMat::Ones(m, n);
  corr12.block(m, 0, m, n) = kb.k12;
  CMat corr21 = CMat::Zero(2 * n, 2 * m);
  corr21.block(0, 0, n, m) = CMat::Ones(n, m);
  corr21.block(n, 0, n, m) = kb.k11;

  const CMat g12 = iu * (pi1.pi_hat * r * pi2.pi) - iu * corr12;
  const CMat g21_def = iu * (pi2.pi_hat * r * pi1.pi) - iu * corr21;

  Extraction out;
  out.pair = GPair::from_g12(g12, m, n);
  const double denom = std::max(1.0, max_abs(g21_def));
  out.g21_discrepancy = max_abs(g21_def - out.pair.g21) / denom;
  return out;
}

GammaSet gammas(const TbtSymbol& sym) {
  const CMat r = linalg::inverse(assemble(sym));
  const auto pi1 = structured::build_pi(sym, 1);
  const auto pi2 = structured::build_pi(sym, 2);
  GammaSet g;
  g.gamma1 = r * pi1.pi;
  g.gamma_hat1 = pi1.pi_hat * r;
  g.gamma2 = r * pi2.pi;
  g.gamma_hat2 = pi2.pi_hat * r;
  return g;
}

}  // namespace tbtinv
