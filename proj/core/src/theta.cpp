#include "tbtinv/theta.hpp"

#include <random>

#include "tbtinv/linalg.hpp"
#include "tbtinv/structured.hpp"

namespace tbtinv {

namespace {

const Complex kHalfI{0.0, 0.5};

CMat real_vandermonde(const Eigen::VectorXd& nodes) {
  const Eigen::Index k = nodes.size();
  CMat v(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    Complex p = 1.0;
    for (Eigen::Index j = 0; j < k; ++j) {
      v(i, j) = p;
      p *= nodes(i);
    }
  }
  return v;
}

}  // namespace

Complex BivarPoly::eval(Complex l1, Complex l2) const {
  // Horner in l1 of Horner evaluations in l2.
  Complex acc = 0.0;
  for (Eigen::Index a = coeffs.rows() - 1; a >= 0; --a) {
    Complex row = 0.0;
    for (Eigen::Index b = coeffs.cols() - 1; b >= 0; --b) {
      row = row * l2 + coeffs(a, b);
    }
    acc = acc * l1 + row;
  }
  return acc;
}

Complex q_poly(Complex l1, Complex l2, int m, int n) {
  return std::pow(l1 - kHalfI, n) * std::pow(l2 - kHalfI, m);
}

CMat assemble_g(const GPair& gp, Complex l1, Complex l2) {
  const int m = gp.m, n = gp.n;
  const CMat b2 = structured::lower_shift(m) - l2 * CMat::Identity(m, m);
  const CMat b1 = structured::lower_shift(n) - l1 * CMat::Identity(n, n);
  CMat g = CMat::Zero(2 * (m + n), 2 * (m + n));
  g.block(0, 0, m, m) = b2;
  g.block(m, m, m, m) = b2;
  g.block(0, 2 * m, 2 * m, 2 * n) = gp.g12;
  g.block(2 * m, 0, 2 * n, 2 * m) = gp.g21;
  g.block(2 * m, 2 * m, n, n) = b1;
  g.block(2 * m + n, 2 * m + n, n, n) = b1;
  return g;
}

namespace {

CMat skew_prefactor(int m, int n) {
  CMat pre = CMat::Zero(2 * (m + n), 2 * (m + n));
  pre.block(0, 0, 2 * m, 2 * m) = structured::signature(m) * structured::flip(2 * m);
  pre.block(2 * m, 2 * m, 2 * n, 2 * n) =
      -structured::signature(n) * structured::flip(2 * n);
  return pre;
}

}  // namespace

CMat skew_g(const GPair& gp, Complex l1, Complex l2) {
  const int m = gp.m, n = gp.n;
  const CMat breve = skew_prefactor(m, n) * assemble_g(gp, l1, l2);
  const double asym = max_abs(breve + breve.transpose());
  if (asym > 1e-12 * std::max(1.0, max_abs(breve))) {
    throw IntegrityError("skew_g: skew-symmetrization failed; corrupted GPair");
  }
  return breve;
}

ThetaResult theta_poly(const GPair& gp) {
  const int m = gp.m, n = gp.n;
  // det(prefactor) = 1 is what makes det(skew_g) = det(G); assert it instead
  // of trusting the sign bookkeeping.
  if (std::abs(linalg::determinant(skew_prefactor(m, n)) - 1.0) > 1e-9) {
    throw IntegrityError("theta_poly: skew prefactor determinant is not 1");
  }
  std::mt19937_64 rng(0x7e7a5eedULL);
  std::uniform_real_distribution<double> jitter(-0.15, 0.15);

  std::string last_error = "theta_poly: interpolation failed";
  for (int attempt = 0; attempt < 4; ++attempt) {
    Eigen::VectorXd nodes1(n + 1), nodes2(m + 1);
    for (int a = 0; a <= n; ++a) nodes1(a) = a + 0.37 + (attempt ? jitter(rng) : 0.0);
    for (int b = 0; b <= m; ++b) nodes2(b) = b + 0.37 + (attempt ? jitter(rng) : 0.0);

    try {
      CMat samples(n + 1, m + 1);
      for (int a = 0; a <= n; ++a) {
        for (int b = 0; b <= m; ++b) {
          samples(a, b) = linalg::pfaffian(skew_g(gp, nodes1(a), nodes2(b)));
        }
      }
      CMat c = linalg::lu_solve(real_vandermonde(nodes1), samples);
      c = linalg::lu_solve(real_vandermonde(nodes2), c.transpose()).transpose();

      ThetaResult out;
      out.raw_leading = c(n, m);
      if (std::abs(std::abs(out.raw_leading) - 1.0) > 1e-6) {
        throw IntegrityError(
            "theta_poly: leading Pfaffian coefficient is not of magnitude 1; "
            "GPair is not realizable or numerically degenerate");
      }
      out.theta.coeffs = c * (-1.0 / out.raw_leading);
      out.theta.coeffs(n, m) = Complex{-1.0, 0.0};  // exact by normalization
      return out;
    } catch (const IntegrityError&) {
      throw;  // not a node-placement problem; no retry
    } catch (const std::runtime_error& e) {
      last_error = e.what();
    }
  }
  throw IntegrityError(std::string("theta_poly: nodes exhausted: ") + last_error);
}

Complex theta_tilde(const TbtSymbol& sym, Complex l1, Complex l2) {
  const auto kb = structured::build_k_blocks(sym);
  const CMat r = linalg::inverse(assemble(sym));
  const CVec col = structured::resolvent_col(l1, l2, sym.m, sym.n);
  return (kb.k * r * col)(0);
}

}  // namespace tbtinv
