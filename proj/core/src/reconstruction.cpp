#include "tbtinv/reconstruction.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "tbtinv/linalg.hpp"
#include "tbtinv/structured.hpp"

namespace tbtinv {

namespace {

const Complex kHalfI{0.0, 0.5};

CVec unit_stack(int m, int n) {
  CVec e = CVec::Zero(2 * (m + n));
  e.segment(m, m).setOnes();
  e.segment(2 * m + n, n).setOnes();
  return e;
}

CMat transform_jmu(int m, int n) {
  CMat d = CMat::Zero(2 * (m + n), 2 * (m + n));
  d.block(0, 0, 2 * m, 2 * m) = structured::signature(m) * structured::flip(2 * m);
  d.block(2 * m, 2 * m, 2 * n, 2 * n) =
      structured::signature(n) * structured::flip(2 * n);
  return d;
}

Complex mu_prefactor(Complex u1, Complex u2, int m, int n) {
  if (std::abs(u1 + kHalfI) < 1e-8 || std::abs(u2 + kHalfI) < 1e-8) {
    throw PoleError("u_row: mu too close to -i/2");
  }
  return std::pow((u1 - kHalfI) / (u1 + kHalfI), n) *
         std::pow((u2 - kHalfI) / (u2 + kHalfI), m);
}

}  // namespace

CVec u_hat(const GPair& gp, const BivarPoly& theta, Complex l1, Complex l2) {
  if (std::abs(l1 - kHalfI) < 1e-8 || std::abs(l2 - kHalfI) < 1e-8) {
    throw PoleError("u_hat: lambda too close to i/2");
  }
  const int m = gp.m, n = gp.n;
  const Complex pre =
      -iu * std::pow(l1 - kHalfI, -n) * std::pow(l2 - kHalfI, -m) * theta.eval(l1, l2);
  const CMat g = assemble_g(gp, l1, l2);
  return pre * linalg::lu_solve(g, unit_stack(m, n));
}

CVec u_hat_direct(const TbtSymbol& sym, Complex l1, Complex l2) {
  const int m = sym.m, n = sym.n;
  const GammaSet gs = gammas(sym);
  CMat gamma_hat(2 * (m + n), m * n);
  gamma_hat << gs.gamma_hat1, gs.gamma_hat2;
  CVec u = gamma_hat * structured::resolvent_col(l1, l2, m, n);
  u.segment(m, m) += iu * structured::scalar_resolvent_col(l2, m);
  u.segment(2 * m + n, n) += iu * structured::scalar_resolvent_col(l1, n);
  return u;
}

CRow u_direct(const TbtSymbol& sym, Complex u1, Complex u2) {
  const int m = sym.m, n = sym.n;
  const GammaSet gs = gammas(sym);
  CMat gamma(m * n, 2 * (m + n));
  gamma << gs.gamma1, gs.gamma2;
  CRow u = structured::resolvent_row(u1, u2, m, n) * gamma;
  u.segment(0, m) -= iu * structured::scalar_resolvent_row(u2, m);
  u.segment(2 * m, n) -= iu * structured::scalar_resolvent_row(u1, n);
  return u;
}

CRow u_row(const GPair& gp, const BivarPoly& theta, Complex u1, Complex u2) {
  const Complex pre = mu_prefactor(u1, u2, gp.m, gp.n);
  const CVec uh = u_hat(gp, theta, u1, u2);
  return pre * uh.transpose() * transform_jmu(gp.m, gp.n);
}

Complex omega(const GPair& gp, const BivarPoly& theta, Complex l1, Complex l2,
              Complex u1, Complex u2, int p) {
  if (p != 1 && p != 2) throw std::invalid_argument("omega: p must be 1 or 2");
  const Complex lp = (p == 1) ? l1 : l2;
  const Complex up = (p == 1) ? u1 : u2;
  if (std::abs(lp - up) < 1e-10) {
    throw PoleError("omega: lambda_p equals mu_p; use the other branch or move the grid");
  }
  const CRow u = u_row(gp, theta, u1, u2);
  const CVec uh = u_hat(gp, theta, l1, l2);
  const int m = gp.m, n = gp.n;
  Complex dot;
  if (p == 1) {
    dot = (u.head(2 * m) * uh.head(2 * m))(0, 0);
  } else {
    dot = (u.tail(2 * n) * uh.tail(2 * n))(0, 0);
  }
  return iu / (lp - up) * dot;
}

CMat recover_r(const GPair& gp, const BivarPoly& theta, const GridOptions& opt) {
  const int m = gp.m, n = gp.n;
  const int mn = m * n;
  constexpr double tau = 2.0 * std::numbers::pi;

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> shift(0.0, 1.0);

  std::string diag = "recover_r: no admissible grid found";
  for (int attempt = 0; attempt <= opt.max_redraws; ++attempt) {
    // psi-images of the lambda nodes and zeta-images of the mu nodes sit on
    // circles of distinct radii; a deterministic rotation decouples redraws.
    const double rot_l = attempt == 0 ? 0.0 : shift(rng);
    const double rot_u = attempt == 0 ? 0.31 : shift(rng);
    std::vector<Complex> l1(n), l2(m), u1(n), u2(m);
    try {
      for (int a = 0; a < n; ++a) {
        l1[a] = structured::mobius_phi(
            opt.radius_lambda * std::polar(1.0, tau * (a + rot_l) / n));
        u1[a] = -structured::mobius_phi(
            opt.radius_mu * std::polar(1.0, tau * (a + rot_u) / n));
      }
      for (int b = 0; b < m; ++b) {
        l2[b] = structured::mobius_phi(
            opt.radius_lambda * std::polar(1.0, tau * (b + rot_l) / m));
        u2[b] = -structured::mobius_phi(
            opt.radius_mu * std::polar(1.0, tau * (b + rot_u) / m));
      }

      // Branch choice: p = 1 needs the first coordinates separated.
      int p = 1;
      auto separated = [&](const std::vector<Complex>& xs, const std::vector<Complex>& ys) {
        for (const auto& x : xs)
          for (const auto& y : ys)
            if (std::abs(x - y) < opt.collision_threshold) return false;
        return true;
      };
      if (!separated(l1, u1)) {
        if (separated(l2, u2)) p = 2;
        else throw PoleError("recover_r: grid collision in both coordinates");
      }

      for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) {
          if (linalg::condition_estimate(assemble_g(gp, l1[a], l2[b])) > opt.cond_limit) {
            throw SingularMatrixError("recover_r: G singular on lambda grid", 0.0);
          }
          if (linalg::condition_estimate(assemble_g(gp, u1[a], u2[b])) > opt.cond_limit) {
            throw SingularMatrixError("recover_r: G singular on mu grid", 0.0);
          }
        }

      // V columns: resolvent columns over the lambda grid; W rows: resolvent
      // rows over the mu grid. Both are Kronecker-Vandermonde matrices.
      CMat v(mn, mn), w(mn, mn), om(mn, mn);
      auto grid_index = [m](int a, int b) { return m * a + b; };
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b)
          v.col(grid_index(a, b)) = structured::resolvent_col(l1[a], l2[b], m, n);
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < m; ++d)
          w.row(grid_index(c, d)) = structured::resolvent_row(u1[c], u2[d], m, n);

      if (linalg::condition_estimate(v) > opt.cond_limit ||
          linalg::condition_estimate(w) > opt.cond_limit) {
        throw SingularMatrixError("recover_r: ill-conditioned Vandermonde factor", 0.0);
      }

      for (int c = 0; c < n; ++c)
        for (int d = 0; d < m; ++d)
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < m; ++b)
              om(grid_index(c, d), grid_index(a, b)) =
                  omega(gp, theta, l1[a], l2[b], u1[c], u2[d], p);

      const CMat x = linalg::lu_solve(w, om);
      return linalg::lu_solve(v.transpose(), x.transpose()).transpose();
    } catch (const std::runtime_error& e) {
      diag = e.what();
    }
  }
  throw IntegrityError(std::string("recover_r: redraws exhausted: ") + diag);
}

CMat recover_r(const GPair& gp, const GridOptions& opt) {
  return recover_r(gp, theta_poly(gp).theta, opt);
}

Complex rho_eval(const CMat& r, int m, int n, Complex y1, Complex y2, Complex z1,
                 Complex z2) {
  if (r.rows() != m * n || r.cols() != m * n) {
    throw std::invalid_argument("rho_eval: R must be mn x mn");
  }
  // h(conj z)^* entries are plain monomials in (z1, z2).
  CVec hy(m * n), hz(m * n);
  Complex py1 = 1.0, pz1 = 1.0;
  for (int i = 0; i < n; ++i) {
    Complex py2 = 1.0, pz2 = 1.0;
    for (int j = 0; j < m; ++j) {
      hy(m * i + j) = py1 * py2;
      hz(m * i + j) = pz1 * pz2;
      py2 *= y2;
      pz2 *= z2;
    }
    py1 *= y1;
    pz1 *= z1;
  }
  return (hz.transpose() * r * hy)(0, 0);
}

Complex rho_from_omega(const GPair& gp, const BivarPoly& theta, Complex y1, Complex y2,
                       Complex z1, Complex z2) {
  const Complex fy1 = structured::mobius_phi(y1);
  const Complex fy2 = structured::mobius_phi(y2);
  const Complex fz1 = structured::mobius_phi(z1);
  const Complex fz2 = structured::mobius_phi(z2);
  const Complex pre =
      (kHalfI - fz2) * (kHalfI - fz1) * (kHalfI - fy2) * (kHalfI - fy1);
  // fall back to the second branch when the first sits on the omega pole
  try {
    return pre * omega(gp, theta, fy1, fy2, -fz1, -fz2, 1);
  } catch (const PoleError&) {
    return pre * omega(gp, theta, fy1, fy2, -fz1, -fz2, 2);
  }
}

}  // namespace tbtinv
