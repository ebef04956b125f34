#include "tbtinv/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "tbtinv/linalg.hpp"
#include "tbtinv/structured.hpp"

namespace tbtinv {

namespace {

const Complex kHalfI{0.0, 0.5};

class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

  Complex point() {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (;;) {
      Complex z{d(rng_), d(rng_)};
      if (std::abs(z - kHalfI) > 0.15 && std::abs(z + kHalfI) > 0.15) return z;
    }
  }

  // (lambda, mu) quadruple with both omega branches off-pole
  std::array<Complex, 4> pair() {
    for (;;) {
      auto l1 = point(), l2 = point(), u1 = point(), u2 = point();
      if (std::abs(l1 - u1) > 0.1 && std::abs(l2 - u2) > 0.1) return {l1, l2, u1, u2};
    }
  }

 private:
  std::mt19937_64 rng_;
};

bool wants(const std::vector<std::string>& selection, const std::string& name) {
  return selection.empty() ||
         std::find(selection.begin(), selection.end(), name) != selection.end();
}

CRow annihilator(int m, int n) {
  CRow row = CRow::Zero(2 * (m + n));
  row.segment(0, m).setOnes();
  row.segment(2 * m, n).setConstant(-1.0);
  return row;
}

double scalar_probe(const GPair& gp, Complex nu1, Complex nu2) {
  const int m = gp.m, n = gp.n;
  CRow left = CRow::Zero(2 * (m + n));
  left.segment(m, m).setOnes();
  left.segment(2 * m + n, n).setOnes();
  CMat d = CMat::Zero(2 * (m + n), 2 * (m + n));
  d.block(0, 0, 2 * m, 2 * m) = -structured::signature(m) * structured::flip(2 * m);
  d.block(2 * m, 2 * m, 2 * n, 2 * n) =
      structured::signature(n) * structured::flip(2 * n);
  CVec e = CVec::Zero(2 * (m + n));
  e.segment(m, m).setOnes();
  e.segment(2 * m + n, n).setOnes();
  const CVec sol = linalg::lu_solve(assemble_g(gp, nu1, nu2), e);
  return std::abs((left * d * sol)(0, 0));
}

double theta_factor_residual(const TbtSymbol& sym, const GPair& gp, const BivarPoly& theta,
                          PointSampler& sampler, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Complex l1 = sampler.point(), l2 = sampler.point();
    const Complex q = q_poly(l1, l2, sym.m, sym.n);
    const Complex lhs = theta.eval(l1, l2) + q * (1.0 + theta_tilde(sym, l1, l2));
    worst = std::max(worst, std::abs(lhs) / (1.0 + std::abs(q)));
  }
  return worst;
}

}  // namespace

ReconstructionReport roundtrip(const TbtSymbol& sym, const Tolerances& tol,
                               const GridOptions& grid) {
  ReconstructionReport rep;
  rep.m = sym.m;
  rep.n = sym.n;
  PointSampler sampler(0xab5ULL + 1000 * sym.m + sym.n);

  CMat t, r_true;
  try {
    t = assemble(sym);
    rep.condition_t = linalg::condition_estimate(t);
    r_true = linalg::inverse(t);
  } catch (const std::runtime_error& e) {
    rep.failures.push_back(std::string("inverse: ") + e.what());
    return rep;
  }

  Extraction ex;
  try {
    ex = extract_g(sym);
    rep.g21_discrepancy = ex.g21_discrepancy;
    rep.pass["g21_symmetry"] = ex.g21_discrepancy <= tol.g21;
  } catch (const std::runtime_error& e) {
    rep.failures.push_back(std::string("extract: ") + e.what());
    return rep;
  }

  ThetaResult th;
  try {
    th = theta_poly(ex.pair);
    rep.theta_leading_deviation = std::abs(std::abs(th.raw_leading) - 1.0);
    rep.pass["theta_leading"] = true;  // exact -1 by normalization
    rep.theta_factor_residual = theta_factor_residual(sym, ex.pair, th.theta, sampler, 10);
    rep.pass["theta_factor"] = *rep.theta_factor_residual <= tol.theta_factor;
  } catch (const std::runtime_error& e) {
    rep.failures.push_back(std::string("theta: ") + e.what());
    return rep;
  }

  try {
    const CMat r_rec = recover_r(ex.pair, th.theta, grid);
    rep.condition_r = linalg::condition_estimate(r_rec);
    rep.roundtrip_error = (r_rec - r_true).norm() / r_true.norm();
    rep.pass["roundtrip"] = *rep.roundtrip_error <= tol.roundtrip;
  } catch (const std::runtime_error& e) {
    rep.failures.push_back(std::string("recover: ") + e.what());
    return rep;
  }
  return rep;
}

ReconstructionReport characterize(const CMat& g12, int m, int n, const Tolerances& tol,
                                  const GridOptions& grid) {
  ReconstructionReport rep;
  rep.m = m;
  rep.n = n;

  GPair gp;
  try {
    gp = GPair::from_g12(g12, m, n);
  } catch (const std::exception& e) {
    rep.failures.push_back(std::string("gpair: ") + e.what());
    return rep;
  }

  ThetaResult th;
  try {
    th = theta_poly(gp);
    rep.theta_leading_deviation = std::abs(std::abs(th.raw_leading) - 1.0);
  } catch (const std::runtime_error& e) {
    rep.failures.push_back(std::string("theta: non-realizable input: ") + e.what());
    return rep;
  }

  CMat r;
  try {
    r = recover_r(gp, th.theta, grid);
    rep.condition_r = linalg::condition_estimate(r);
  } catch (const std::runtime_error& e) {
    rep.failures.push_back(std::string("recover: ") + e.what());
    return rep;
  }

  rep.pass["cond_gate"] = *rep.condition_r <= tol.cond_gate;
  if (!rep.pass["cond_gate"]) {
    // near-singular R: the structure statement assumes det R != 0
    return rep;
  }
  try {
    const CMat t = linalg::inverse(r);
    rep.condition_t = linalg::condition_estimate(t);
    const auto [sym, dev] = project_tbt(t, m, n);
    (void)sym;
    rep.tbt_deviation = dev;
    rep.pass["tbt_structure"] = dev <= tol.tbt_deviation;
  } catch (const std::runtime_error& e) {
    rep.failures.push_back(std::string("structure: ") + e.what());
  }
  return rep;
}

ReconstructionReport invariant_suite(const TbtSymbol& sym,
                                     const std::vector<std::string>& selection,
                                     const Tolerances& tol) {
  ReconstructionReport rep;
  rep.m = sym.m;
  rep.n = sym.n;
  const int m = sym.m, n = sym.n;
  PointSampler sampler(0x5eedULL + 1000 * m + n);

  try {
    if (wants(selection, "identities")) {
      rep.identity_residual_p1 = structured::verify_identity(sym, 1);
      rep.identity_residual_p2 = structured::verify_identity(sym, 2);
      rep.aux_residual_12 = structured::verify_aux_identity(sym, 1, 2);
      rep.aux_residual_21 = structured::verify_aux_identity(sym, 2, 1);
      rep.pass["identities"] = *rep.identity_residual_p1 <= tol.identity &&
                               *rep.identity_residual_p2 <= tol.identity &&
                               *rep.aux_residual_12 <= tol.identity &&
                               *rep.aux_residual_21 <= tol.identity;
    }
    if (wants(selection, "ranks")) {
      const CMat t = assemble(sym);
      const auto ops = structured::build_a(m, n);
      rep.displacement_rank_1 =
          linalg::numerical_rank(ops.a1 * t - t * ops.a1.adjoint(), tol.rank_svd);
      rep.displacement_rank_2 =
          linalg::numerical_rank(ops.a2 * t - t * ops.a2.adjoint(), tol.rank_svd);
      rep.pass["ranks"] =
          *rep.displacement_rank_1 <= 2 * m && *rep.displacement_rank_2 <= 2 * n;
    }

    const bool need_pair = wants(selection, "g21") || wants(selection, "pfaffian") ||
                           wants(selection, "theta") || wants(selection, "omega") ||
                           wants(selection, "uhat");
    if (!need_pair) return rep;

    const Extraction ex = extract_g(sym);
    if (wants(selection, "g21")) {
      rep.g21_discrepancy = ex.g21_discrepancy;
      rep.pass["g21"] = ex.g21_discrepancy <= tol.g21;
    }
    if (wants(selection, "pfaffian")) {
      double worst = 0.0;
      for (int i = 0; i < 5; ++i) {
        const Complex l1 = sampler.point(), l2 = sampler.point();
        const Complex pf = linalg::pfaffian(skew_g(ex.pair, l1, l2));
        const Complex det = linalg::determinant(assemble_g(ex.pair, l1, l2));
        worst = std::max(worst, std::abs(pf * pf - det) / (1.0 + std::abs(det)));
      }
      rep.pf_det_residual = worst;
      rep.pass["pfaffian"] = worst <= tol.pfaffian;
    }

    const ThetaResult th = theta_poly(ex.pair);
    if (wants(selection, "theta")) {
      rep.theta_leading_deviation = std::abs(std::abs(th.raw_leading) - 1.0);
      rep.theta_factor_residual = theta_factor_residual(sym, ex.pair, th.theta, sampler, 10);
      double probe = 0.0;
      for (int i = 0; i < 5; ++i) {
        probe = std::max(probe, scalar_probe(ex.pair, sampler.point(), sampler.point()));
      }
      rep.scalar_probe_residual = probe;
      rep.pass["theta"] =
          *rep.theta_factor_residual <= tol.theta_factor && probe <= tol.scalar_probe;
    }
    if (wants(selection, "omega")) {
      double gap = 0.0;
      for (int i = 0; i < 10; ++i) {
        const auto [l1, l2, u1, u2] = sampler.pair();
        const Complex o1 = omega(ex.pair, th.theta, l1, l2, u1, u2, 1);
        const Complex o2 = omega(ex.pair, th.theta, l1, l2, u1, u2, 2);
        gap = std::max(gap, std::abs(o1 - o2) / (1.0 + std::abs(o1)));
      }
      rep.omega_branch_gap = gap;
      rep.pass["omega"] = gap <= tol.omega_branch;
    }
    if (wants(selection, "uhat")) {
      const CRow ann = annihilator(m, n);
      double worst_u = 0.0, worst_ann = 0.0;
      for (int i = 0; i < 5; ++i) {
        const auto [l1, l2, u1, u2] = sampler.pair();
        const CVec uh = u_hat(ex.pair, th.theta, l1, l2);
        const CVec uh_ref = u_hat_direct(sym, l1, l2);
        const CRow u = u_row(ex.pair, th.theta, u1, u2);
        const CRow u_ref = u_direct(sym, u1, u2);
        worst_u = std::max(worst_u, (uh - uh_ref).norm() / (1.0 + uh_ref.norm()));
        worst_u = std::max(worst_u, (u - u_ref).norm() / (1.0 + u_ref.norm()));
        worst_ann = std::max(worst_ann,
                             std::abs((ann * uh)(0, 0)) / (1.0 + uh.norm()));
      }
      rep.annihilation_residual = worst_ann;
      rep.pass["uhat"] = worst_u <= tol.u_formulas && worst_ann <= tol.annihilation;
    }
  } catch (const std::runtime_error& e) {
    rep.failures.push_back(std::string("suite: ") + e.what());
  }
  return rep;
}

ReconstructionReport invariant_suite(const GPair& gp,
                                     const std::vector<std::string>& selection,
                                     const Tolerances& tol) {
  ReconstructionReport rep;
  rep.m = gp.m;
  rep.n = gp.n;
  PointSampler sampler(0x6eedULL + 1000 * gp.m + gp.n);

  try {
    if (wants(selection, "pfaffian")) {
      double worst = 0.0;
      for (int i = 0; i < 5; ++i) {
        const Complex l1 = sampler.point(), l2 = sampler.point();
        const Complex pf = linalg::pfaffian(skew_g(gp, l1, l2));
        const Complex det = linalg::determinant(assemble_g(gp, l1, l2));
        worst = std::max(worst, std::abs(pf * pf - det) / (1.0 + std::abs(det)));
      }
      rep.pf_det_residual = worst;
      rep.pass["pfaffian"] = worst <= tol.pfaffian;
    }
    const ThetaResult th = theta_poly(gp);
    if (wants(selection, "theta")) {
      rep.theta_leading_deviation = std::abs(std::abs(th.raw_leading) - 1.0);
      double probe = 0.0;
      for (int i = 0; i < 5; ++i) {
        probe = std::max(probe, scalar_probe(gp, sampler.point(), sampler.point()));
      }
      rep.scalar_probe_residual = probe;
      rep.pass["theta"] = probe <= tol.scalar_probe;
    }
    if (wants(selection, "omega")) {
      double gap = 0.0;
      for (int i = 0; i < 10; ++i) {
        const auto [l1, l2, u1, u2] = sampler.pair();
        const Complex o1 = omega(gp, th.theta, l1, l2, u1, u2, 1);
        const Complex o2 = omega(gp, th.theta, l1, l2, u1, u2, 2);
        gap = std::max(gap, std::abs(o1 - o2) / (1.0 + std::abs(o1)));
      }
      rep.omega_branch_gap = gap;
      rep.pass["omega"] = gap <= tol.omega_branch;
    }
  } catch (const std::runtime_error& e) {
    rep.failures.push_back(std::string("suite: ") + e.what());
  }
  return rep;
}

}  // namespace tbtinv
