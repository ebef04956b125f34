#ifndef TBTINV_VERIFY_HPP
#define TBTINV_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tbtinv/extraction.hpp"
#include "tbtinv/reconstruction.hpp"
#include "tbtinv/symbol.hpp"
#include "tbtinv/theta.hpp"

namespace tbtinv {

/// All acceptance tolerances in one place; defaults are the contract.
struct Tolerances {
  double identity = 1e-13;        // displacement and auxiliary identities
  double rank_svd = 1e-10;        // singular value cut for rank bounds
  double g21 = 1e-12;             // dual-path g21 agreement
  double pfaffian = 1e-10;        // pf^2 = det
  double theta_factor = 1e-9;      // theta + q (1 + theta~) = 0
  double scalar_probe = 1e-9;     // scalar annihilation probe of G^{-1}
  double omega_branch = 1e-9;     // |omega_1 - omega_2|
  double u_formulas = 1e-8;       // recovered u / u-hat vs definitional
  double annihilation = 1e-10;    // [1_m^*, 0, -1_n^*, 0] u-hat = 0
  double roundtrip = 1e-7;        // recovered R vs dense inverse
  double tbt_deviation = 1e-6;    // structure of R^{-1} for arbitrary g12
  double cond_gate = 1e6;         // kappa(R) admission for the structure check
};

struct ReconstructionReport {
  int m = 0;
  int n = 0;
  std::optional<double> identity_residual_p1;
  std::optional<double> identity_residual_p2;
  std::optional<double> aux_residual_12;
  std::optional<double> aux_residual_21;
  std::optional<int> displacement_rank_1;
  std::optional<int> displacement_rank_2;
  std::optional<double> g21_discrepancy;
  std::optional<double> theta_leading_deviation;
  std::optional<double> theta_factor_residual;
  std::optional<double> omega_branch_gap;
  std::optional<double> scalar_probe_residual;
  std::optional<double> annihilation_residual;
  std::optional<double> pf_det_residual;
  std::optional<double> roundtrip_error;
  std::optional<double> condition_t;
  std::optional<double> condition_r;
  std::optional<double> tbt_deviation;
  std::map<std::string, bool> pass;
  std::vector<std::string> failures;  // stage-labeled error messages

  bool all_pass() const {
    if (!failures.empty()) return false;
    for (const auto& [name, ok] : pass)
      if (!ok) return false;
    return !pass.empty();
  }
};

/// extract -> theta -> recover, compared against the dense inverse.
ReconstructionReport roundtrip(const TbtSymbol& sym, const Tolerances& tol = {},
                               const GridOptions& grid = {});

///// Structural characterization of an arbitrary g12: recover R, and when R
/// passes the condition gate, measure how far R^{-1} is from TBT structure.
ReconstructionReport characterize(const CMat& g12, int m, int n,
                                  const Tolerances& tol = {},
                                  const GridOptions& grid = {});

/// Aggregated invariant checks on one symbol; empty selection = all checks.
///// Known names: identities, ranks, g21, pfaffian, theta, omega, uhat.
ReconstructionReport invariant_suite(const TbtSymbol& sym,
                                     const std::vector<std::string>& selection = {},
                                     const Tolerances& tol = {});

///// Invariants checkable from a pair alone (no source symbol):
/// pfaffian, theta (incl. the scalar annihilation probe), omega branch agreement.
ReconstructionReport invariant_suite(const GPair& gp,
                                     const std::vector<std::string>& selection = {},
                                     const Tolerances& tol = {});

}  // namespace tbtinv

#endif
