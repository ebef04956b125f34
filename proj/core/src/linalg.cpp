#include "tbtinv/linalg.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <limits>

namespace tbtinv::linalg {

namespace {

constexpr double kPivotRatio = 1e-14;

void check_pivots(const Eigen::PartialPivLU<CMat>& lu) {
  const auto diag = lu.matrixLU().diagonal().cwiseAbs();
  const double pmax = diag.maxCoeff();
  const double pmin = diag.minCoeff();
  if (pmax == 0.0 || pmin < kPivotRatio * pmax) {
    throw SingularMatrixError("matrix singular to working precision", pmin);
  }
}

}  // namespace

CMat lu_solve(const CMat& a, const CMat& b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("lu_solve: A not square");
  if (b.rows() != a.rows()) throw std::invalid_argument("lu_solve: shape mismatch");
  Eigen::PartialPivLU<CMat> lu(a);
  check_pivots(lu);
  return lu.solve(b);
}

CMat inverse(const CMat& a) {
  return lu_solve(a, CMat::Identity(a.rows(), a.cols()));
}

Complex determinant(const CMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: A not square");
  return Eigen::PartialPivLU<CMat>(a).determinant();
}

double condition_estimate(const CMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("condition_estimate: A not square");
  if (a.size() == 0) return 1.0;
  auto norm1 = [](const CMat& x) { return x.cwiseAbs().colwise().sum().maxCoeff(); };
  try {
    return norm1(a) * norm1(inverse(a));
  } catch (const SingularMatrixError&) {
    return std::numeric_limits<double>::infinity();
  }
}

int numerical_rank(const CMat& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<CMat> svd(a);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  if (smax == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * smax) ++rank;
  }
  return rank;
}

Complex pfaffian(const CMat& s_in, double skew_tol) {
  const Eigen::Index n = s_in.rows();
  if (n != s_in.cols() || n % 2 != 0) {
    throw std::invalid_argument("pfaffian: matrix must be square of even order");
  }
  const double scale = max_abs(s_in);
  const double asym = max_abs(s_in + s_in.transpose());
  if (asym > skew_tol * std::max(1.0, scale)) {
    throw SkewSymmetryError("pfaffian: input not skew-symmetric", asym);
  }
  if (n == 0) return Complex{1.0, 0.0};

  CMat s = s_in;
  Complex pf{1.0, 0.0};
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    // pivot: largest entry in column k below the diagonal
    Eigen::Index kp = k + 1;
    for (Eigen::Index i = k + 2; i < n; ++i) {
      if (std::abs(s(i, k)) > std::abs(s(kp, k))) kp = i;
    }
    if (kp != k + 1) {
      s.row(k + 1).swap(s.row(kp));
      s.col(k + 1).swap(s.col(kp));
      pf = -pf;
    }
    const Complex piv = s(k + 1, k);
    if (piv == Complex{0.0, 0.0}) return Complex{0.0, 0.0};
    pf *= s(k, k + 1);
    if (k + 2 < n) {
      const Eigen::Index rest = n - k - 2;
      CVec tau = s.block(k + 2, k, rest, 1) / piv;
      CVec col1 = s.block(k + 2, k + 1, rest, 1);
      s.block(k + 2, k + 2, rest, rest) +=
          tau * col1.transpose() - col1 * tau.transpose();
    }
  }
  return pf;
}

}  // namespace tbtinv::linalg
