#ifndef TBTINV_TYPES_HPP
#define TBTINV_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace tbtinv {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using CRow = Eigen::RowVectorXcd;

inline constexpr Complex iu{0.0, 1.0};  // imaginary unit

/// Matrix is singular to working precision; carries the offending pivot.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& msg, double pivot)
      : std::runtime_error(msg + " (pivot " + std::to_string(pivot) + ")"),
        pivot_(pivot) {}
  double pivot() const { return pivot_; }

 private:
  double pivot_;
};

/// Input violates the skew-symmetry contract; carries the measured asymmetry.
class SkewSymmetryError : public std::runtime_error {
 public:
  SkewSymmetryError(const std::string& msg, double asymmetry)
      : std::runtime_error(msg + " (asymmetry " + std::to_string(asymmetry) + ")"),
        asymmetry_(asymmetry) {}
  double asymmetry() const { return asymmetry_; }

 private:
  double asymmetry_;
};

/// Evaluation requested at (or too close to) a pole of a Moebius map or resolvent.
class PoleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A structural self-check failed (corrupted pair, non-realizable input, ...).
class IntegrityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool all_finite(const CMat& a) { return a.allFinite(); }

inline double max_abs(const CMat& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

}  // namespace tbtinv

#endif
