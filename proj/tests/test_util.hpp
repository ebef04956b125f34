#ifndef TBTINV_TESTS_UTIL_HPP
#define TBTINV_TESTS_UTIL_HPP

#include <random>

#include "tbtinv/types.hpp"

namespace testutil {

using tbtinv::CMat;
using tbtinv::Complex;

inline double rel_err(const CMat& a, const CMat& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

inline double rel_err(Complex a, Complex b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

inline Complex rand_c(std::mt19937_64& eng, double half_width = 2.0) {
  std::uniform_real_distribution<double> d(-half_width, half_width);
  const double re = d(eng);
  const double im = d(eng);
  return {re, im};
}

// random point kept away from the +-i/2 resolvent poles
inline Complex rand_point(std::mt19937_64& eng) {
  for (;;) {
    const Complex z = rand_c(eng);
    if (std::abs(z - Complex(0, 0.5)) > 0.2 && std::abs(z + Complex(0, 0.5)) > 0.2)
      return z;
  }
}

inline CMat rand_mat(std::mt19937_64& eng, int rows, int cols, double half_width = 1.0) {
  CMat a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = rand_c(eng, half_width);
  return a;
}

inline CMat rand_skew(std::mt19937_64& eng, int order) {
  const CMat a = rand_mat(eng, order, order);
  return a - a.transpose().eval();
}

}  // namespace testutil

#endif
