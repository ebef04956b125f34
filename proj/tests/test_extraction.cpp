#include <doctest.h>

#include <random>

#include "tbtinv/extraction.hpp"
#include "tbtinv/linalg.hpp"
#include "tbtinv/structured.hpp"
#include "test_util.hpp"

using namespace tbtinv;
using namespace testutil;

namespace {

TbtSymbol scalar_five() {
  TbtSymbol sym(1, 1);
  sym.at(0, 0) = 5.0;
  return sym;
}

}  // namespace

TEST_CASE("scalar hand case for g12 and g21") {
  const Extraction ex = extract_g(scalar_five());
  CMat expected(2, 2);
  expected << iu * -0.5, iu * 0.2, 0.0, iu * 0.5;
  CHECK(rel_err(ex.pair.g12, expected) < 1e-15);
  CHECK(ex.g21_discrepancy < 1e-15);
  // the transform image must coincide with the definitional g21
  CHECK(rel_err(ex.pair.g21, g21_from_g12(ex.pair.g12, 1, 1)) < 1e-16);
}

TEST_CASE("g21 transform basics") {
  CHECK(g21_from_g12(CMat::Zero(4, 6), 2, 3).norm() == 0.0);

  std::mt19937_64 eng(71);
  for (const auto [m, n] : {std::pair{1, 1}, std::pair{2, 3}, std::pair{4, 2}}) {
    const CMat g12 = rand_mat(eng, 2 * m, 2 * n);
    const CMat back = g12_from_g21(g21_from_g12(g12, m, n), m, n);
    CHECK(rel_err(back, g12) < 1e-15);
  }
}

TEST_CASE("dual-path g21 on random symbols") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const TbtSymbol sym = random_symbol(3, 2, seed, 4.0);
    CHECK(extract_g(sym).g21_discrepancy <= 1e-12);
  }
}

TEST_CASE("GPair::from_g12 enforces the transform") {
  std::mt19937_64 eng(72);
  const CMat g12 = rand_mat(eng, 4, 4);
  const GPair gp = GPair::from_g12(g12, 2, 2);
  CHECK((gp.g21 - g21_from_g12(g12, 2, 2)).norm() == 0.0);
}

TEST_CASE("gammas, scalar hand case") {
  const GammaSet gs = gammas(scalar_five());
  CHECK(std::abs(gs.gamma1(0, 0) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(gs.gamma1(0, 1) - Complex(0.2)) < 1e-15);
  CHECK(std::abs(gs.gamma_hat1(0, 0) - Complex(0.2)) < 1e-15);
  CHECK(std::abs(gs.gamma_hat1(1, 0) - Complex(0.5)) < 1e-15);
}

TEST_CASE("inverse-side displacement identity via gammas") {
  const TbtSymbol sym = random_symbol(2, 3, 9, 4.0);
  const CMat r = linalg::inverse(assemble(sym));
  const auto ops = structured::build_a(sym.m, sym.n);
  const GammaSet gs = gammas(sym);
  const double scale = std::max(1.0, r.norm());
  CHECK((r * ops.a1 - ops.a1.adjoint() * r - iu * gs.gamma1 * gs.gamma_hat1).norm() <=
        1e-12 * scale);
  CHECK((r * ops.a2 - ops.a2.adjoint() * r - iu * gs.gamma2 * gs.gamma_hat2).norm() <=
        1e-12 * scale);
}

TEST_CASE("aggregate gamma-hat annihilation") {
  const TbtSymbol sym = random_symbol(3, 2, 12, 4.0);
  const int m = sym.m, n = sym.n, mn = sym.order();
  const GammaSet gs = gammas(sym);
  CMat stacked(2 * (m + n), mn);
  stacked.topRows(2 * m) = gs.gamma_hat1;
  stacked.bottomRows(2 * n) = gs.gamma_hat2;
  CRow probe = CRow::Zero(2 * (m + n));
  probe.segment(0, m).setOnes();
  probe.segment(2 * m, n).setConstant(-1.0);
  CHECK((probe * stacked).norm() <= 1e-10 * std::max(1.0, stacked.norm()));
}

TEST_CASE("extraction refuses a singular matrix") {
  TbtSymbol sym(2, 2);  // all-zero symbol assembles to the zero matrix
  CHECK_THROWS_AS(extract_g(sym), SingularMatrixError);
}
