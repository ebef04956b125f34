#include <doctest.h>

#include <random>

#include "tbtinv/linalg.hpp"
#include "tbtinv/structured.hpp"
#include "test_util.hpp"

using namespace tbtinv;
using namespace tbtinv::structured;
using namespace testutil;

TEST_CASE("A operators, small fixed cases") {
  const AOperators a12 = build_a(1, 2);
  CMat exp1(2, 2);
  exp1 << iu / 2.0, 0.0, iu, iu / 2.0;
  CHECK(rel_err(a12.a1, exp1) < 1e-16);

  const AOperators a21 = build_a(2, 1);
  CHECK(rel_err(a21.a2, exp1) < 1e-16);

  for (const auto [m, n] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{4, 4}}) {
    const AOperators ops = build_a(m, n);
    CHECK((ops.a1 * ops.a2 - ops.a2 * ops.a1).norm() == 0.0);
    CHECK(ops.sa1.rows() == n);
    CHECK(ops.sa2.rows() == m);
    CHECK(rel_err(ops.sa2, ops.a2.topLeftCorner(m, m)) < 1e-16);
  }
}

TEST_CASE("flip and signature algebra") {
  CMat f(2, 2);
  f << 0, 1, 1, 0;
  CHECK(rel_err(flip(2), f) < 1e-16);

  CMat j = CMat::Zero(4, 4);
  j(0, 0) = j(1, 1) = 1.0;
  j(2, 2) = j(3, 3) = -1.0;
  CHECK(rel_err(signature(2), j) < 1e-16);

  for (int r : {1, 2, 3}) {
    const CMat u = flip(2 * r), s = signature(r);
    CHECK((u * u - CMat::Identity(2 * r, 2 * r)).norm() == 0.0);
    CHECK((u * s + s * u).norm() == 0.0);
  }
}

TEST_CASE("M blocks, scalar hand case") {
  TbtSymbol sym(1, 1);
  sym.at(0, 0) = 5.0;
  const MBlocks b = build_m_blocks(sym);
  CHECK(b.m11(0, 0) == Complex(2.5));
  CHECK(b.m21(0, 0) == Complex(1.0));
  CHECK(b.m41(0, 0) == Complex(2.5));
  CHECK(b.m12(0, 0) == Complex(2.5));
  CHECK(b.m22(0, 0) == Complex(1.0));
  CHECK(b.m42(0, 0) == Complex(2.5));
}

TEST_CASE("M block adjoint and flip relations") {
  const TbtSymbol sym = random_symbol(3, 2, 31, 0.0);
  const MBlocks b = build_m_blocks(sym);
  const int m = sym.m, n = sym.n, mn = sym.order();
  CHECK((b.m31 - b.m21.adjoint()).norm() == 0.0);
  CHECK((b.m32 - b.m22.adjoint()).norm() == 0.0);
  CHECK((b.m21.transpose() - b.m31).norm() == 0.0);
  CHECK((flip(mn) * b.m31 * flip(m) - b.m31).norm() == 0.0);
  CHECK((b.m32.transpose() - b.m22).norm() == 0.0);
  CHECK((flip(n) * b.m22 * flip(mn) - b.m22).norm() == 0.0);
  // ones-vector contractions collapse to the all-ones row
  CHECK((CRow::Ones(m) * b.m21 - CRow::Ones(mn)).norm() == 0.0);
  CHECK((CRow::Ones(n) * b.m22 - CRow::Ones(mn)).norm() == 0.0);
}

TEST_CASE("M12 inner-block cumulative sums") {
  const int m = 2, n = 2;
  const TbtSymbol sym = random_symbol(m, n, 33, 0.0);
  const MBlocks b = build_m_blocks(sym);
  // block (i, k) of m12 carries offset r = i - k
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const int r = i - k;
      CHECK(std::abs(b.m12(m * i, k) - 0.5 * sym.at(r, 0)) < 1e-15);
      CHECK(std::abs(b.m12(m * i + 1, k) - (0.5 * sym.at(r, 0) + sym.at(r, 1))) <
            1e-15);
    }
  }
}

TEST_CASE("K blocks, scalar hand case and degenerate n=1") {
  TbtSymbol sym(1, 1);
  sym.at(0, 0) = 5.0;
  const KBlocks kb = build_k_blocks(sym);
  CHECK(kb.k(0, 0) == Complex(1.25));
  CHECK(kb.k11(0, 0) == Complex(1.25));
  CHECK(kb.k12(0, 0) == Complex(1.25));

  const TbtSymbol s31 = random_symbol(3, 1, 4, 0.0);
  const MBlocks mb = build_m_blocks(s31);
  const KBlocks kb31 = build_k_blocks(s31);
  CHECK((kb31.k11 - 0.5 * mb.m42).norm() < 1e-15);   // single-block K11
  CHECK((kb31.k12 - 0.5 * mb.m12).norm() < 1e-15);   // single-block K12
}

TEST_CASE("K11 cumulative pattern at n=2") {
  const int m = 3, n = 2;
  const TbtSymbol sym = random_symbol(m, n, 35, 0.0);
  const MBlocks mb = build_m_blocks(sym);
  const KBlocks kb = build_k_blocks(sym);
  // m42 block (i, k) carries offset i - k; read the offset-0 and offset-1 rows
  const CRow m42_0 = mb.m42.block(0, 0, 1, m);
  const CRow m42_1 = mb.m42.block(1, 0, 1, m);
  CHECK((kb.k11.row(0) - 0.5 * m42_0).norm() < 1e-14);
  CHECK((kb.k11.row(1) - (0.5 * m42_0 + m42_1)).norm() < 1e-14);
}

TEST_CASE("Pi aggregates and the displacement identity") {
  TbtSymbol scalar(1, 1);
  scalar.at(0, 0) = 5.0;
  const PiPair p1 = build_pi(scalar, 1);
  CHECK(p1.pi(0, 0) == Complex(2.5));
  CHECK(p1.pi(0, 1) == Complex(1.0));
  CHECK(p1.pi_hat(0, 0) == Complex(1.0));
  CHECK(p1.pi_hat(1, 0) == Complex(2.5));

  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const TbtSymbol sym = random_symbol(m, n, 100 * m + n, 0.0);
      const PiPair q1 = build_pi(sym, 1);
      const PiPair q2 = build_pi(sym, 2);
      CHECK(q1.pi.rows() == m * n);
      CHECK(q1.pi.cols() == 2 * m);
      CHECK(q1.pi_hat.rows() == 2 * m);
      CHECK(q2.pi.cols() == 2 * n);
      CHECK(q2.pi_hat.rows() == 2 * n);

      const CMat t = assemble(sym);
      const AOperators ops = build_a(m, n);
      const double scale = std::max(1.0, t.norm());
      CHECK((ops.a1 * t - t * ops.a1.adjoint() - iu * q1.pi * q1.pi_hat).norm() <=
            1e-12 * scale);
      CHECK((ops.a2 * t - t * ops.a2.adjoint() - iu * q2.pi * q2.pi_hat).norm() <=
            1e-12 * scale);
    }
  }
}

TEST_CASE("identity residuals") {
  TbtSymbol scalar(1, 1);
  scalar.at(0, 0) = 5.0;
  CHECK(verify_identity(scalar, 1) < 1e-15);
  CHECK(verify_identity(scalar, 2) < 1e-15);
  CHECK(verify_aux_identity(scalar, 1, 2) < 1e-15);
  CHECK(verify_aux_identity(scalar, 2, 1) < 1e-15);

  for (std::uint64_t seed : {21u, 22u, 23u}) {
    const TbtSymbol sym = random_symbol(3, 2, seed, 0.0);
    CHECK(verify_identity(sym, 1) < 1e-13);
    CHECK(verify_identity(sym, 2) < 1e-13);
    CHECK(verify_aux_identity(sym, 1, 2) < 1e-13);
    CHECK(verify_aux_identity(sym, 2, 1) < 1e-13);
  }
}

TEST_CASE("displacement rank bounds") {
  for (const auto [m, n] : {std::pair{3, 2}, std::pair{2, 4}}) {
    const TbtSymbol sym = random_symbol(m, n, 55, 0.0);
    const CMat t = assemble(sym);
    const AOperators ops = build_a(m, n);
    CHECK(linalg::numerical_rank(ops.a1 * t - t * ops.a1.adjoint()) <= 2 * m);
    CHECK(linalg::numerical_rank(ops.a2 * t - t * ops.a2.adjoint()) <= 2 * n);
  }
}

TEST_CASE("Moebius maps") {
  CHECK(std::abs(mobius_psi(0.0) - Complex(-1.0)) < 1e-16);
  CHECK(std::abs(mobius_phi(-1.0)) < 1e-16);

  std::mt19937_64 eng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex l = rand_point(eng);
    CHECK(std::abs(mobius_phi(mobius_psi(l)) - l) <= 1e-13 * (1.0 + std::abs(l)));
  }

  CHECK_THROWS_AS(mobius_psi(Complex(0.0, 0.5)), PoleError);
  CHECK_THROWS_AS(mobius_phi(Complex(1.0, 0.0)), PoleError);
}

TEST_CASE("resolvents against dense triangular solves") {
  CHECK(std::abs(resolvent_col(Complex(0.3, 0.1), Complex(-0.2, 0.4), 1, 1)(0) -
                 1.0 / ((iu / 2.0 - Complex(0.3, 0.1)) *
                        (iu / 2.0 - Complex(-0.2, 0.4)))) < 1e-14);

  std::mt19937_64 eng(62);
  const int m = 2, n = 2, mn = m * n;
  const AOperators ops = build_a(m, n);
  for (int trial = 0; trial < 5; ++trial) {
    const Complex l1 = rand_point(eng), l2 = rand_point(eng);
    const CVec closed = resolvent_col(l1, l2, m, n);
    const CMat lhs1 = ops.a1 - l1 * CMat::Identity(mn, mn);
    const CMat lhs2 = ops.a2 - l2 * CMat::Identity(mn, mn);
    const CVec dense =
        linalg::lu_solve(lhs2, linalg::lu_solve(lhs1, CMat::Ones(mn, 1)));
    CHECK(rel_err(CMat(closed), CMat(dense)) < 1e-12);

    const Complex u1 = rand_point(eng), u2 = rand_point(eng);
    const CRow row = resolvent_row(u1, u2, m, n);
    const CMat rhs1 = ops.a1.adjoint() - u1 * CMat::Identity(mn, mn);
    const CMat rhs2 = ops.a2.adjoint() - u2 * CMat::Identity(mn, mn);
    const CMat dense_row =
        linalg::lu_solve(rhs2.transpose(),
                         linalg::lu_solve(rhs1.transpose(), CMat::Ones(mn, 1)))
            .transpose();
    CHECK(rel_err(CMat(row), dense_row) < 1e-12);
  }
}

TEST_CASE("scalar resolvents match their dense counterparts") {
  std::mt19937_64 eng(63);
  const int r = 3;
  const CMat a = lower_shift(r);
  for (int trial = 0; trial < 3; ++trial) {
    const Complex l = rand_point(eng);
    const CVec col = scalar_resolvent_col(l, r);
    const CVec dense = linalg::lu_solve(a - l * CMat::Identity(r, r), CMat::Ones(r, 1));
    CHECK(rel_err(CMat(col), CMat(dense)) < 1e-12);

    const CRow row = scalar_resolvent_row(l, r);
    const CMat dense_row =
        linalg::lu_solve((a.adjoint() - l * CMat::Identity(r, r)).transpose(),
                         CMat::Ones(r, 1))
            .transpose();
    CHECK(rel_err(CMat(row), dense_row) < 1e-12);
  }
}
