#include "tbtinv/structured.hpp"

namespace tbtinv::structured {

namespace {

constexpr double kPoleRadius = 1e-8;
const Complex kHalfI{0.0, 0.5};

void check_off_pole(Complex v, Complex pole, const char* what) {
  if (std::abs(v - pole) < kPoleRadius) {
    throw PoleError(std::string(what) + ": evaluation point too close to pole");
  }
}

// Block column of partial sums 1/2 T_0 + sum_{s=1}^{i-1} T_{sign*s}.
CMat cumulative_block(const TbtSymbol& sym, int sign) {
  const int m = sym.m, n = sym.n;
  CMat toeplitz0(m, m);
  auto inner = [&](int r) {
    CMat b(m, m);
    for (int j = 1; j <= m; ++j)
      for (int l = 1; l <= m; ++l) b(j - 1, l - 1) = sym.at(r, j - l);
    return b;
  };
  CMat out(m * n, m);
  CMat acc = 0.5 * inner(0);
  for (int i = 1; i <= n; ++i) {
    if (i > 1) acc += inner(sign * (i - 1));
    out.block(m * (i - 1), 0, m, m) = acc;
  }
  return out;
}

}  // namespace

CMat lower_shift(int r) {
  CMat a = CMat::Zero(r, r);
  for (int j = 0; j < r; ++j) {
    a(j, j) = kHalfI;
    for (int l = 0; l < j; ++l) a(j, l) = iu;
  }
  return a;
}

AOperators build_a(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("build_a: m, n must be >= 1");
  AOperators ops;
  ops.sa1 = lower_shift(n);
  ops.sa2 = lower_shift(m);

  ops.a1 = CMat::Zero(m * n, m * n);
  const CMat im_block = CMat::Identity(m, m);
  for (int i = 0; i < n; ++i) {
    ops.a1.block(m * i, m * i, m, m) = kHalfI * im_block;
    for (int k = 0; k < i; ++k) ops.a1.block(m * i, m * k, m, m) = iu * im_block;
  }
  ops.a2 = CMat::Zero(m * n, m * n);
  for (int i = 0; i < n; ++i) ops.a2.block(m * i, m * i, m, m) = ops.sa2;
  return ops;
}

CMat flip(int size) {
  CMat u = CMat::Zero(size, size);
  for (int i = 0; i < size; ++i) u(i, size - 1 - i) = 1.0;
  return u;
}

CMat signature(int r) {
  CMat j = CMat::Identity(2 * r, 2 * r);
  j.block(r, r, r, r) *= -1.0;
  return j;
}

MBlocks build_m_blocks(const TbtSymbol& sym) {
  const int m = sym.m, n = sym.n;
  MBlocks b;

  b.m11 = cumulative_block(sym, +1);
  b.m21 = CMat::Identity(m, m).replicate(1, n);
  b.m31 = b.m21.adjoint();
  {
    const CMat col = cumulative_block(sym, -1);
    b.m41.resize(m, m * n);
    for (int k = 0; k < n; ++k) b.m41.block(0, m * k, m, m) = col.block(m * k, 0, m, m);
  }

  // Column stacks of partial sums over the inner index, one per outer offset r.
  auto m12_block = [&](int r) {
    CVec c(m);
    Complex acc = 0.5 * sym.at(r, 0);
    for (int j = 1; j <= m; ++j) {
      if (j > 1) acc += sym.at(r, j - 1);
      c(j - 1) = acc;
    }
    return c;
  };
  auto m42_block = [&](int r) {
    CRow c(m);
    Complex acc = 0.5 * sym.at(r, 0);
    for (int l = 1; l <= m; ++l) {
      if (l > 1) acc += sym.at(r, 1 - l);
      c(l - 1) = acc;
    }
    return c;
  };

  b.m12.resize(m * n, n);
  b.m22 = CMat::Zero(n, m * n);
  b.m42.resize(n, m * n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      b.m12.block(m * i, k, m, 1) = m12_block(i - k);
      b.m42.block(i, m * k, 1, m) = m42_block(i - k);
      if (i == k) b.m22.block(i, m * k, 1, m) = CRow::Ones(m);
    }
  }
  b.m32 = b.m22.adjoint();
  return b;
}

KBlocks build_k_blocks(const TbtSymbol& sym) {
  const int m = sym.m, n = sym.n;
  auto m42_of = [&](int r) {
    CRow c(m);
    Complex acc = 0.5 * sym.at(r, 0);
    for (int l = 1; l <= m; ++l) {
      if (l > 1) acc += sym.at(r, 1 - l);
      c(l - 1) = acc;
    }
    return c;
  };
  auto m12_of = [&](int r) {
    CVec c(m);
    Complex acc = 0.5 * sym.at(r, 0);
    for (int j = 1; j <= m; ++j) {
      if (j > 1) acc += sym.at(r, j - 1);
      c(j - 1) = acc;
    }
    return c;
  };

  KBlocks kb;
  kb.k.resize(m * n);
  kb.k11.resize(n, m);
  kb.k12.resize(m, n);

  CRow acc_minus = 0.5 * m42_of(0);
  CRow acc_plus = 0.5 * m42_of(0);
  CVec acc12 = 0.5 * m12_of(0);
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      acc_minus += m42_of(1 - k);
      acc_plus += m42_of(k - 1);
      acc12 += m12_of(1 - k);
    }
    kb.k.segment(m * (k - 1), m) = acc_minus;
    kb.k11.row(k - 1) = acc_plus;
    kb.k12.col(k - 1) = acc12;
  }
  return kb;
}

PiPair build_pi(const TbtSymbol& sym, int p) {
  if (p != 1 && p != 2) throw std::invalid_argument("build_pi: p must be 1 or 2");
  const MBlocks b = build_m_blocks(sym);
  PiPair out;
  if (p == 1) {
    out.pi.resize(b.m11.rows(), b.m11.cols() + b.m31.cols());
    out.pi << b.m11, b.m31;
    out.pi_hat.resize(b.m21.rows() + b.m41.rows(), b.m21.cols());
    out.pi_hat << b.m21, b.m41;
  } else {
    out.pi.resize(b.m12.rows(), b.m12.cols() + b.m32.cols());
    out.pi << b.m12, b.m32;
    out.pi_hat.resize(b.m22.rows() + b.m42.rows(), b.m22.cols());
    out.pi_hat << b.m22, b.m42;
  }
  return out;
}

double verify_identity(const TbtSymbol& sym, int p) {
  const CMat t = assemble(sym);
  const AOperators ops = build_a(sym.m, sym.n);
  const CMat& a = (p == 1) ? ops.a1 : ops.a2;
  const PiPair pi = build_pi(sym, p);
  const CMat lhs = a * t - t * a.adjoint();
  const CMat rhs = iu * pi.pi * pi.pi_hat;
  const double denom = t.norm();
  return denom == 0.0 ? (lhs - rhs).norm() : (lhs - rhs).norm() / denom;
}

double verify_aux_identity(const TbtSymbol& sym, int s, int p) {
  if (!((s == 1 && p == 2) || (s == 2 && p == 1))) {
    throw std::invalid_argument("verify_aux_identity: (s, p) must be (1,2) or (2,1)");
  }
  const AOperators ops = build_a(sym.m, sym.n);
  const MBlocks mb = build_m_blocks(sym);
  const KBlocks kb = build_k_blocks(sym);
  const CMat& sa = (s == 1) ? ops.sa1 : ops.sa2;
  const CMat& a = (s == 1) ? ops.a1 : ops.a2;
  const CMat& m4 = (p == 1) ? mb.m41 : mb.m42;
  CMat q;
  if (s == 1) {
    q = kb.k11 * mb.m21 + CVec::Ones(sym.n) * kb.k;
  } else {
    q = kb.k12 * mb.m22 + CVec::Ones(sym.m) * kb.k;
  }
  const CMat lhs = sa * m4 - m4 * a.adjoint();
  const CMat rhs = iu * q;
  const double denom = m4.norm();
  return denom == 0.0 ? (lhs - rhs).norm() : (lhs - rhs).norm() / denom;
}

Complex mobius_psi(Complex l) {
  check_off_pole(l, kHalfI, "mobius_psi");
  return (l + kHalfI) / (l - kHalfI);
}

Complex mobius_phi(Complex x) {
  check_off_pole(x, Complex{1.0, 0.0}, "mobius_phi");
  return kHalfI * (x + 1.0) / (x - 1.0);
}

CVec resolvent_col(Complex l1, Complex l2, int m, int n) {
  check_off_pole(l1, kHalfI, "resolvent_col");
  check_off_pole(l2, kHalfI, "resolvent_col");
  const Complex y1 = mobius_psi(l1);
  const Complex y2 = mobius_psi(l2);
  const Complex pre = 1.0 / ((kHalfI - l1) * (kHalfI - l2));
  CVec v(m * n);
  Complex p1 = 1.0;
  for (int i = 1; i <= n; ++i) {
    Complex p2 = 1.0;
    for (int j = 1; j <= m; ++j) {
      v(m * (i - 1) + j - 1) = pre * p1 * p2;
      p2 *= y2;
    }
    p1 *= y1;
  }
  return v;
}

CRow resolvent_row(Complex u1, Complex u2, int m, int n) {
  check_off_pole(u1, -kHalfI, "resolvent_row");
  check_off_pole(u2, -kHalfI, "resolvent_row");
  const Complex z1 = (u1 - kHalfI) / (u1 + kHalfI);
  const Complex z2 = (u2 - kHalfI) / (u2 + kHalfI);
  const Complex pre = 1.0 / ((u1 + kHalfI) * (u2 + kHalfI));
  CRow v(m * n);
  Complex p1 = 1.0;
  for (int i = 1; i <= n; ++i) {
    Complex p2 = 1.0;
    for (int j = 1; j <= m; ++j) {
      v(m * (i - 1) + j - 1) = pre * p1 * p2;
      p2 *= z2;
    }
    p1 *= z1;
  }
  return v;
}

CVec scalar_resolvent_col(Complex l, int r) {
  check_off_pole(l, kHalfI, "scalar_resolvent_col");
  const Complex y = mobius_psi(l);
  const Complex pre = 1.0 / (kHalfI - l);
  CVec v(r);
  Complex p = 1.0;
  for (int j = 0; j < r; ++j) {
    v(j) = pre * p;
    p *= y;
  }
  return v;
}

CRow scalar_resolvent_row(Complex u, int r) {
  check_off_pole(u, -kHalfI, "scalar_resolvent_row");
  const Complex z = (u - kHalfI) / (u + kHalfI);
  const Complex pre = -1.0 / (u + kHalfI);
  CRow v(r);
  Complex p = 1.0;
  for (int j = 0; j < r; ++j) {
    v(j) = pre * p;
    p *= z;
  }
  return v;
}

}  // namespace tbtinv::structured
