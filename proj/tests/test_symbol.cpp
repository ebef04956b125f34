#include <doctest.h>

#include <random>

#include "tbtinv/linalg.hpp"
#include "tbtinv/structured.hpp"
#include "tbtinv/symbol.hpp"
#include "test_util.hpp"

using namespace tbtinv;
using namespace testutil;

TEST_CASE("assemble scalar and single-block cases") {
  TbtSymbol s(1, 1);
  s.at(0, 0) = 5.0;
  const CMat t = assemble(s);
  REQUIRE(t.rows() == 1);
  CHECK(t(0, 0) == Complex(5.0));

  TbtSymbol s2(2, 1);
  const Complex a{1.0, 2.0}, b{-0.5, 0.25}, c{3.0, -1.0};
  s2.at(0, 0) = a;
  s2.at(0, 1) = b;
  s2.at(0, -1) = c;
  CMat expected(2, 2);
  expected << a, c, b, a;
  CHECK(rel_err(assemble(s2), expected) < 1e-16);
}

TEST_CASE("assemble index map, exhaustive") {
  const int m = 2, n = 2;
  const TbtSymbol sym = random_symbol(m, n, 101, 0.0);
  const CMat t = assemble(sym);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= m; ++j)
        for (int l = 1; l <= m; ++l)
          CHECK(t(m * (i - 1) + j - 1, m * (k - 1) + l - 1) == sym.at(i - k, j - l));
}

TEST_CASE("project_tbt is exact on TBT input") {
  const TbtSymbol sym = random_symbol(3, 2, 5, 1.0);
  const auto [proj, dev] = project_tbt(assemble(sym), 3, 2);
  CHECK(dev < 1e-15);
  CHECK(rel_err(proj.coeffs, sym.coeffs) < 1e-15);
}

TEST_CASE("project_tbt deviation bounded by the perturbation") {
  std::mt19937_64 eng(7);
  const TbtSymbol sym = random_symbol(2, 2, 9, 2.0);
  const CMat t = assemble(sym);
  const double eps = 1e-3;
  CMat e = rand_mat(eng, 4, 4);
  e *= eps / max_abs(e);
  const CMat a = t + e;
  const auto [proj, dev] = project_tbt(a, 2, 2);
  CHECK(dev <= 2.0 * eps / max_abs(a) + 1e-15);
}

TEST_CASE("project_tbt equals the per-class mean, brute force") {
  std::mt19937_64 eng(8);
  const int m = 2, n = 2;
  const CMat a = rand_mat(eng, m * n, m * n);
  const auto [proj, dev] = project_tbt(a, m, n);
  for (int r = -(n - 1); r <= n - 1; ++r) {
    for (int s = -(m - 1); s <= m - 1; ++s) {
      Complex sum = 0.0;
      int count = 0;
      for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
          for (int j = 1; j <= m; ++j)
            for (int l = 1; l <= m; ++l)
              if (i - k == r && j - l == s) {
                sum += a(m * (i - 1) + j - 1, m * (k - 1) + l - 1);
                ++count;
              }
      CHECK(std::abs(proj.at(r, s) - sum / double(count)) < 1e-14);
    }
  }
  CHECK(dev > 0.0);  // random dense input is not TBT
}

TEST_CASE("random_symbol determinism and dominance") {
  const TbtSymbol a = random_symbol(3, 4, 42, 4.0);
  const TbtSymbol b = random_symbol(3, 4, 42, 4.0);
  CHECK((a.coeffs - b.coeffs).norm() == 0.0);

  const TbtSymbol c = random_symbol(3, 4, 43, 4.0);
  CHECK((a.coeffs - c.coeffs).norm() > 0.0);

  CHECK(std::isfinite(linalg::condition_estimate(assemble(a))));
}

TEST_CASE("assemble is linear in the symbol") {
  const int m = 2, n = 3;
  TbtSymbol s1 = random_symbol(m, n, 1, 0.0);
  TbtSymbol s2 = random_symbol(m, n, 2, 0.0);
  const Complex alpha{0.7, -1.3};
  TbtSymbol combo(m, n);
  combo.coeffs = alpha * s1.coeffs + s2.coeffs;
  CHECK(rel_err(assemble(combo), alpha * assemble(s1) + assemble(s2)) < 1e-14);
}

TEST_CASE("flip conjugation transposes T") {
  for (const auto [m, n] : {std::pair{2, 3}, std::pair{3, 1}, std::pair{1, 4}}) {
    const TbtSymbol sym = random_symbol(m, n, 77, 0.0);
    const CMat t = assemble(sym);
    const CMat u = structured::flip(m * n);
    CHECK(rel_err(u * t * u, t.transpose().eval()) < 1e-15);
  }
}
