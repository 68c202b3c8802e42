#include "oracles.hpp"

#include "sharpbound/error.hpp"
#include "sharpbound/tridiagonal.hpp"

#include <doctest.h>

#include <random>

using namespace sharpbound;

namespace {

oracle::Matrix dense(const TridiagonalSystem& s) {
  const std::size_t n = s.size();
  oracle::Matrix a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = s.diag[i];
    if (i > 0) a[i][i - 1] = s.sub[i - 1];
    if (i + 1 < n) a[i][i + 1] = s.sup[i];
  }
  return a;
}

}  // namespace

TEST_CASE("identity system returns the right-hand side") {
  TridiagonalSystem s{{0, 0, 0}, {1, 1, 1, 1}, {0, 0, 0}, {3.5, -1, 0, 2}};
  CHECK(thomas_solve(s) == s.rhs);
}

TEST_CASE("3x3 system with a hand solution") {
  // [4 1 0; 1 4 1; 0 1 4] x = [6 12 14] has x = [1 2 3]
  TridiagonalSystem s{{1, 1}, {4, 4, 4}, {1, 1}, {6, 12, 14}};
  const auto x = thomas_solve(s);
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(x[1] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(x[2] == doctest::Approx(3.0).epsilon(1e-15));
  const auto ref = oracle::dense_solve(dense(s), s.rhs);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(x[i] - ref[i]) <= 1e-15);
}

TEST_CASE("heat left-hand side at lambda = 1 against a dense solve") {
  TridiagonalSystem s{{-0.5, -0.5, -0.5}, {2, 2, 2, 2}, {-0.5, -0.5, -0.5}, {0, 1, 0, 0}};
  const auto x = thomas_solve(s);
  const auto ref = oracle::dense_solve(dense(s), s.rhs);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(x[i] - ref[i]) <= 1e-15);
}

TEST_CASE("random dominant systems have tiny residuals") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 40;
    TridiagonalSystem s;
    s.sub.resize(n - 1);
    s.sup.resize(n - 1);
    for (auto& v : s.sub) v = u(rng);
    for (auto& v : s.sup) v = u(rng);
    for (std::size_t i = 0; i < n; ++i) {
      s.diag.push_back((2.0 + std::abs(u(rng))) * (u(rng) < 0 ? -1.0 : 1.0));
      s.rhs.push_back(10.0 * u(rng));
    }
    const auto x = thomas_solve(s);
    double rhs_norm = 0.0;
    for (double r : s.rhs) rhs_norm = std::max(rhs_norm, std::abs(r));
    CHECK(s.residual(x) <= 1e-12 * rhs_norm);
  }
}

TEST_CASE("rejected systems") {
  TridiagonalSystem weak{{1}, {0.5, 3}, {1}, {1, 1}};
  CHECK_FALSE(weak.diagonally_dominant());
  CHECK_THROWS_AS(thomas_solve(weak), Error);

  TridiagonalSystem zero{{}, {1e-16}, {}, {1}};
  try {
    thomas_solve(zero);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NearSingular);
  }

  TridiagonalSystem ragged{{1}, {3, 3}, {}, {1, 1}};
  CHECK_THROWS_AS(thomas_solve(ragged), Error);
}
