#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ztwo/linalg.hpp"

using namespace ztwo;

namespace {

IntMatrix make(int rows, int cols, std::initializer_list<long> values) {
  IntMatrix m(rows, cols);
  auto it = values.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Int(*it++);
  return m;
}

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form on a known matrix") {
  IntMatrix a = make(2, 2, {2, 4, 4, 2});
  SmithForm f = smith_normal_form(a);
  CHECK(f.rank == 2);
  CHECK(f.diag(0, 0) == 2);
  CHECK(f.diag(1, 1) == 6);
  CHECK(matrices_equal(IntMatrix(f.left * a * f.right), f.diag));
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    int rows = size(rng), cols = size(rng);
    IntMatrix a = random_matrix(rng, rows, cols, 9);
    SmithForm f = smith_normal_form(a);
    CHECK(matrices_equal(IntMatrix(f.left * a * f.right), f.diag));
    Int dl = determinant(f.left);
    Int dr = determinant(f.right);
    CHECK((dl == 1 || dl == -1));
    CHECK((dr == 1 || dr == -1));
    for (int i = 0; i + 1 < f.rank; ++i) {
      CHECK(f.diag(i, i) > 0);
      CHECK(divides(f.diag(i, i), f.diag(i + 1, i + 1)));
    }
    CHECK(f.rank == oracles::rational_rank(a));
    for (int i = 0; i < std::min(rows, cols); ++i)
      for (int j = 0; j < std::min(rows, cols); ++j)
        if (i != j) CHECK(f.diag(i, j) == 0);
  }
}

TEST_CASE("kernel basis spans the saturated kernel") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = size(rng), cols = size(rng);
    IntMatrix a = random_matrix(rng, rows, cols, 6);
    IntMatrix k = kernel_basis(a);
    CHECK(static_cast<int>(k.cols()) == cols - oracles::rational_rank(a));
    CHECK(is_zero_matrix(IntMatrix(a * k)));
    // Saturated: the quotient of the ambient lattice by the kernel span has
    // no torsion.
    for (const Int& factor : cokernel_invariants(k)) CHECK(factor == 0);
  }
}

TEST_CASE("integer solve recovers exact solutions and rejects non-integral ones") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> size(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = size(rng), cols = size(rng), rhs = size(rng);
    IntMatrix a = random_matrix(rng, rows, cols, 5);
    IntMatrix x = random_matrix(rng, cols, rhs, 5);
    IntMatrix b = a * x;
    auto solved = solve_integer(a, b);
    REQUIRE(solved.has_value());
    CHECK(matrices_equal(IntMatrix(a * *solved), b));
  }
  CHECK_FALSE(solve_integer(make(1, 1, {2}), make(1, 1, {1})).has_value());
  CHECK_FALSE(solve_integer(make(2, 1, {1, 0}), make(2, 1, {0, 1})).has_value());
}

TEST_CASE("determinant stays exact and matches the smith diagonal") {
  CHECK(determinant(make(1, 1, {-7})) == -7);
  CHECK(determinant(make(2, 2, {0, 1, 1, 0})) == -1);
  CHECK(determinant(make(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5})) == 30);
  CHECK(determinant(make(2, 2, {1, 1, 1, 1})) == 0);
  // Row swaps needed.
  CHECK(determinant(make(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> size(1, 5);
    int n = size(rng);
    IntMatrix a = random_matrix(rng, n, n, 8);
    SmithForm f = smith_normal_form(a);
    Int diag_product = 1;
    for (int i = 0; i < n; ++i) diag_product *= f.diag(i, i);
    CHECK(abs(determinant(a)) == abs(diag_product));
  }
}

TEST_CASE("rational inertia on reference forms") {
  Inertia h = rational_inertia(make(2, 2, {0, 1, 1, 0}));
  CHECK(h.positive == 1);
  CHECK(h.negative == 1);
  CHECK(h.zero == 0);

  Inertia mixed = rational_inertia(make(3, 3, {2, 0, 0, 0, -3, 0, 0, 0, 0}));
  CHECK(mixed.positive == 1);
  CHECK(mixed.negative == 1);
  CHECK(mixed.zero == 1);

  // All-zero diagonal, rank 4: two hyperbolic planes.
  Inertia planes = rational_inertia(make(4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}));
  CHECK(planes.positive == 2);
  CHECK(planes.negative == 2);

  // Hyperbolic pivot with a radical direction in the middle.
  Inertia rad = rational_inertia(make(3, 3, {0, 0, 1, 0, 0, 0, 1, 0, 0}));
  CHECK(rad.positive == 1);
  CHECK(rad.negative == 1);
  CHECK(rad.zero == 1);
}

TEST_CASE("inertia is a congruence invariant") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int n = size(rng);
    IntMatrix m = oracles::random_symmetric(rng, n, 6);
    auto u = oracles::random_unimodular(rng, n);
    IntMatrix conjugated = u.u.transpose() * m * u.u;
    Inertia a = rational_inertia(m);
    Inertia b = rational_inertia(conjugated);
    CHECK(a.positive == b.positive);
    CHECK(a.negative == b.negative);
    CHECK(a.zero == b.zero);
  }
}

TEST_CASE("congruence signature agrees with the Sturm-chain oracle") {
  std::mt19937 rng(515);
  std::uniform_int_distribution<int> size(1, 6);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = size(rng);
    IntMatrix m = oracles::random_symmetric(rng, n, 7);
    auto expected = oracles::sturm_signature(m);
    if (!expected) continue;  // singular, oracle declines
    CHECK(rational_inertia(m).signature() == *expected);
    ++checked;
  }
  CHECK(checked > 300);
  // Repeated eigenvalues exercise the multiplicity handling.
  CHECK(*oracles::sturm_signature(make(2, 2, {1, 0, 0, 1})) == 2);
  CHECK(*oracles::sturm_signature(make(3, 3, {-2, 0, 0, 0, -2, 0, 0, 0, 5})) == -1);
}

TEST_CASE("mod 2 rank and kernel") {
  IntMatrix a = make(2, 3, {1, 1, 0, 1, 1, 0});
  CHECK(rank_mod2(a) == 1);
  IntMatrix k = kernel_basis_mod2(a);
  CHECK(k.cols() == 2);
  IntMatrix prod = a * k;
  for (Eigen::Index i = 0; i < prod.rows(); ++i)
    for (Eigen::Index j = 0; j < prod.cols(); ++j) CHECK(is_even(prod(i, j)));

  std::mt19937 rng(77);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = size(rng), cols = size(rng);
    IntMatrix m = random_matrix(rng, rows, cols, 5);
    IntMatrix kb = kernel_basis_mod2(m);
    CHECK(rank_mod2(m) + kb.cols() == cols);
    IntMatrix image = m * kb;
    for (Eigen::Index i = 0; i < image.rows(); ++i)
      for (Eigen::Index j = 0; j < image.cols(); ++j) CHECK(is_even(image(i, j)));
  }
}

TEST_CASE("cokernel invariants describe finite and free parts") {
  // Z^2 / span{(2,0),(0,3)}: invariant factor 6.
  auto factors = cokernel_invariants(make(2, 2, {2, 0, 0, 3}));
  REQUIRE(factors.size() == 1);
  CHECK(factors[0] == 6);

  auto with_free = cokernel_invariants(make(2, 1, {2, 0}));
  REQUIRE(with_free.size() == 2);
  CHECK(with_free[0] == 2);
  CHECK(with_free[1] == 0);

  auto trivial = cokernel_invariants(make(2, 2, {1, 0, 0, 1}));
  CHECK(trivial.empty());
}
