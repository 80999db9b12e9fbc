#pragma once

#include <optional>
#include <vector>

#include "ztwo/numeric.hpp"

namespace ztwo {

/// Smith decomposition left * a * right = diag, with unimodular transforms.
/// Diagonal entries are nonnegative and each divides the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix diag;
  IntMatrix right;
  int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Basis of the integer kernel of a, as columns. The span is the full
/// (saturated) kernel lattice.
IntMatrix kernel_basis(const IntMatrix& a);

/// Exact integer solution x of a * x = b, column by column; nullopt when no
/// integral solution exists.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& a);

int rank(const IntMatrix& a);

/// Invariant factors of coker(a) = Z^m / colspan(a), m = a.rows().
/// Factors > 1 in divisibility order, then one 0 per infinite cyclic factor;
/// unit factors are dropped.
std::vector<Int> cokernel_invariants(const IntMatrix& a);

/// Inertia of a symmetric integer matrix, computed by exact symmetric
/// congruence diagonalization over the rationals. Zero diagonal entries are
/// handled with a swap or a hyperbolic transvection pivot.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int signature() const { return positive - negative; }
};

Inertia rational_inertia(const IntMatrix& symmetric);

// Mod-2 linear algebra (entries reduced from Z).
int rank_mod2(const IntMatrix& a);
/// Kernel basis mod 2; columns with entries in {0,1}.
IntMatrix kernel_basis_mod2(const IntMatrix& a);

}  // namespace ztwo
