#pragma once

#include <optional>

#include "ztwo/linalg.hpp"

namespace ztwo::lattice {

/// Symmetric integer bilinear form in a fixed basis.
class BilinearLattice {
 public:
  explicit BilinearLattice(IntMatrix gram);

  const IntMatrix& gram() const { return gram_; }
  int rank() const { return static_cast<int>(gram_.rows()); }

 private:
  IntMatrix gram_;
};

/// Generator of an order-2 isometry group acting on a lattice.
class LatticeInvolution {
 public:
  explicit LatticeInvolution(IntMatrix action);
  static LatticeInvolution identity(int n);

  const IntMatrix& action() const { return action_; }
  int rank() const { return static_cast<int>(action_.rows()); }

 private:
  IntMatrix action_;
};

struct FormProperties {
  bool even = false;
  bool unimodular = false;
  int signature = 0;
  bool indefinite = false;
  Int det = 0;
};

/// Parity, unimodularity, exact signature and (in)definiteness.
/// Throws std::domain_error("degenerate form") when det = 0.
FormProperties form_properties(const BilinearLattice& l);

/// Classification of an indefinite even unimodular form as
/// e8_count * E8 + hyperbolic_count * H. E8 is taken negative definite;
/// positive_e8 is set when the signature is positive and the E8 factors are
/// the sign-reversed ones.
struct FormClass {
  int e8_count = 0;
  int hyperbolic_count = 0;
  bool positive_e8 = false;

  bool operator==(const FormClass&) const = default;
};

FormClass classify_indefinite_even(const BilinearLattice& l);

/// True iff g*g = 1 and g preserves the form.
bool check_involution(const BilinearLattice& l, const LatticeInvolution& g);

struct EigenlatticeRanks {
  int fixed = 0;  // rank of ker(g - 1)
  int anti = 0;   // rank of ker(g + 1)
};

EigenlatticeRanks eigenlattice_ranks(const BilinearLattice& l, const LatticeInvolution& g);

/// Basis (as columns) of the sublattice fixed by g, resp. negated by g.
IntMatrix fixed_sublattice_basis(const BilinearLattice& l, const LatticeInvolution& g);
IntMatrix anti_sublattice_basis(const BilinearLattice& l, const LatticeInvolution& g);

/// Dimensions over F2 of the two Tate cohomology groups of the cyclic group
/// of order 2 acting on the lattice: h0 = dim ker(g-1)/im(g+1),
/// h1 = dim ker(g+1)/im(g-1).
struct TateDims {
  int h0 = 0;
  int h1 = 0;
};

TateDims tate_dims(const BilinearLattice& l, const LatticeInvolution& g);

/// Multiplicities in the decomposition of the lattice as a module over the
/// group ring of the order-2 group: trivial summands, sign summands, and
/// regular (free) summands.
struct DecompositionReport {
  int trivial = 0;
  int sign = 0;
  int regular = 0;
  int tate0 = 0;
  int tate1 = 0;
};

DecompositionReport integral_decomposition(const BilinearLattice& l, const LatticeInvolution& g);

/// Signature of the form on the +1 eigenspace minus the signature on the -1
/// eigenspace (both over the rationals).
int g_signature(const BilinearLattice& l, const LatticeInvolution& g);

/// Number of positive entries after diagonalizing the form restricted to the
/// fixed sublattice.
int b_plus_fixed(const BilinearLattice& l, const LatticeInvolution& g);

/// The three realization conditions for an involution on an even unimodular
/// form: no sign summand, even pairing of every vector with its image, and
/// vanishing equivariant signature.
struct EEReport {
  bool cond1 = false;  // no sign summand
  bool cond2 = false;  // gram * g has even diagonal, hence (v, gv) even for all v
  bool cond3 = false;  // g-signature is zero
  int n_trivial = 0;
  int g_sig = 0;

  bool all() const { return cond1 && cond2 && cond3; }
};

EEReport ee_conditions(const BilinearLattice& l, const LatticeInvolution& g);

/// The trivial summand read off coordinate-wise: the coordinates fixed by g,
/// provided they number exactly the trivial multiplicity and are orthogonal
/// to the remaining coordinates. Returns nullopt when the trivial summand is
/// not split off along coordinates (no basis-change search is attempted).
std::optional<BilinearLattice> coordinate_trivial_block(const BilinearLattice& l,
                                                        const LatticeInvolution& g);

}  // namespace ztwo::lattice
