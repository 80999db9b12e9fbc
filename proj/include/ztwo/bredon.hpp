#pragma once

#include <array>
#include <vector>

#include "ztwo/indexthy.hpp"
#include "ztwo/linalg.hpp"

namespace ztwo::bredon {

/// Multiplicities of the four irreducible pieces of the ambient universe:
/// a_plus of C+ (circle acts by weight 1, involution trivially),
/// a_minus of C- (circle by weight 1, involution by -1),
/// b_plus of R+ (both trivial), b_minus of R- (involution by -1).
struct RepMultiplicities {
  int a_plus = 0;
  int a_minus = 0;
  int b_plus = 0;
  int b_minus = 0;

  RepMultiplicities operator+(const RepMultiplicities& o) const {
    return {a_plus + o.a_plus, a_minus + o.a_minus, b_plus + o.b_plus, b_minus + o.b_minus};
  }
  bool operator==(const RepMultiplicities&) const = default;

  int real_dim() const { return 2 * a_plus + 2 * a_minus + b_plus + b_minus; }
};

/// The five isotropy types occurring in the universe: the trivial group, the
/// two order-2 subgroups (the involution itself and its twist by the circle
/// element -1), the circle, and the full group.
enum class Subgroup { Trivial = 0, Z2 = 1, Z2Tilde = 2, Circle = 3, Full = 4 };

inline constexpr std::array<Subgroup, 5> kAllSubgroups = {
    Subgroup::Trivial, Subgroup::Z2, Subgroup::Z2Tilde, Subgroup::Circle, Subgroup::Full};

const char* subgroup_name(Subgroup h);

struct FixedDims {
  std::array<int, 5> dims{};  // indexed by Subgroup

  int at(Subgroup h) const { return dims[static_cast<int>(h)]; }
  bool operator==(const FixedDims&) const = default;
};

/// Real dimensions of the fixed subspaces of each of the five subgroups.
FixedDims fixed_dims(const RepMultiplicities& v);

/// Index-part multiplicities before stabilization; entries may be negative.
struct SignedMultiplicities {
  long long c_plus = 0;
  long long c_minus = 0;
};

/// Lexicographically minimal (a+, a-, b) such that suspending source and
/// target by a+ C+ + a- C- + b R+ puts the mapping space in the stable range:
/// both Freudenthal inequality families hold over every subgroup and every
/// nested distinguished pair. Negative index multiplicities are first shifted
/// into the target. Requires at least two target R-summands in total; the
/// search box is 0..64 per coordinate, exceeded -> error.
RepMultiplicities stable_suspension(SignedMultiplicities v0, RepMultiplicities w0);

/// Suspension data for a vanishing certificate: the stabilized source and
/// target V = V' + V0 and W = V' + W0, padded with copies of C+ + C- until
/// the source has at least two of each complex type (which also forces the
/// singular set into codimension >= 4).
struct SuspensionData {
  RepMultiplicities v_prime;
  RepMultiplicities v;
  RepMultiplicities w;
};

SuspensionData suspension_data(SignedMultiplicities v0, RepMultiplicities w0);

/// Value of a coefficient system at the free orbit: an abelian group (Z or
/// Z/2) with the residual order-2 action. The sign action on Z/2 is
/// normalized to trivial.
struct CoefficientModule {
  enum class Ring { Z, Z2 };
  enum class Action { Trivial, Sign };

  CoefficientModule(Ring r, Action a) : ring(r), action(a) {
    if (ring == Ring::Z2) action = Action::Trivial;
  }

  Ring ring;
  Action action;
};

/// Isomorphism class of a finitely generated abelian group: torsion factors
/// > 1 in divisibility order, then one 0 per infinite cyclic summand.
struct CohomologyGroup {
  std::vector<Int> invariant_factors;

  bool trivial() const { return invariant_factors.empty(); }
  bool operator==(const CohomologyGroup&) const = default;
};

/// Chain complex of free modules over the group ring of the order-2 group.
/// Ranks are per-degree free ranks; each boundary is an integer matrix in the
/// orbit basis (sigma_1, g sigma_1, sigma_2, g sigma_2, ...), mapping degree
/// d+1 to degree d. Boundaries must square to zero and commute with the
/// basis involution.
class EquivariantChainComplex {
 public:
  EquivariantChainComplex(int lowest_degree, std::vector<int> ranks,
                          std::vector<IntMatrix> boundaries, bool lower_boundary_derived = false);

  int lowest_degree() const { return lowest_; }
  int top_degree() const { return lowest_ + static_cast<int>(ranks_.size()) - 1; }
  bool in_range(int degree) const { return degree >= lowest_ && degree <= top_degree(); }
  int rank_at(int degree) const;
  /// Boundary from degree to degree-1; a 0 x 0 placeholder outside the range.
  const IntMatrix& boundary_from(int degree) const;
  bool lower_boundary_derived() const { return lower_boundary_derived_; }

 private:
  int lowest_;
  std::vector<int> ranks_;
  std::vector<IntMatrix> boundaries_;  // boundaries_[i] maps degree lowest_+i+1 to lowest_+i
  IntMatrix empty_;
  bool lower_boundary_derived_;
};

/// Top two cells of the circle quotient of the representation sphere of V,
/// relative to its singular set: one free orbit in each of degrees n and n-1
/// with boundary 1-g, for n = b_plus(V) + 1 + 2(a_plus + a_minus - 1).
/// A rank-one degree n-2 with boundary 1+g is included: that map is forced on
/// free orbits by d(d) = 0 and is needed for cohomology at degree n-1; the
/// complex flags it as derived rather than constructed.
/// Requires a_plus, a_minus >= 2, no R- summand, and the singular set in
/// codimension >= 4.
EquivariantChainComplex top_complex(const RepMultiplicities& v);

/// Cohomology at the given degree of the equivariant cochain complex
/// Hom over the group ring into the coefficient module.
CohomologyGroup bredon_cohomology(const EquivariantChainComplex& c, const CoefficientModule& m,
                                  int degree);

/// Image of the action-forgetting map from equivariant cochain cohomology to
/// ordinary cochain cohomology at the given degree.
CohomologyGroup forgetful_image(const EquivariantChainComplex& c, const CoefficientModule& m,
                                int degree);

/// True iff every equivariant cochain group below degree n-1 vanishes: the
/// target's fixed spheres are connected enough relative to the source's, for
/// both order-2 subgroups, with b_plus and b_plus_fixed positive.
bool low_degree_vanishing(const RepMultiplicities& v, const RepMultiplicities& w,
                          const indexthy::ManifoldProfile& profile);

}  // namespace ztwo::bredon
