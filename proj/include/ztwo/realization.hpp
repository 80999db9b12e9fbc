#pragma once

#include <set>
#include <vector>

#include "ztwo/numeric.hpp"

namespace ztwo::realization {

/// Framed-link data: a symmetric integer matrix with framings on the diagonal
/// and linking numbers off it. invariant_disks records the attestation that
/// every component bounds an invariant embedded disk (true for links built
/// from fibers of the Hopf map); it is carried, not verified.
class FramedLinkMatrix {
 public:
  explicit FramedLinkMatrix(IntMatrix matrix, bool invariant_disks = true);

  const IntMatrix& matrix() const { return matrix_; }
  int components() const { return static_cast<int>(matrix_.rows()); }
  bool invariant_disks() const { return invariant_disks_; }

 private:
  IntMatrix matrix_;
  bool invariant_disks_;
};

/// Link of n fibers of the Hopf map: all linking numbers 1, given framings.
FramedLinkMatrix hopf_linking_matrix(int n, const std::vector<Int>& framings);

/// True iff every diagonal entry is even and every off-diagonal entry odd.
bool ee_matrix_check(const FramedLinkMatrix& m);

/// Relative sign of the handle fixed point against the base fixed point:
/// +1 for framing 2 mod 4, -1 for framing 0 mod 4 (the loop parity (r+2)/2
/// odd is the sign-reversing case). Odd framings do not attach equivariantly.
int framing_sign(const Int& r);

/// All totals of fixed-point signs the handle decomposition can produce: the
/// base contributes s0, each handle s0 * framing_sign(framing), and the cap's
/// sign is free; s0 ranges over both signs, so the set is symmetric.
std::set<long long> eps_achievable(const FramedLinkMatrix& m);

/// One base fixed point, one fixed point per handle with its sign relative to
/// the base, free handle pairs carrying no fixed points, and the cap.
struct HandleDecomposition {
  std::vector<Int> framings;
  std::vector<int> eps_rel;  // framing_sign per handle
  long long free_handle_pairs = 0;
  int fixed_points = 0;  // handles + base + cap
};

HandleDecomposition handle_description(const FramedLinkMatrix& m, long long free_pairs);

}  // namespace ztwo::realization
