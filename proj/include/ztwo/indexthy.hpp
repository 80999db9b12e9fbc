#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace ztwo::indexthy {

/// Numerical shadow of a closed oriented 4-manifold with involution.
struct ManifoldProfile {
  long long euler = 0;          // chi
  long long signature = 0;      // Sign
  long long b1 = 0;
  long long b_plus = 0;         // b+
  long long b_plus_fixed = 0;   // b+ of the invariant part
  bool spin = false;

  /// Throws std::invalid_argument naming the violated invariant.
  void validate() const;
};

/// Equivariant Dirac index components. Even type carries (k+, k-); odd type
/// carries the weight-1 and weight-3 components (k1, k3).
struct SpinIndices {
  long long k_first = 0;   // k+ or k1
  long long k_second = 0;  // k- or k3
  bool odd_type = false;
};

struct SignAssignment {
  std::vector<int> eps;  // entries +1 / -1
  long long sum = 0;

  explicit SignAssignment(std::vector<int> values);
};

/// Total Dirac index -sign/8; requires sign divisible by 8.
long long spin_index(long long signature);

/// Index components from the signature and the fixed-point sign sum:
/// k(+/-) = -sign/16 +/- eps_sum/8. Requires sign = 0 mod 16 and
/// eps_sum = 0 mod 8, reported separately.
SpinIndices equivariant_indices(long long signature, long long eps_sum);

/// Virtual moduli dimension 2*k_sum - (1 + b_plus).
long long dc(long long k_sum, long long b_plus);

/// Number of isolated fixed points forced by the quotient's Euler number and
/// signature: m = 4 + 4*b_plus_fixed - sign - chi.
long long fixed_point_count(const ManifoldProfile& profile);

/// All sign sums S with S = 0 mod 8, |S| <= m, valid index arithmetic, and
/// (optionally) both index components even.
std::set<long long> admissible_eps_sums(const ManifoldProfile& profile, long long m,
                                        bool require_even_k);

enum class Route { EvenK, Gauge };

/// Sign sums a smooth even-type action could still realize. The even-k route
/// keeps only sums with both index components even. The gauge route starts
/// from all admissible sums and removes those for which the vanishing
/// theorem's hypotheses all hold, which would contradict the asserted
/// nonvanishing of the stable invariant; it therefore requires
/// bf_nonvanishing = true.
std::set<long long> smooth_required_eps(const ManifoldProfile& profile, long long m,
                                        bool bf_nonvanishing, Route route);

/// The evenness of the index components is an optional filter, not an
/// invariant: on the rank-44 profile the sums +/-8 force odd components, so
/// the two routes make the choice explicitly.
const char* even_k_tension_note();

}  // namespace ztwo::indexthy
