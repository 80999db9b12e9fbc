#include "ztwo/indexthy.hpp"

#include <cstdlib>
#include <stdexcept>

#include "ztwo/vanishing.hpp"

namespace ztwo::indexthy {

void ManifoldProfile::validate() const {
  if (b1 != 0) throw std::invalid_argument("profile: b1 must be 0");
  if (b_plus_fixed < 0 || b_plus_fixed > b_plus)
    throw std::invalid_argument("profile: b_plus_fixed must lie in [0, b_plus]");
  const long long b_minus = euler - 2 - b_plus;
  if (b_minus < 0) throw std::invalid_argument("profile: euler number below 2 + b_plus");
  if (signature != b_plus - b_minus)
    throw std::invalid_argument("profile: signature inconsistent with euler number and b_plus");
  if (spin && signature % 16 != 0)
    throw std::invalid_argument("profile: spin requires signature divisible by 16");
}

SignAssignment::SignAssignment(std::vector<int> values) : eps(std::move(values)) {
  for (int e : eps) {
    if (e != 1 && e != -1) throw std::invalid_argument("sign assignment entries must be +1 or -1");
    sum += e;
  }
}

long long spin_index(long long signature) {
  if (signature % 8 != 0) throw std::domain_error("not a spin signature");
  return -signature / 8;
}

SpinIndices equivariant_indices(long long signature, long long eps_sum) {
  if (signature % 16 != 0)
    throw std::domain_error("equivariant indices: signature not divisible by 16");
  if (eps_sum % 8 != 0)
    throw std::domain_error("equivariant indices: sign sum not divisible by 8");
  SpinIndices k;
  k.k_first = -signature / 16 + eps_sum / 8;
  k.k_second = -signature / 16 - eps_sum / 8;
  return k;
}

long long dc(long long k_sum, long long b_plus) { return 2 * k_sum - (1 + b_plus); }

long long fixed_point_count(const ManifoldProfile& profile) {
  profile.validate();
  // Closed form of the three quotient identities for an involution with m
  // isolated fixed points: chi(X/G) = (chi(X) + m) / 2, Sign(X/G) =
  // Sign(X) / 2, and 1 + b_plus_fixed = (chi(X/G) + Sign(X/G)) / 2.
  const long long m = 4 + 4 * profile.b_plus_fixed - profile.signature - profile.euler;
  if (m < 0 || (m - profile.euler) % 2 != 0) throw std::domain_error("inconsistent profile");
  return m;
}

std::set<long long> admissible_eps_sums(const ManifoldProfile& profile, long long m,
                                        bool require_even_k) {
  profile.validate();
  if (!profile.spin) throw std::invalid_argument("admissible sums require a spin profile");
  std::set<long long> sums;
  for (long long s = -(m - m % 8); s <= m; s += 8) {
    if (std::llabs(s) > m) continue;
    SpinIndices k = equivariant_indices(profile.signature, s);
    if (require_even_k && (k.k_first % 2 != 0 || k.k_second % 2 != 0)) continue;
    sums.insert(s);
  }
  return sums;
}

std::set<long long> smooth_required_eps(const ManifoldProfile& profile, long long m,
                                        bool bf_nonvanishing, Route route) {
  if (route == Route::EvenK) return admissible_eps_sums(profile, m, true);
  if (!bf_nonvanishing)
    throw std::invalid_argument("gauge route requires nonvanishing input");
  std::set<long long> result;
  for (long long s : admissible_eps_sums(profile, m, false)) {
    SpinIndices k = equivariant_indices(profile.signature, s);
    auto verdict = vanishing::bf_vanishing_even(profile, k);
    // A sum whose indices make the invariant vanish cannot occur smoothly
    // once nonvanishing is asserted.
    if (verdict.verdict != vanishing::Verdict::Vanishes) result.insert(s);
  }
  return result;
}

const char* even_k_tension_note() {
  return "the even-index filter is route-dependent: sums of +/-8 on the rank-44 "
         "profile give odd index components, so the filter is applied on the even-k "
         "route only";
}

}  // namespace ztwo::indexthy
