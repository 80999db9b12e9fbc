#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ztwo/bredon.hpp"
#include "ztwo/indexthy.hpp"
#include "ztwo/lattice.hpp"
#include "ztwo/realization.hpp"

namespace ztwo::vanishing {

enum class Verdict { Vanishes, NoConclusion };

/// The four numeric hypotheses of the vanishing theorem, split into the six
/// booleans reported for audit.
struct ConditionRecord {
  bool b1_zero = false;
  bool b_plus_ge_2 = false;
  bool b_plus_fixed_ge_1 = false;
  bool parity_odd = false;     // b_plus - b_plus_fixed odd
  bool dc_is_one = false;      // 2(k_first + k_second) - (1 + b_plus) = 1
  bool index_bounds = false;   // 2 k_first < 1 + b_plus_fixed, same for k_second

  bool all() const {
    return b1_zero && b_plus_ge_2 && b_plus_fixed_ge_1 && parity_odd && dc_is_one && index_bounds;
  }
};

ConditionRecord evaluate_conditions(const indexthy::ManifoldProfile& profile,
                                    const indexthy::SpinIndices& k);

/// Witness computations behind a vanishing verdict: the stabilized source and
/// target, vanishing of all low cochain groups, the twisted cohomology just
/// below the top, and the image of the action-forgetting map at the top.
struct BredonCertificate {
  bredon::RepMultiplicities v;
  bredon::RepMultiplicities w;
  int top_degree = 0;
  bool low_degree_vanishing = false;
  bool twisted_coefficients = false;
  bredon::CohomologyGroup h_below_top;
  bredon::CohomologyGroup forgetful_at_top;
  bool lower_boundary_derived = false;

  /// True when the certificate fully supports a vanishing verdict.
  bool verifies() const {
    return low_degree_vanishing && h_below_top.trivial() && forgetful_at_top.trivial();
  }
};

struct VanishingVerdict {
  Verdict verdict = Verdict::NoConclusion;
  ConditionRecord conditions;
  std::optional<BredonCertificate> certificate;
};

/// Even-type checker: verdict from the four hypotheses, certificate from the
/// cohomology pipeline whenever the stabilization preconditions allow it.
/// Failed hypotheses yield NoConclusion, never an error.
VanishingVerdict bf_vanishing_even(const indexthy::ManifoldProfile& profile,
                                   const indexthy::SpinIndices& k);

/// Odd-type checker: the same condition logic with the weight-1 and weight-3
/// index components.
VanishingVerdict bf_vanishing_odd(const indexthy::ManifoldProfile& profile,
                                  const indexthy::SpinIndices& k);

/// Per-sign-sum audit row: the index components for each admissible sum and
/// whether the chosen route removes it (failed evenness on the even-k route,
/// a full set of vanishing hypotheses on the gauge route).
struct EpsSumAudit {
  long long eps_sum = 0;
  indexthy::SpinIndices k;
  ConditionRecord conditions;
  bool both_even = false;
  bool removed = false;
};

struct NonsmoothabilityReport {
  enum class Outcome { Nonsmoothable, Inconclusive };

  Outcome verdict = Outcome::Inconclusive;
  std::set<long long> required;
  std::set<long long> achievable;
  lattice::EEReport ee;
  bool class_match = false;
  bool m_consistency = false;
  long long fixed_points = 0;   // m from the profile
  long long trivial_rank = 0;   // rank of the trivial summand
  lattice::FormClass t_matrix_class;
  std::optional<lattice::FormClass> trivial_block_class;
  indexthy::Route route = indexthy::Route::EvenK;
  bool bf_nonvanishing = false;
  std::vector<EpsSumAudit> sum_audit;
};

/// Full verdict pipeline: realization conditions on (lattice, involution),
/// classification match between the supplied link matrix and the trivial
/// summand of the form, fixed-point count consistency, and disjointness of
/// the required and achievable sign sums. Realization conditions failing is
/// an error (the construction's hypothesis is unmet), not an inconclusive
/// verdict.
NonsmoothabilityReport nonsmoothability(const indexthy::ManifoldProfile& profile,
                                        const lattice::BilinearLattice& l,
                                        const lattice::LatticeInvolution& g,
                                        const realization::FramedLinkMatrix& t_matrix,
                                        indexthy::Route route, bool bf_nonvanishing);

}  // namespace ztwo::vanishing
