#include "ztwo/vanishing.hpp"

#include <stdexcept>

namespace ztwo::vanishing {

ConditionRecord evaluate_conditions(const indexthy::ManifoldProfile& profile,
                                    const indexthy::SpinIndices& k) {
  profile.validate();
  ConditionRecord c;
  c.b1_zero = (profile.b1 == 0);
  c.b_plus_ge_2 = (profile.b_plus >= 2);
  c.b_plus_fixed_ge_1 = (profile.b_plus_fixed >= 1);
  c.parity_odd = ((profile.b_plus - profile.b_plus_fixed) % 2 != 0);
  c.dc_is_one = (indexthy::dc(k.k_first + k.k_second, profile.b_plus) == 1);
  c.index_bounds = (2 * k.k_first < 1 + profile.b_plus_fixed) &&
                   (2 * k.k_second < 1 + profile.b_plus_fixed);
  return c;
}

namespace {

std::optional<BredonCertificate> build_certificate(const indexthy::ManifoldProfile& profile,
                                                   const indexthy::SpinIndices& k) {
  if (profile.b_plus < 2 || profile.b_plus_fixed < 1) return std::nullopt;
  try {
    bredon::SignedMultiplicities v0{k.k_first, k.k_second};
    bredon::RepMultiplicities w0{0, 0, static_cast<int>(profile.b_plus_fixed),
                                 static_cast<int>(profile.b_plus - profile.b_plus_fixed)};
    bredon::SuspensionData susp = bredon::suspension_data(v0, w0);

    BredonCertificate cert;
    cert.v = susp.v;
    cert.w = susp.w;
    cert.low_degree_vanishing = bredon::low_degree_vanishing(susp.v, susp.w, profile);
    bredon::EquivariantChainComplex complex = bredon::top_complex(susp.v);
    cert.top_degree = complex.top_degree();
    cert.lower_boundary_derived = complex.lower_boundary_derived();
    cert.twisted_coefficients = ((profile.b_plus - profile.b_plus_fixed) % 2 != 0);
    bredon::CoefficientModule below_top(bredon::CoefficientModule::Ring::Z,
                                        cert.twisted_coefficients
                                            ? bredon::CoefficientModule::Action::Sign
                                            : bredon::CoefficientModule::Action::Trivial);
    cert.h_below_top = bredon::bredon_cohomology(complex, below_top, complex.top_degree() - 1);
    bredon::CoefficientModule at_top(bredon::CoefficientModule::Ring::Z2,
                                     bredon::CoefficientModule::Action::Trivial);
    cert.forgetful_at_top = bredon::forgetful_image(complex, at_top, complex.top_degree());
    return cert;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

VanishingVerdict run_checker(const indexthy::ManifoldProfile& profile,
                             const indexthy::SpinIndices& k) {
  VanishingVerdict v;
  v.conditions = evaluate_conditions(profile, k);
  v.verdict = v.conditions.all() ? Verdict::Vanishes : Verdict::NoConclusion;
  v.certificate = build_certificate(profile, k);
  if (v.verdict == Verdict::Vanishes && (!v.certificate || !v.certificate->verifies()))
    throw std::logic_error("vanishing verdict without a verifying certificate");
  return v;
}

}  // namespace

VanishingVerdict bf_vanishing_even(const indexthy::ManifoldProfile& profile,
                                   const indexthy::SpinIndices& k) {
  if (k.odd_type) throw std::invalid_argument("even-type checker given odd-type indices");
  return run_checker(profile, k);
}

VanishingVerdict bf_vanishing_odd(const indexthy::ManifoldProfile& profile,
                                  const indexthy::SpinIndices& k) {
  if (!k.odd_type) throw std::invalid_argument("odd-type checker given even-type indices");
  return run_checker(profile, k);
}

NonsmoothabilityReport nonsmoothability(const indexthy::ManifoldProfile& profile,
                                        const lattice::BilinearLattice& l,
                                        const lattice::LatticeInvolution& g,
                                        const realization::FramedLinkMatrix& t_matrix,
                                        indexthy::Route route, bool bf_nonvanishing) {
  profile.validate();
  NonsmoothabilityReport report;
  report.route = route;
  report.bf_nonvanishing = bf_nonvanishing;

  report.ee = lattice::ee_conditions(l, g);
  if (!report.ee.all()) throw std::domain_error("no locally linear realization certified");
  report.trivial_rank = report.ee.n_trivial;

  // The supplied link matrix must present the same even indefinite unimodular
  // class as the trivial summand of the form. When either side fails to
  // classify, the match is recorded as false but the verdict still computes.
  try {
    report.t_matrix_class =
        lattice::classify_indefinite_even(lattice::BilinearLattice(t_matrix.matrix()));
    if (auto block = lattice::coordinate_trivial_block(l, g)) {
      report.trivial_block_class = lattice::classify_indefinite_even(*block);
      report.class_match = (report.t_matrix_class == *report.trivial_block_class);
    }
  } catch (const std::domain_error&) {
    report.class_match = false;
  }

  report.fixed_points = indexthy::fixed_point_count(profile);
  report.m_consistency = (report.fixed_points == report.trivial_rank + 2);

  report.required =
      indexthy::smooth_required_eps(profile, report.fixed_points, bf_nonvanishing, route);
  for (long long s : indexthy::admissible_eps_sums(profile, report.fixed_points, false)) {
    EpsSumAudit row;
    row.eps_sum = s;
    row.k = indexthy::equivariant_indices(profile.signature, s);
    row.conditions = evaluate_conditions(profile, row.k);
    row.both_even = row.k.k_first % 2 == 0 && row.k.k_second % 2 == 0;
    row.removed = route == indexthy::Route::Gauge ? row.conditions.all() : !row.both_even;
    report.sum_audit.push_back(row);
  }
  report.achievable = realization::eps_achievable(t_matrix);

  std::set<long long> overlap;
  for (long long s : report.required)
    if (report.achievable.count(s)) overlap.insert(s);
  const bool disjoint = overlap.empty();
  report.verdict = (disjoint && report.ee.all() && report.class_match && report.m_consistency)
                       ? NonsmoothabilityReport::Outcome::Nonsmoothable
                       : NonsmoothabilityReport::Outcome::Inconclusive;
  return report;
}

}  // namespace ztwo::vanishing
