#include "ztwo/bredon.hpp"

#include <algorithm>
#include <stdexcept>

namespace ztwo::bredon {

const char* subgroup_name(Subgroup h) {
  switch (h) {
    case Subgroup::Trivial: return "e";
    case Subgroup::Z2: return "Z2";
    case Subgroup::Z2Tilde: return "Z2~";
    case Subgroup::Circle: return "S1";
    case Subgroup::Full: return "Z2xS1";
  }
  return "?";
}

FixedDims fixed_dims(const RepMultiplicities& v) {
  if (v.a_plus < 0 || v.a_minus < 0 || v.b_plus < 0 || v.b_minus < 0)
    throw std::invalid_argument("multiplicities must be nonnegative");
  FixedDims d;
  d.dims[static_cast<int>(Subgroup::Trivial)] = v.real_dim();
  d.dims[static_cast<int>(Subgroup::Z2)] = 2 * v.a_plus + v.b_plus;
  d.dims[static_cast<int>(Subgroup::Z2Tilde)] = 2 * v.a_minus + v.b_plus;
  d.dims[static_cast<int>(Subgroup::Circle)] = v.b_plus + v.b_minus;
  d.dims[static_cast<int>(Subgroup::Full)] = v.b_plus;
  return d;
}

namespace {

// Nested pairs (K, H) with K a proper subgroup of H; every pair below is
// distinguished by at least one of the four universe representations.
constexpr std::pair<Subgroup, Subgroup> kNestedPairs[] = {
    {Subgroup::Trivial, Subgroup::Z2},     {Subgroup::Trivial, Subgroup::Z2Tilde},
    {Subgroup::Trivial, Subgroup::Circle}, {Subgroup::Trivial, Subgroup::Full},
    {Subgroup::Z2, Subgroup::Full},        {Subgroup::Z2Tilde, Subgroup::Full},
    {Subgroup::Circle, Subgroup::Full},
};

bool in_stable_range(const FixedDims& vp, const FixedDims& v0, const FixedDims& w0) {
  // Family (1): dim(source fixed part) at most twice the target connectivity.
  for (Subgroup h : kAllSubgroups) {
    if (vp.at(h) + v0.at(h) > 2 * (vp.at(h) + w0.at(h) - 1)) return false;
  }
  // Family (2): across each nested pair, source dimension at H stays below
  // the target connectivity at K.
  for (auto [k, h] : kNestedPairs) {
    if (vp.at(h) + v0.at(h) > vp.at(k) + w0.at(k) - 2) return false;
  }
  return true;
}

struct NormalizedPair {
  RepMultiplicities v0;
  RepMultiplicities w0;
};

NormalizedPair normalize(SignedMultiplicities v0, RepMultiplicities w0) {
  NormalizedPair n;
  n.w0 = w0;
  if (v0.c_plus < 0) {
    n.w0.a_plus += static_cast<int>(-v0.c_plus);
    v0.c_plus = 0;
  }
  if (v0.c_minus < 0) {
    n.w0.a_minus += static_cast<int>(-v0.c_minus);
    v0.c_minus = 0;
  }
  n.v0 = {static_cast<int>(v0.c_plus), static_cast<int>(v0.c_minus), 0, 0};
  return n;
}

constexpr int kSearchBox = 64;

}  // namespace

RepMultiplicities stable_suspension(SignedMultiplicities v0_in, RepMultiplicities w0_in) {
  if (w0_in.b_plus + w0_in.b_minus < 2) throw std::domain_error("b_plus < 2");
  auto [v0, w0] = normalize(v0_in, w0_in);
  const FixedDims v0d = fixed_dims(v0);
  const FixedDims w0d = fixed_dims(w0);
  for (int a_plus = 0; a_plus <= kSearchBox; ++a_plus) {
    for (int a_minus = 0; a_minus <= kSearchBox; ++a_minus) {
      for (int b = 0; b <= kSearchBox; ++b) {
        RepMultiplicities vp{a_plus, a_minus, b, 0};
        if (in_stable_range(fixed_dims(vp), v0d, w0d)) return vp;
      }
    }
  }
  throw std::runtime_error("suspension search box exceeded");
}

SuspensionData suspension_data(SignedMultiplicities v0_in, RepMultiplicities w0_in) {
  SuspensionData s;
  s.v_prime = stable_suspension(v0_in, w0_in);
  auto [v0, w0] = normalize(v0_in, w0_in);
  s.v = s.v_prime + v0;
  s.w = s.v_prime + w0;
  // Padding by C+ + C- preserves the stable range (monotone in every
  // multiplicity) and raises the singular codimension.
  RepMultiplicities padded_prime = s.v_prime;
  while (s.v.a_plus < 2 || s.v.a_minus < 2) {
    RepMultiplicities pad{1, 1, 0, 0};
    s.v = s.v + pad;
    s.w = s.w + pad;
    padded_prime = padded_prime + pad;
  }
  if (!in_stable_range(fixed_dims(padded_prime), fixed_dims(v0), fixed_dims(w0)))
    throw std::logic_error("padding left the stable range");
  return s;
}

EquivariantChainComplex::EquivariantChainComplex(int lowest_degree, std::vector<int> ranks,
                                                 std::vector<IntMatrix> boundaries,
                                                 bool lower_boundary_derived)
    : lowest_(lowest_degree),
      ranks_(std::move(ranks)),
      boundaries_(std::move(boundaries)),
      empty_(0, 0),
      lower_boundary_derived_(lower_boundary_derived) {
  if (ranks_.empty()) throw std::invalid_argument("complex: empty degree range");
  for (int r : ranks_)
    if (r < 0) throw std::invalid_argument("complex: negative rank");
  if (boundaries_.size() + 1 != ranks_.size())
    throw std::invalid_argument("complex: need one boundary per adjacent degree pair");
  for (size_t i = 0; i < boundaries_.size(); ++i) {
    const IntMatrix& b = boundaries_[i];
    if (b.rows() != 2 * ranks_[i] || b.cols() != 2 * ranks_[i + 1])
      throw std::invalid_argument("complex: boundary size mismatch");
    // Equivariance: the boundary commutes with the swap of each orbit pair.
    IntMatrix swapped = b;
    for (Eigen::Index r = 0; r + 1 < b.rows(); r += 2) swapped.row(r).swap(swapped.row(r + 1));
    for (Eigen::Index c = 0; c + 1 < b.cols(); c += 2) swapped.col(c).swap(swapped.col(c + 1));
    if (!matrices_equal(swapped, b))
      throw std::invalid_argument("complex: boundary not equivariant");
  }
  for (size_t i = 0; i + 1 < boundaries_.size(); ++i) {
    IntMatrix composite = boundaries_[i] * boundaries_[i + 1];
    if (!is_zero_matrix(composite))
      throw std::invalid_argument("complex: boundaries do not compose to zero");
  }
}

int EquivariantChainComplex::rank_at(int degree) const {
  if (!in_range(degree)) return 0;
  return ranks_[degree - lowest_];
}

const IntMatrix& EquivariantChainComplex::boundary_from(int degree) const {
  const int i = degree - lowest_ - 1;
  if (i < 0 || i >= static_cast<int>(boundaries_.size())) return empty_;
  return boundaries_[static_cast<size_t>(i)];
}

EquivariantChainComplex top_complex(const RepMultiplicities& v) {
  if (v.a_plus < 2 || v.a_minus < 2) throw std::domain_error("multiplicity too small");
  if (v.b_minus != 0)
    throw std::domain_error("top complex requires a source without R- summands");
  // Singular part of the sphere: the largest fixed subspace of a nontrivial
  // subgroup must have codimension at least 4.
  const FixedDims d = fixed_dims(v);
  int singular = 0;
  for (Subgroup h : {Subgroup::Z2, Subgroup::Z2Tilde, Subgroup::Circle, Subgroup::Full})
    singular = std::max(singular, d.at(h));
  if (singular > v.real_dim() - 4) throw std::domain_error("singular set too large");

  const int n = v.b_plus + 1 + 2 * (v.a_plus + v.a_minus - 1);
  IntMatrix one_minus_g(2, 2);
  one_minus_g << 1, -1, -1, 1;
  IntMatrix one_plus_g(2, 2);
  one_plus_g << 1, 1, 1, 1;
  return EquivariantChainComplex(n - 2, {1, 1, 1}, {one_plus_g, one_minus_g},
                                 /*lower_boundary_derived=*/true);
}

namespace {

// Differential of the equivariant cochain complex at the given degree, as an
// integer matrix rank(degree+1) x rank(degree). Evaluation on the orbit
// generators identifies an equivariant cochain with a coefficient vector; the
// translated generator contributes through the coefficient action.
IntMatrix equivariant_differential(const EquivariantChainComplex& c, const CoefficientModule& m,
                                   int degree) {
  const int rows = c.rank_at(degree + 1);
  const int cols = c.rank_at(degree);
  const IntMatrix& b = c.boundary_from(degree + 1);
  IntMatrix diff = IntMatrix::Zero(rows, cols);
  if (b.rows() == 0 || b.cols() == 0) return diff;
  const Int eps = (m.action == CoefficientModule::Action::Sign) ? -1 : 1;
  for (int j = 0; j < rows; ++j)
    for (int i = 0; i < cols; ++i) diff(j, i) = b(2 * i, 2 * j) + eps * b(2 * i + 1, 2 * j);
  return diff;
}

// Ordinary (action-forgetting) cochain differential: the transpose of the
// boundary, over the coefficient ring.
IntMatrix ordinary_differential(const EquivariantChainComplex& c, int degree) {
  const IntMatrix& b = c.boundary_from(degree + 1);
  if (b.rows() == 0 || b.cols() == 0)
    return IntMatrix::Zero(2 * c.rank_at(degree + 1), 2 * c.rank_at(degree));
  return b.transpose();
}

CohomologyGroup group_from_factors(std::vector<Int> factors) {
  CohomologyGroup g;
  g.invariant_factors = std::move(factors);
  return g;
}

CohomologyGroup f2_group(int dim) {
  if (dim < 0) throw std::logic_error("negative F2 dimension");
  CohomologyGroup g;
  g.invariant_factors.assign(static_cast<size_t>(dim), Int(2));
  return g;
}

// ker(out) / im(in) over Z, with im(in) inside ker(out).
CohomologyGroup integer_subquotient(const IntMatrix& out, const IntMatrix& in) {
  IntMatrix cycles = kernel_basis(out);
  if (cycles.cols() == 0) return {};
  auto coords = solve_integer(cycles, in);
  if (!coords) throw std::logic_error("coboundary image not contained in cocycles");
  return group_from_factors(cokernel_invariants(*coords));
}

void check_degree(const EquivariantChainComplex& c, int degree) {
  if (!c.in_range(degree)) throw std::out_of_range("degree out of range");
}

}  // namespace

CohomologyGroup bredon_cohomology(const EquivariantChainComplex& c, const CoefficientModule& m,
                                  int degree) {
  check_degree(c, degree);
  IntMatrix out = equivariant_differential(c, m, degree);
  IntMatrix in = equivariant_differential(c, m, degree - 1);
  if (m.ring == CoefficientModule::Ring::Z2) {
    const int cocycles = c.rank_at(degree) - rank_mod2(out);
    return f2_group(cocycles - rank_mod2(in));
  }
  return integer_subquotient(out, in);
}

CohomologyGroup forgetful_image(const EquivariantChainComplex& c, const CoefficientModule& m,
                                int degree) {
  check_degree(c, degree);
  const int r = c.rank_at(degree);
  IntMatrix eq_out = equivariant_differential(c, m, degree);
  IntMatrix ord_in = ordinary_differential(c, degree - 1);
  const Int eps = (m.action == CoefficientModule::Action::Sign &&
                   m.ring == CoefficientModule::Ring::Z)
                      ? -1
                      : 1;

  // Equivariant cocycles, pushed into the ordinary cochain group: the value
  // on sigma_i lands at slot 2i and its action-translate at slot 2i+1.
  auto push = [&](const IntMatrix& vectors) {
    IntMatrix pushed = IntMatrix::Zero(2 * r, vectors.cols());
    for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
      for (int i = 0; i < r; ++i) {
        pushed(2 * i, j) = vectors(i, j);
        pushed(2 * i + 1, j) = eps * vectors(i, j);
      }
    }
    return pushed;
  };

  auto concat = [&](const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out = IntMatrix::Zero(2 * r, a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
  };

  if (m.ring == CoefficientModule::Ring::Z2) {
    IntMatrix pushed = push(kernel_basis_mod2(eq_out));
    IntMatrix combined = concat(pushed, ord_in);
    return f2_group(rank_mod2(combined) - rank_mod2(ord_in));
  }

  IntMatrix pushed = push(kernel_basis(eq_out));
  IntMatrix combined = concat(pushed, ord_in);
  // Basis of the lattice spanned by image classes and coboundaries, then the
  // quotient by the coboundary sublattice. The left transform is unimodular,
  // so solving recovers left^{-1} * diag without an inverse.
  SmithForm f = smith_normal_form(combined);
  if (f.rank == 0) return {};
  auto span_basis = solve_integer(f.left, IntMatrix(f.diag.leftCols(f.rank)));
  if (!span_basis) throw std::logic_error("unimodular solve failed");
  auto coords = solve_integer(*span_basis, ord_in);
  if (!coords) throw std::logic_error("coboundaries escape the spanned lattice");
  return group_from_factors(cokernel_invariants(*coords));
}

bool low_degree_vanishing(const RepMultiplicities& v, const RepMultiplicities& w,
                          const indexthy::ManifoldProfile& profile) {
  profile.validate();
  if (profile.b_plus <= 0) throw std::invalid_argument("b_plus must be positive");
  if (profile.b_plus_fixed <= 0) throw std::invalid_argument("b_plus_fixed must be positive");
  if (v.b_minus != 0) throw std::invalid_argument("inconsistent V/W data: source has R- summands");
  // The target differs from the source by removing the index part and adding
  // the positive-cohomology part split by the involution.
  const bool consistent = (w.b_plus - v.b_plus == profile.b_plus_fixed) &&
                          (w.b_minus - v.b_minus == profile.b_plus - profile.b_plus_fixed);
  if (!consistent) throw std::invalid_argument("inconsistent V/W data");
  const FixedDims dv = fixed_dims(v);
  const FixedDims dw = fixed_dims(w);
  return dv.at(Subgroup::Z2) < 1 + dw.at(Subgroup::Z2) &&
         dv.at(Subgroup::Z2Tilde) < 1 + dw.at(Subgroup::Z2Tilde);
}

}  // namespace ztwo::bredon
