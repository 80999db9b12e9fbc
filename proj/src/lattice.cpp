#include "ztwo/lattice.hpp"

#include <stdexcept>

namespace ztwo::lattice {

BilinearLattice::BilinearLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() < 1 || gram_.rows() != gram_.cols())
    throw std::invalid_argument("lattice: gram matrix must be square of rank >= 1");
  for (Eigen::Index i = 0; i < gram_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i))
        throw std::invalid_argument("lattice: gram matrix not symmetric");
}

LatticeInvolution::LatticeInvolution(IntMatrix action) : action_(std::move(action)) {
  if (action_.rows() < 1 || action_.rows() != action_.cols())
    throw std::invalid_argument("involution: matrix must be square of rank >= 1");
}

LatticeInvolution LatticeInvolution::identity(int n) {
  return LatticeInvolution(IntMatrix::Identity(n, n));
}

FormProperties form_properties(const BilinearLattice& l) {
  FormProperties p;
  p.det = determinant(l.gram());
  if (p.det == 0) throw std::domain_error("degenerate form");
  // (v, v) = sum_i v_i^2 g_ii mod 2, so parity is decided on the diagonal.
  p.even = true;
  for (int i = 0; i < l.rank(); ++i)
    if (is_odd(l.gram()(i, i))) p.even = false;
  p.unimodular = (p.det == 1 || p.det == -1);
  Inertia inertia = rational_inertia(l.gram());
  p.signature = inertia.signature();
  p.indefinite = inertia.positive > 0 && inertia.negative > 0;
  return p;
}

FormClass classify_indefinite_even(const BilinearLattice& l) {
  FormProperties p = form_properties(l);
  if (!p.even) throw std::domain_error("not even");
  if (!p.unimodular) throw std::domain_error("not unimodular");
  if (!p.indefinite) throw std::domain_error("definite form");
  // Indefinite even unimodular forms are determined by rank and signature.
  // The signature is divisible by 8; with E8 negative definite the form is
  // e8_count * E8 + hyperbolic_count * H (E8 sign-reversed when signature > 0).
  int sig = p.signature;
  FormClass c;
  c.positive_e8 = sig > 0;
  c.e8_count = (sig < 0 ? -sig : sig) / 8;
  c.hyperbolic_count = (l.rank() - 8 * c.e8_count) / 2;
  return c;
}

namespace {

void require_involution(const BilinearLattice& l, const LatticeInvolution& g) {
  if (!check_involution(l, g)) throw std::invalid_argument("invalid involution");
}

}  // namespace

bool check_involution(const BilinearLattice& l, const LatticeInvolution& g) {
  if (l.rank() != g.rank()) throw std::invalid_argument("dimension mismatch");
  const IntMatrix& a = g.action();
  IntMatrix square = a * a;
  if (!matrices_equal(square, IntMatrix::Identity(l.rank(), l.rank()))) return false;
  IntMatrix pulled = a.transpose() * l.gram() * a;
  return matrices_equal(pulled, l.gram());
}

IntMatrix fixed_sublattice_basis(const BilinearLattice& l, const LatticeInvolution& g) {
  require_involution(l, g);
  const int n = l.rank();
  return kernel_basis(IntMatrix(g.action() - IntMatrix::Identity(n, n)));
}

IntMatrix anti_sublattice_basis(const BilinearLattice& l, const LatticeInvolution& g) {
  require_involution(l, g);
  const int n = l.rank();
  return kernel_basis(IntMatrix(g.action() + IntMatrix::Identity(n, n)));
}

EigenlatticeRanks eigenlattice_ranks(const BilinearLattice& l, const LatticeInvolution& g) {
  EigenlatticeRanks r;
  r.fixed = static_cast<int>(fixed_sublattice_basis(l, g).cols());
  r.anti = static_cast<int>(anti_sublattice_basis(l, g).cols());
  if (r.fixed + r.anti != l.rank())
    throw std::logic_error("eigenlattice ranks do not add up to lattice rank");
  return r;
}

namespace {

// F2 dimension of (kernel sublattice) / (column span of image), where the
// span is known to sit inside the kernel and to have full rank in it.
int tate_quotient_dim(const IntMatrix& kernel, const IntMatrix& image) {
  if (kernel.cols() == 0) return 0;
  auto coords = solve_integer(kernel, image);
  if (!coords) throw std::logic_error("tate: image does not lie in the kernel lattice");
  int dim = 0;
  for (const Int& factor : cokernel_invariants(*coords)) {
    if (factor != 2) throw std::logic_error("tate: quotient is not an F2 vector space");
    ++dim;
  }
  return dim;
}

}  // namespace

TateDims tate_dims(const BilinearLattice& l, const LatticeInvolution& g) {
  require_involution(l, g);
  const int n = l.rank();
  const IntMatrix id = IntMatrix::Identity(n, n);
  IntMatrix fixed = kernel_basis(IntMatrix(g.action() - id));
  IntMatrix anti = kernel_basis(IntMatrix(g.action() + id));
  TateDims t;
  t.h0 = tate_quotient_dim(fixed, IntMatrix(g.action() + id));
  t.h1 = tate_quotient_dim(anti, IntMatrix(id - g.action()));
  if ((t.h0 + t.h1 + n) % 2 != 0)
    throw std::logic_error("tate dimensions violate rank parity");
  return t;
}

DecompositionReport integral_decomposition(const BilinearLattice& l, const LatticeInvolution& g) {
  TateDims t = tate_dims(l, g);
  DecompositionReport d;
  d.tate0 = t.h0;
  d.tate1 = t.h1;
  d.trivial = t.h0;
  d.sign = t.h1;
  d.regular = (l.rank() - d.trivial - d.sign) / 2;
  EigenlatticeRanks ranks = eigenlattice_ranks(l, g);
  if (ranks.fixed != d.trivial + d.regular)
    throw std::logic_error("decomposition inconsistent with fixed sublattice rank");
  return d;
}

namespace {

int restricted_signature(const BilinearLattice& l, const IntMatrix& basis) {
  if (basis.cols() == 0) return 0;
  IntMatrix gram = basis.transpose() * l.gram() * basis;
  return rational_inertia(gram).signature();
}

}  // namespace

int g_signature(const BilinearLattice& l, const LatticeInvolution& g) {
  require_involution(l, g);
  int plus = restricted_signature(l, fixed_sublattice_basis(l, g));
  int minus = restricted_signature(l, anti_sublattice_basis(l, g));
  return plus - minus;
}

int b_plus_fixed(const BilinearLattice& l, const LatticeInvolution& g) {
  IntMatrix basis = fixed_sublattice_basis(l, g);
  if (basis.cols() == 0) return 0;
  IntMatrix gram = basis.transpose() * l.gram() * basis;
  return rational_inertia(gram).positive;
}

EEReport ee_conditions(const BilinearLattice& l, const LatticeInvolution& g) {
  require_involution(l, g);
  DecompositionReport d = integral_decomposition(l, g);
  EEReport r;
  r.cond1 = (d.sign == 0);
  // (v, gv) mod 2 is determined by the diagonal of gram * g: the matrix is
  // symmetric because g is an isometry of order 2, so the off-diagonal
  // contributions pair up.
  IntMatrix paired = l.gram() * g.action();
  r.cond2 = true;
  for (int i = 0; i < l.rank(); ++i)
    if (is_odd(paired(i, i))) r.cond2 = false;
  r.g_sig = g_signature(l, g);
  r.cond3 = (r.g_sig == 0);
  r.n_trivial = d.trivial;
  return r;
}

std::optional<BilinearLattice> coordinate_trivial_block(const BilinearLattice& l,
                                                        const LatticeInvolution& g) {
  require_involution(l, g);
  const int n = l.rank();
  std::vector<int> fixed_coords;
  for (int j = 0; j < n; ++j) {
    bool is_fixed = true;
    for (int i = 0; i < n; ++i) {
      Int expected = (i == j) ? 1 : 0;
      if (g.action()(i, j) != expected) is_fixed = false;
    }
    if (is_fixed) fixed_coords.push_back(j);
  }
  DecompositionReport d = integral_decomposition(l, g);
  if (static_cast<int>(fixed_coords.size()) != d.trivial || d.trivial == 0) return std::nullopt;
  std::vector<char> in_block(n, 0);
  for (int j : fixed_coords) in_block[j] = 1;
  for (int j : fixed_coords)
    for (int i = 0; i < n; ++i)
      if (!in_block[i] && l.gram()(i, j) != 0) return std::nullopt;
  IntMatrix block(d.trivial, d.trivial);
  for (size_t a = 0; a < fixed_coords.size(); ++a)
    for (size_t b = 0; b < fixed_coords.size(); ++b)
      block(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          l.gram()(fixed_coords[a], fixed_coords[b]);
  return BilinearLattice(std::move(block));
}

}  // namespace ztwo::lattice
