#include "ztwo/realization.hpp"

#include <stdexcept>

namespace ztwo::realization {

FramedLinkMatrix::FramedLinkMatrix(IntMatrix matrix, bool invariant_disks)
    : matrix_(std::move(matrix)), invariant_disks_(invariant_disks) {
  if (matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("link matrix must be square");
  for (Eigen::Index i = 0; i < matrix_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < matrix_.cols(); ++j)
      if (matrix_(i, j) != matrix_(j, i))
        throw std::invalid_argument("link matrix not symmetric");
}

FramedLinkMatrix hopf_linking_matrix(int n, const std::vector<Int>& framings) {
  if (n < 1) throw std::invalid_argument("hopf link needs at least one component");
  if (static_cast<int>(framings.size()) != n)
    throw std::invalid_argument("framing count does not match component count");
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (i == j) ? framings[static_cast<size_t>(i)] : Int(1);
  return FramedLinkMatrix(std::move(m), /*invariant_disks=*/true);
}

bool ee_matrix_check(const FramedLinkMatrix& m) {
  const IntMatrix& a = m.matrix();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i == j && is_odd(a(i, j))) return false;
      if (i != j && is_even(a(i, j))) return false;
    }
  }
  return true;
}

int framing_sign(const Int& r) {
  if (is_odd(r)) throw std::domain_error("odd framing not equivariantly attachable");
  // Signs agree for framing 2 mod 4; the loop parity (r+2)/2 odd is the
  // sign-reversing case r = 0 mod 4.
  Int residue = r % 4;
  if (residue < 0) residue += 4;
  return residue == 2 ? 1 : -1;
}

std::set<long long> eps_achievable(const FramedLinkMatrix& m) {
  if (!ee_matrix_check(m))
    throw std::domain_error("link matrix fails the even-diagonal / odd-linking check");
  long long partial = 1;  // base point, sign +1 relative to itself
  for (int i = 0; i < m.components(); ++i) partial += framing_sign(m.matrix()(i, i));
  std::set<long long> totals;
  for (int base : {1, -1})
    for (int cap : {1, -1}) totals.insert(base * partial + cap);
  return totals;
}

HandleDecomposition handle_description(const FramedLinkMatrix& m, long long free_pairs) {
  if (!ee_matrix_check(m))
    throw std::domain_error("link matrix fails the even-diagonal / odd-linking check");
  if (free_pairs < 0) throw std::invalid_argument("free handle pair count must be nonnegative");
  HandleDecomposition d;
  for (int i = 0; i < m.components(); ++i) {
    d.framings.push_back(m.matrix()(i, i));
    d.eps_rel.push_back(framing_sign(m.matrix()(i, i)));
  }
  d.free_handle_pairs = free_pairs;
  d.fixed_points = m.components() + 2;
  return d;
}

}  // namespace ztwo::realization
