#include "ztwo/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ztwo {

namespace {

// Position of the nonzero entry of smallest absolute value in a(t:, t:),
// or nullopt if that block is zero.
std::optional<std::pair<Eigen::Index, Eigen::Index>> smallest_pivot(
    const IntMatrix& a, Eigen::Index t) {
  std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
  Int best_abs = 0;
  for (Eigen::Index i = t; i < a.rows(); ++i) {
    for (Eigen::Index j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  }
  return best;
}

bool cross_cleared(const IntMatrix& s, Eigen::Index t) {
  for (Eigen::Index i = t + 1; i < s.rows(); ++i)
    if (s(i, t) != 0) return false;
  for (Eigen::Index j = t + 1; j < s.cols(); ++j)
    if (s(t, j) != 0) return false;
  return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  SmithForm f;
  f.left = IntMatrix::Identity(m, m);
  f.right = IntMatrix::Identity(n, n);
  f.diag = a;
  IntMatrix& s = f.diag;

  const Eigen::Index steps = std::min(m, n);
  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = smallest_pivot(s, t);
      if (!pivot) break;  // block is zero, we are done with this and all later steps
      auto [pi, pj] = *pivot;
      if (pi != t) {
        s.row(t).swap(s.row(pi));
        f.left.row(t).swap(f.left.row(pi));
      }
      if (pj != t) {
        s.col(t).swap(s.col(pj));
        f.right.col(t).swap(f.right.col(pj));
      }
      // Reduce the pivot cross. Truncated quotients strictly shrink the
      // smallest absolute value, so the loop terminates.
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Int q = s(i, t) / s(t, t);
        if (q != 0) {
          s.row(i) -= s.row(t) * q;
          f.left.row(i) -= f.left.row(t) * q;
        }
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Int q = s(t, j) / s(t, t);
        if (q != 0) {
          s.col(j) -= s.col(t) * q;
          f.right.col(j) -= f.right.col(t) * q;
        }
      }
      if (!cross_cleared(s, t)) continue;
      // Pivot must divide every remaining entry; if not, fold the offending
      // row in and reduce again.
      bool divides_all = true;
      for (Eigen::Index i = t + 1; i < m && divides_all; ++i) {
        for (Eigen::Index j = t + 1; j < n && divides_all; ++j) {
          if (!divides(s(t, t), s(i, j))) {
            s.row(t) += s.row(i);
            f.left.row(t) += f.left.row(i);
            divides_all = false;
          }
        }
      }
      if (divides_all) break;
    }
    if (t < std::min(m, n) && s(t, t) < 0) {
      s.row(t) *= Int(-1);
      f.left.row(t) *= Int(-1);
    }
    if (s(t, t) == 0) break;
    ++f.rank;
  }
  return f;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  const Eigen::Index n = a.cols();
  const Eigen::Index k = n - f.rank;
  IntMatrix basis(n, k);
  for (Eigen::Index j = 0; j < k; ++j) basis.col(j) = f.right.col(f.rank + j);
  return basis;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_integer: row mismatch");
  SmithForm f = smith_normal_form(a);
  IntMatrix ub = f.left * b;
  IntMatrix z = IntMatrix::Zero(a.cols(), b.cols());
  for (Eigen::Index c = 0; c < b.cols(); ++c) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i < f.rank) {
        if (!divides(f.diag(i, i), ub(i, c))) return std::nullopt;
        z(i, c) = div_exact(ub(i, c), f.diag(i, i));
      } else if (ub(i, c) != 0) {
        return std::nullopt;
      }
    }
  }
  return IntMatrix(f.right * z);
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int denom = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = div_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), denom);
    denom = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

int rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

std::vector<Int> cokernel_invariants(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  std::vector<Int> factors;
  for (int i = 0; i < f.rank; ++i)
    if (f.diag(i, i) > 1) factors.push_back(f.diag(i, i));
  for (Eigen::Index i = f.rank; i < a.rows(); ++i) factors.push_back(0);
  return factors;
}

Inertia rational_inertia(const IntMatrix& symmetric) {
  const Eigen::Index n = symmetric.rows();
  if (symmetric.cols() != n) throw std::invalid_argument("rational_inertia: matrix not square");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (symmetric(i, j) != symmetric(j, i))
        throw std::invalid_argument("rational_inertia: matrix not symmetric");

  RationalMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Rational(symmetric(i, j));

  Inertia inertia;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap_j = -1;
      Eigen::Index hyp_j = -1;
      for (Eigen::Index j = k + 1; j < n; ++j) {
        if (m(j, j) != 0 && swap_j < 0) swap_j = j;
        if (m(k, j) != 0 && hyp_j < 0) hyp_j = j;
      }
      if (swap_j >= 0) {
        m.row(k).swap(m.row(swap_j));
        m.col(k).swap(m.col(swap_j));
      } else if (hyp_j >= 0) {
        // Hyperbolic pivot: a zero diagonal with m(k,j) != 0 and m(j,j) == 0
        // becomes 2*m(k,j) after adding row/column j.
        m.row(k) += m.row(hyp_j);
        m.col(k) += m.col(hyp_j);
      } else {
        ++inertia.zero;  // radical direction
        continue;
      }
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational factor = m(i, k) / m(k, k);
      m.row(i) -= m.row(k) * factor;
      m.col(i) -= m.col(k) * factor;
    }
    if (m(k, k) > 0)
      ++inertia.positive;
    else
      ++inertia.negative;
  }
  return inertia;
}

namespace {

// Row echelon over F2; returns rank, optionally collecting pivot columns.
int echelon_mod2(std::vector<std::vector<int>>& rows, std::vector<int>* pivot_cols) {
  if (rows.empty()) return 0;
  const size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i][c] != 0)
        for (size_t j = c; j < ncols; ++j) rows[i][j] ^= rows[r][j];
    }
    if (pivot_cols) pivot_cols->push_back(static_cast<int>(c));
    ++r;
  }
  return static_cast<int>(r);
}

std::vector<std::vector<int>> reduce_mod2(const IntMatrix& a) {
  std::vector<std::vector<int>> rows(a.rows(), std::vector<int>(a.cols(), 0));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      rows[i][j] = is_odd(a(i, j)) ? 1 : 0;
  return rows;
}

}  // namespace

int rank_mod2(const IntMatrix& a) {
  auto rows = reduce_mod2(a);
  return echelon_mod2(rows, nullptr);
}

IntMatrix kernel_basis_mod2(const IntMatrix& a) {
  auto rows = reduce_mod2(a);
  std::vector<int> pivots;
  echelon_mod2(rows, &pivots);
  const Eigen::Index n = a.cols();
  std::vector<int> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  IntMatrix basis = IntMatrix::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], static_cast<Eigen::Index>(k)) = 1;
    // Back-substitute: each pivot row has exactly one pivot column.
    for (size_t r = 0; r < pivots.size(); ++r) {
      if (rows[r][free_cols[k]] != 0) basis(pivots[r], static_cast<Eigen::Index>(k)) = 1;
    }
  }
  return basis;
}

}  // namespace ztwo
