#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <string>

namespace Eigen {

// Exact scalars for dense matrices. Only coefficient-wise arithmetic and
// products are ever used on these; no decompositions.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 80
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 80,
    MulCost = 160
  };
};

}  // namespace Eigen

namespace ztwo {

using Int = mpz_class;
using Rational = mpq_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_even(const Int& x) { return mpz_even_p(x.get_mpz_t()) != 0; }
inline bool is_odd(const Int& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

inline bool divides(const Int& d, const Int& x) {
  return d != 0 && mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int div_exact(const Int& x, const Int& d) {
  Int q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Rational make_rational(const Int& num, const Int& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Exact equality; Eigen's operator== is intentionally avoided for these
// scalar types.
inline bool matrices_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool is_zero_matrix(const IntMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

}  // namespace ztwo
