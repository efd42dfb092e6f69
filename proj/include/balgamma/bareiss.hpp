#ifndef BALGAMMA_BAREISS_HPP
#define BALGAMMA_BAREISS_HPP

#include <Eigen/Core>
#include <cstdint>
#include <utility>

#include "balgamma/types.hpp"

namespace balgamma {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Scalar>
struct Wide {
  using type = Scalar;
};
template <>
struct Wide<std::int64_t> {
  using type = __int128;
};

}  // namespace detail

/*
 * Fraction-free (Bareiss) determinant of a square integer matrix.
 *
 * Every intermediate entry is a minor of the input, so all divisions are exact
 * and no rationals appear. Row swaps handle zero pivots. For 64-bit input the
 * products are formed in 128-bit and narrowed with an overflow check.
 *
 * The empty matrix has determinant 1.
 */
template <typename Scalar>
Scalar bareiss_determinant(DenseMatrix<Scalar> m) {
  using Wide = typename detail::Wide<Scalar>::type;
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw PreconditionError("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);

  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == Scalar(0)) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        const Wide num = static_cast<Wide>(m(i, j)) * m(k, k) - static_cast<Wide>(m(i, k)) * m(k, j);
        const Wide q = num / prev;
        if (static_cast<Wide>(static_cast<Scalar>(q)) != q) throw OverflowError("determinant overflow");
        m(i, j) = static_cast<Scalar>(q);
      }
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace balgamma

#endif  // BALGAMMA_BAREISS_HPP
