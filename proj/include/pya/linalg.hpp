#pragma once

// Exact Gaussian elimination over any field scalar (Zp in production,
// rationals in tests).

#include <Eigen/Core>
#include <vector>

namespace pya {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMat = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
struct RowEchelon {
  Mat<Scalar> reduced;               // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

template <class Scalar>
RowEchelon<Scalar> rref(Mat<Scalar> m) {
  const Scalar zero(0);
  RowEchelon<Scalar> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == zero) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == zero) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class Scalar>
Eigen::Index rank(const Mat<Scalar>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<Eigen::Index>(rref<Scalar>(m).pivots.size());
}

/// Columns form a basis of the right kernel of m.
template <class Scalar>
Mat<Scalar> kernel_basis(const Mat<Scalar>& m) {
  const Eigen::Index n = m.cols();
  const RowEchelon<Scalar> e = rref<Scalar>(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  Mat<Scalar> basis(n, n - static_cast<Eigen::Index>(e.pivots.size()));
  basis.setConstant(Scalar(0));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(e.pivots[r], k) = -e.reduced(static_cast<Eigen::Index>(r), free);
    }
    ++k;
  }
  return basis;
}

}  // namespace pya
