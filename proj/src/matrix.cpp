#include "freealg/matrix.hpp"

#include "freealg/parallel.hpp"

#include <algorithm>

namespace freealg {

std::vector<std::size_t> rref(QMatrix& m, bool parallel) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);

    Rational inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;

    par_for(m.rows(), parallel, [&](std::size_t i) {
      if (i == row || m.at(i, col).is_zero()) return;
      Rational factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= factor * m.at(row, j);
    });

    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMatrix m, bool parallel) { return rref(m, parallel).size(); }

std::vector<std::vector<Rational>> nullspace(QMatrix m, bool parallel) {
  std::vector<std::size_t> pivots = rref(m, parallel);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace freealg
