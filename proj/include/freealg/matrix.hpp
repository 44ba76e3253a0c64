#pragma once

/*
 * Dense exact rational matrices with reduced row echelon form and
 * nullspace. Pivoting takes the first nonzero entry in column order, so
 * results are reproducible bit for bit. Row elimination below/above a
 * pivot is data-parallel; the parallel flag selects the OpenMP path, the
 * serial path is the reference.
 */

#include "freealg/rational.hpp"

#include <cstddef>
#include <vector>

namespace freealg {

class QMatrix {
public:
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

// in-place reduced row echelon form; returns the pivot columns in order
std::vector<std::size_t> rref(QMatrix& m, bool parallel = false);

std::size_t rank(QMatrix m, bool parallel = false);

// basis of {v : M v = 0}; one vector per free column, unit at that column,
// listed in ascending free-column order
std::vector<std::vector<Rational>> nullspace(QMatrix m, bool parallel = false);

}  // namespace freealg
