#pragma once

#include <vector>

#include "circlet/rational.hpp"

namespace circlet {

// Row-major integer matrix for exact elimination.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  BigInt& operator()(int r, int c) { return a_[r * cols_ + c]; }
  const BigInt& operator()(int r, int c) const { return a_[r * cols_ + c]; }

 private:
  int rows_;
  int cols_;
  std::vector<BigInt> a_;
};

// Rank over Q by Bareiss fraction-free elimination; the pivot in each column
// is the first nonzero entry at or below the current row.
int exact_rank(IntMatrix m);

}  // namespace circlet
