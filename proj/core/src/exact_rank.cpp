#include "circlet/exact_rank.hpp"

#include <utility>

namespace circlet {

int exact_rank(IntMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  BigInt prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    const BigInt p = m(rank, c);
    for (int r = rank + 1; r < rows; ++r) {
      const BigInt f = m(r, c);
      for (int j = c + 1; j < cols; ++j) {
        BigInt v = p * m(r, j) - f * m(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(r, j) = std::move(v);
      }
      m(r, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace circlet
