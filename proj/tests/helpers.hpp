#pragma once

#include <random>

#include "dialg/theorems.hpp"

namespace dialg::test {

inline Field Q() { return Field::rationals(); }
inline Field F2() { return Field::prime(2); }
inline Field F3() { return Field::prime(3); }
inline Field F5() { return Field::prime(5); }

inline Matrix mat(const Field& F, std::size_t rows, std::size_t cols,
                  std::initializer_list<long> entries) {
  Matrix m(rows, cols);
  auto it = entries.begin();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = F.from_int(*it++);
  return m;
}

inline Vec vec(const Field& F, std::initializer_list<long> entries) {
  Vec v;
  for (long e : entries) v.push_back(F.from_int(e));
  return v;
}

inline Matrix random_matrix(const Field& F, std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng, unsigned density_mod = 2) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng() % density_mod == 0) m(i, j) = F.sample(rng);
  return m;
}

inline Subspace random_space(const Field& F, std::size_t ambient, std::size_t gens,
                             std::mt19937_64& rng) {
  Matrix rows(gens, ambient);
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t j = 0; j < ambient; ++j) rows(i, j) = F.sample(rng);
  return subspace_from_rows(F, ambient, rows);
}

}  // namespace dialg::test
