#pragma once

#include <cstddef>
#include <vector>

#include "dialg/field.hpp"

namespace dialg {

using Vec = std::vector<Scalar>;

// Dense row-major matrix of exact scalars. Entries are always canonical for
// the field they belong to, so operator== is plain entrywise comparison.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const { return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_); }
  void set_row(std::size_t i, const Vec& v);
  void swap_rows(std::size_t a, std::size_t b);
  void append_row(const Vec& v);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool vec_is_zero(const Field& F, const Vec& v);
bool vec_eq(const Field& F, const Vec& a, const Vec& b);
Vec vec_add(const Field& F, const Vec& a, const Vec& b);
Vec vec_sub(const Field& F, const Vec& a, const Vec& b);
Vec vec_scale(const Field& F, const Scalar& c, const Vec& v);

Vec mat_vec(const Field& F, const Matrix& m, const Vec& v);
Matrix mat_mul(const Field& F, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace dialg
