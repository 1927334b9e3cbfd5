#include "dialg/matrix.hpp"

namespace dialg {

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw Error("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) e_[i * cols_ + j] = v[j];
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(e_[a * cols_ + j], e_[b * cols_ + j]);
}

void Matrix::append_row(const Vec& v) {
  if (v.size() != cols_) throw Error("row length mismatch");
  e_.insert(e_.end(), v.begin(), v.end());
  ++rows_;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

bool vec_is_zero(const Field& F, const Vec& v) {
  for (const Scalar& s : v)
    if (!F.is_zero(s)) return false;
  return true;
}

bool vec_eq(const Field& F, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!F.eq(a[i], b[i])) return false;
  return true;
}

Vec vec_add(const Field& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Field& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const Field& F, const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = F.mul(c, v[i]);
  return r;
}

Vec mat_vec(const Field& F, const Matrix& m, const Vec& v) {
  if (v.size() != m.cols()) throw Error("mat_vec shape mismatch");
  Vec r(m.rows(), Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar acc(0);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!F.is_zero(m(i, j)) && !F.is_zero(v[j])) acc = F.add(acc, F.mul(m(i, j), v[j]));
    r[i] = acc;
  }
  return r;
}

Matrix mat_mul(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("mat_mul shape mismatch");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (F.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!F.is_zero(b(k, j))) r(i, j) = F.add(r(i, j), F.mul(a(i, k), b(k, j)));
    }
  return r;
}

Matrix transpose(const Matrix& m) {
  Matrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
  return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("hstack shape mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0) throw Error("vstack shape mismatch");
  std::size_t cols = a.rows() != 0 ? a.cols() : b.cols();
  Matrix r(0, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) r.append_row(a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) r.append_row(b.row(i));
  return r;
}

}  // namespace dialg
