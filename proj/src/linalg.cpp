#include "dialg/linalg.hpp"

#include <algorithm>

namespace dialg {

Matrix rref(const Field& F, Matrix m) {
  rref_inplace(F, m);
  return m;
}

std::size_t rank(const Field& F, Matrix m) { return rref_inplace(F, m).size(); }

namespace {

Matrix drop_zero_rows(const Matrix& m, std::size_t kept) {
  Matrix r(kept, m.cols());
  for (std::size_t i = 0; i < kept; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

}  // namespace

Subspace subspace_from_rows(const Field& F, std::size_t ambient, Matrix rows) {
  if (rows.cols() != ambient && rows.rows() != 0) throw Error("ambient mismatch");
  if (rows.rows() == 0) return Subspace{ambient, Matrix(0, ambient)};
  auto pivots = rref_inplace(F, rows);
  return Subspace{ambient, drop_zero_rows(rows, pivots.size())};
}

Subspace zero_subspace(std::size_t ambient) { return Subspace{ambient, Matrix(0, ambient)}; }

Subspace full_subspace(std::size_t ambient) {
  return Subspace{ambient, Matrix::identity(ambient)};
}

Subspace nullspace(const Field& F, const Matrix& m) {
  Matrix red = m;
  auto pivots = rref_inplace(F, red);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  Matrix basis(0, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Scalar(0));
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(red(i, f));
    basis.append_row(v);
  }
  return subspace_from_rows(F, cols, basis);
}

std::optional<Vec> solve(const Field& F, const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error("solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref_inplace(F, aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), Scalar(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

Subspace subspace_sum(const Field& F, const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw Error("ambient mismatch");
  return subspace_from_rows(F, a.ambient, vstack(a.basis, b.basis));
}

Subspace subspace_intersect(const Field& F, const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw Error("ambient mismatch");
  const std::size_t ra = a.dim(), rb = b.dim();
  if (ra == 0 || rb == 0) return zero_subspace(a.ambient);
  // columns: a's basis vectors, then negated b's; kernel pairs give the
  // intersection as combinations of a's rows
  Matrix k(a.ambient, ra + rb);
  for (std::size_t j = 0; j < ra; ++j)
    for (std::size_t i = 0; i < a.ambient; ++i) k(i, j) = a.basis(j, i);
  for (std::size_t j = 0; j < rb; ++j)
    for (std::size_t i = 0; i < a.ambient; ++i) k(i, ra + j) = F.neg(b.basis(j, i));
  Subspace ker = nullspace(F, k);
  Matrix rows(0, a.ambient);
  for (std::size_t t = 0; t < ker.dim(); ++t) {
    Vec v(a.ambient, Scalar(0));
    for (std::size_t j = 0; j < ra; ++j) {
      if (F.is_zero(ker.basis(t, j))) continue;
      for (std::size_t i = 0; i < a.ambient; ++i)
        v[i] = F.add(v[i], F.mul(ker.basis(t, j), a.basis(j, i)));
    }
    rows.append_row(v);
  }
  return subspace_from_rows(F, a.ambient, rows);
}

Vec reduce_mod(const Field& F, const Subspace& a, Vec v) {
  if (v.size() != a.ambient) throw Error("ambient mismatch");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::size_t p = 0;
    while (p < a.ambient && F.is_zero(a.basis(i, p))) ++p;
    if (p == a.ambient) continue;
    if (F.is_zero(v[p])) continue;
    Scalar c = v[p];  // pivot entry is 1
    for (std::size_t j = p; j < a.ambient; ++j)
      if (!F.is_zero(a.basis(i, j))) v[j] = F.sub(v[j], F.mul(c, a.basis(i, j)));
  }
  return v;
}

bool subspace_contains(const Field& F, const Subspace& a, const Vec& v) {
  return vec_is_zero(F, reduce_mod(F, a, v));
}

bool subspace_leq(const Field& F, const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw Error("ambient mismatch");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!subspace_contains(F, b, a.basis.row(i))) return false;
  return true;
}

Subspace subspace_complement(const Field& F, const Subspace& a) {
  std::vector<bool> is_pivot(a.ambient, false);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::size_t p = 0;
    while (p < a.ambient && F.is_zero(a.basis(i, p))) ++p;
    if (p < a.ambient) is_pivot[p] = true;
  }
  Matrix rows(0, a.ambient);
  for (std::size_t j = 0; j < a.ambient; ++j)
    if (!is_pivot[j]) rows.append_row(unit_vec(a.ambient, j));
  return Subspace{a.ambient, rows};  // coordinate vectors are already rref
}

std::optional<Vec> coordinates_in(const Field& F, const Subspace& a, const Vec& v) {
  if (v.size() != a.ambient) throw Error("ambient mismatch");
  Vec coords(a.dim(), Scalar(0));
  Vec rem = v;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::size_t p = 0;
    while (p < a.ambient && F.is_zero(a.basis(i, p))) ++p;
    if (p == a.ambient) continue;
    coords[i] = rem[p];
    if (F.is_zero(coords[i])) continue;
    for (std::size_t j = p; j < a.ambient; ++j)
      if (!F.is_zero(a.basis(i, j))) rem[j] = F.sub(rem[j], F.mul(coords[i], a.basis(i, j)));
  }
  if (!vec_is_zero(F, rem)) return std::nullopt;
  return coords;
}

}  // namespace dialg
