#pragma once

#include <optional>

#include "dialg/kernels.hpp"
#include "dialg/matrix.hpp"

namespace dialg {

// Subspace of F^ambient, stored as a reduced-row-echelon basis with no zero
// rows. Two Subspaces over the same field are equal iff their bases are.
struct Subspace {
  std::size_t ambient = 0;
  Matrix basis;  // rows = basis vectors, in rref

  std::size_t dim() const { return basis.rows(); }
  friend bool operator==(const Subspace&, const Subspace&) = default;
};

Matrix rref(const Field& F, Matrix m);
std::size_t rank(const Field& F, Matrix m);

// Basis of {x : m x = 0}.
Subspace nullspace(const Field& F, const Matrix& m);

// One exact solution of m x = b, free variables set to zero; nullopt if
// inconsistent.
std::optional<Vec> solve(const Field& F, const Matrix& m, const Vec& b);

Subspace zero_subspace(std::size_t ambient);
Subspace full_subspace(std::size_t ambient);
Subspace subspace_from_rows(const Field& F, std::size_t ambient, Matrix rows);
Subspace subspace_sum(const Field& F, const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Field& F, const Subspace& a, const Subspace& b);
bool subspace_contains(const Field& F, const Subspace& a, const Vec& v);
bool subspace_leq(const Field& F, const Subspace& a, const Subspace& b);

// Deterministic coordinate complement: the span of the coordinate vectors at
// the non-pivot positions of a's basis.
Subspace subspace_complement(const Field& F, const Subspace& a);

// Canonical representative of v modulo a: eliminates a's pivot coordinates.
Vec reduce_mod(const Field& F, const Subspace& a, Vec v);

// Coordinates of v in a's basis, or nullopt if v is outside a.
std::optional<Vec> coordinates_in(const Field& F, const Subspace& a, const Vec& v);

}  // namespace dialg
