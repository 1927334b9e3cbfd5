#include "dialg/algebra.hpp"

namespace dialg {

Vec Algebra::basis_product(Prod p, std::size_t i, std::size_t j) const {
  const Tensor3& t = tensor(p);
  Vec v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = t.at(i, j, k);
  return v;
}

Vec Algebra::multiply(Prod p, const Vec& x, const Vec& y) const {
  if (x.size() != dim || y.size() != dim) throw Error("multiply: dimension mismatch");
  const Tensor3& t = tensor(p);
  Vec r(dim, Scalar(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (field.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (field.is_zero(y[j])) continue;
      Scalar c = field.mul(x[i], y[j]);
      for (std::size_t k = 0; k < dim; ++k)
        if (!field.is_zero(t.at(i, j, k))) r[k] = field.add(r[k], field.mul(c, t.at(i, j, k)));
    }
  }
  return r;
}

LinearMap compose_maps(const Field& F, const LinearMap& outer, const LinearMap& inner) {
  if (inner.target_dim != outer.source_dim) throw Error("compose_maps: shape mismatch");
  return LinearMap{inner.source_dim, outer.target_dim, mat_mul(F, outer.matrix, inner.matrix)};
}

std::string axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::AssocLeft: return "assoc-left";
    case AxiomId::LeftCollapse: return "left-collapse";
    case AxiomId::Middle: return "middle";
    case AxiomId::RightCollapse: return "right-collapse";
    case AxiomId::AssocRight: return "assoc-right";
  }
  return "?";
}

namespace {

// x * e_k for a coordinate vector x
Vec prod_vec_basis(const Algebra& L, Prod p, const Vec& x, std::size_t k) {
  const Tensor3& t = L.tensor(p);
  Vec r(L.dim, Scalar(0));
  for (std::size_t m = 0; m < L.dim; ++m) {
    if (L.field.is_zero(x[m])) continue;
    for (std::size_t c = 0; c < L.dim; ++c)
      if (!L.field.is_zero(t.at(m, k, c))) r[c] = L.field.add(r[c], L.field.mul(x[m], t.at(m, k, c)));
  }
  return r;
}

// e_i * x
Vec prod_basis_vec(const Algebra& L, Prod p, std::size_t i, const Vec& x) {
  const Tensor3& t = L.tensor(p);
  Vec r(L.dim, Scalar(0));
  for (std::size_t m = 0; m < L.dim; ++m) {
    if (L.field.is_zero(x[m])) continue;
    for (std::size_t c = 0; c < L.dim; ++c)
      if (!L.field.is_zero(t.at(i, m, c))) r[c] = L.field.add(r[c], L.field.mul(x[m], t.at(i, m, c)));
  }
  return r;
}

// lhs/rhs of one identity on basis triple (i, j, k)
std::pair<Vec, Vec> identity_sides(const Algebra& L, AxiomId id, std::size_t i, std::size_t j, std::size_t k) {
  switch (id) {
    case AxiomId::AssocLeft:
      return {prod_vec_basis(L, Prod::Left, L.basis_product(Prod::Left, i, j), k),
              prod_basis_vec(L, Prod::Left, i, L.basis_product(Prod::Left, j, k))};
    case AxiomId::LeftCollapse:
      return {prod_basis_vec(L, Prod::Left, i, L.basis_product(Prod::Left, j, k)),
              prod_basis_vec(L, Prod::Left, i, L.basis_product(Prod::Right, j, k))};
    case AxiomId::Middle:
      return {prod_vec_basis(L, Prod::Left, L.basis_product(Prod::Right, i, j), k),
              prod_basis_vec(L, Prod::Right, i, L.basis_product(Prod::Left, j, k))};
    case AxiomId::RightCollapse:
      return {prod_vec_basis(L, Prod::Right, L.basis_product(Prod::Left, i, j), k),
              prod_vec_basis(L, Prod::Right, L.basis_product(Prod::Right, i, j), k)};
    case AxiomId::AssocRight:
      return {prod_vec_basis(L, Prod::Right, L.basis_product(Prod::Right, i, j), k),
              prod_basis_vec(L, Prod::Right, i, L.basis_product(Prod::Right, j, k))};
  }
  throw Error("unreachable");
}

}  // namespace

AxiomReport check_axioms(const Algebra& L, Exec exec) {
  const std::size_t n = L.dim;
  const std::size_t triples = n * n * n;
  std::vector<unsigned char> bad(triples * kAxiomCount, 0);

  parallel_for(triples, exec, [&](std::size_t t) {
    const std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
    for (std::size_t a = 0; a < kAxiomCount; ++a) {
      auto [lhs, rhs] = identity_sides(L, static_cast<AxiomId>(a), i, j, k);
      if (!vec_eq(L.field, lhs, rhs)) bad[t * kAxiomCount + a] = 1;
    }
  });

  AxiomReport report;
  for (std::size_t t = 0; t < triples; ++t) {
    for (std::size_t a = 0; a < kAxiomCount; ++a) {
      if (!bad[t * kAxiomCount + a]) continue;
      const std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
      auto [lhs, rhs] = identity_sides(L, static_cast<AxiomId>(a), i, j, k);
      report.violations.push_back({static_cast<AxiomId>(a), i, j, k, lhs, rhs});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

AxiomReport check_axioms(const Algebra& L) { return check_axioms(L, default_exec()); }

MultiplicationOperators multiplication_operators(const Algebra& L, const Vec& a) {
  const std::size_t n = L.dim;
  MultiplicationOperators ops{Matrix(n, n), Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (L.field.is_zero(a[i])) continue;
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t k = 0; k < n; ++k) {
        if (!L.field.is_zero(L.left.at(i, m, k)))
          ops.lambda_left(k, m) = L.field.add(ops.lambda_left(k, m), L.field.mul(a[i], L.left.at(i, m, k)));
        if (!L.field.is_zero(L.right.at(i, m, k)))
          ops.lambda_right(k, m) = L.field.add(ops.lambda_right(k, m), L.field.mul(a[i], L.right.at(i, m, k)));
        if (!L.field.is_zero(L.left.at(m, i, k)))
          ops.rho_left(k, m) = L.field.add(ops.rho_left(k, m), L.field.mul(a[i], L.left.at(m, i, k)));
        if (!L.field.is_zero(L.right.at(m, i, k)))
          ops.rho_right(k, m) = L.field.add(ops.rho_right(k, m), L.field.mul(a[i], L.right.at(m, i, k)));
      }
  }
  return ops;
}

Subspace full_space(const Algebra& L) { return full_subspace(L.dim); }

Subspace diamond(const Algebra& L, const Subspace& S, const Subspace& T) {
  if (S.ambient != L.dim || T.ambient != L.dim) throw Error("ambient mismatch");
  Matrix rows(0, L.dim);
  for (std::size_t a = 0; a < S.dim(); ++a) {
    Vec s = S.basis.row(a);
    for (std::size_t b = 0; b < T.dim(); ++b) {
      Vec t = T.basis.row(b);
      rows.append_row(L.multiply(Prod::Left, s, t));
      rows.append_row(L.multiply(Prod::Right, s, t));
    }
  }
  return subspace_from_rows(L.field, L.dim, rows);
}

Subspace derived(const Algebra& L) { return diamond(L, full_space(L), full_space(L)); }

bool is_perfect(const Algebra& L) { return derived(L).dim() == L.dim; }

Subspace center(const Algebra& L) {
  const std::size_t n = L.dim;
  Matrix sys(0, n);
  for (std::size_t j = 0; j < n; ++j) {
    MultiplicationOperators ops = multiplication_operators(L, unit_vec(n, j));
    for (const Matrix* m : {&ops.rho_left, &ops.lambda_left, &ops.rho_right, &ops.lambda_right})
      for (std::size_t r = 0; r < n; ++r) sys.append_row(m->row(r));
  }
  return nullspace(L.field, sys);
}

bool is_ideal(const Algebra& L, const Subspace& S) {
  Subspace prod = subspace_sum(L.field, diamond(L, S, full_space(L)), diamond(L, full_space(L), S));
  return subspace_leq(L.field, prod, S);
}

std::pair<Algebra, LinearMap> quotient(const Algebra& L, const Subspace& I) {
  if (I.ambient != L.dim) throw Error("ambient mismatch");
  if (!is_ideal(L, I)) throw Error("quotient: subspace is not a two-sided ideal");

  Subspace comp = subspace_complement(L.field, I);
  const std::size_t q = comp.dim();
  std::vector<std::size_t> coord(q);  // non-pivot coordinate positions
  for (std::size_t t = 0; t < q; ++t) {
    std::size_t p = 0;
    while (L.field.is_zero(comp.basis(t, p))) ++p;
    coord[t] = p;
  }

  Algebra Q = Algebra::zero(L.field, q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      for (Prod p : {Prod::Left, Prod::Right}) {
        Vec w = reduce_mod(L.field, I, L.basis_product(p, coord[a], coord[b]));
        for (std::size_t t = 0; t < q; ++t) Q.tensor(p).at(a, b, t) = w[coord[t]];
      }

  LinearMap proj{L.dim, q, Matrix(q, L.dim)};
  for (std::size_t m = 0; m < L.dim; ++m) {
    Vec w = reduce_mod(L.field, I, unit_vec(L.dim, m));
    for (std::size_t t = 0; t < q; ++t) proj.matrix(t, m) = w[coord[t]];
  }
  return {Q, proj};
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (!(a.field == b.field)) throw Error("direct_sum: field mismatch");
  Algebra r = Algebra::zero(a.field, a.dim + b.dim);
  for (Prod p : {Prod::Left, Prod::Right}) {
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t k = 0; k < a.dim; ++k) r.tensor(p).at(i, j, k) = a.tensor(p).at(i, j, k);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j)
        for (std::size_t k = 0; k < b.dim; ++k)
          r.tensor(p).at(a.dim + i, a.dim + j, a.dim + k) = b.tensor(p).at(i, j, k);
  }
  return r;
}

bool is_homomorphism(const Field& F, const LinearMap& f, const Algebra& src, const Algebra& dst) {
  if (f.source_dim != src.dim || f.target_dim != dst.dim) throw Error("is_homomorphism: shape mismatch");
  std::vector<Vec> img(src.dim);
  for (std::size_t i = 0; i < src.dim; ++i) img[i] = f.apply(F, unit_vec(src.dim, i));
  for (Prod p : {Prod::Left, Prod::Right})
    for (std::size_t i = 0; i < src.dim; ++i)
      for (std::size_t j = 0; j < src.dim; ++j) {
        Vec lhs = f.apply(F, src.basis_product(p, i, j));
        Vec rhs = dst.multiply(p, img[i], img[j]);
        if (!vec_eq(F, lhs, rhs)) return false;
      }
  return true;
}

std::size_t hom_to_field_dim(const Algebra& L) { return L.dim - derived(L).dim(); }

std::pair<Algebra, LinearMap> subalgebra(const Algebra& L, const Subspace& S) {
  if (S.ambient != L.dim) throw Error("ambient mismatch");
  const std::size_t d = S.dim();
  Algebra A = Algebra::zero(L.field, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (Prod p : {Prod::Left, Prod::Right}) {
        Vec v = L.multiply(p, S.basis.row(a), S.basis.row(b));
        auto coords = coordinates_in(L.field, S, v);
        if (!coords) throw Error("subalgebra: subspace is not closed under multiplication");
        for (std::size_t t = 0; t < d; ++t) A.tensor(p).at(a, b, t) = (*coords)[t];
      }
  return {A, LinearMap{d, L.dim, transpose(S.basis)}};
}

}  // namespace dialg
