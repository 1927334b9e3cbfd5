#include "dialg/cohomology.hpp"

namespace dialg {

Vec CochainPair::value(Prod p, std::size_t i, std::size_t j) const {
  Vec v(coeff_dim);
  for (std::size_t c = 0; c < coeff_dim; ++c) v[c] = at(p, i, j, c);
  return v;
}

CochainPair CochainPair::from_flat(std::size_t n, std::size_t k, const Vec& flat) {
  if (flat.size() != flat_size(n, k)) throw Error("cochain flat size mismatch");
  CochainPair f(n, k);
  f.data = flat;
  return f;
}

namespace {

// One term family: out += sign * sum_m tensor[a][b][m] * f_tag(m-slot pattern).
// The five families, written with x=e_i, y=e_j, z=e_l:
//   AssocLeft:     f⊣(x⊣y, z) - f⊣(x, y⊣z) = 0
//   LeftCollapse:  f⊣(x, y⊣z) - f⊣(x, y⊢z) = 0
//   Middle:        f⊣(x⊢y, z) - f⊢(x, y⊣z) = 0
//   RightCollapse: f⊢(x⊣y, z) - f⊢(x⊢y, z) = 0
//   AssocRight:    f⊢(x⊢y, z) - f⊢(x, y⊢z) = 0
struct Term {
  Prod tensor;   // which product forms the inner product of the pair
  Prod cochain;  // which component of the cochain receives it
  bool inner_first;  // true: f(x*y, z) pattern; false: f(x, y*z)
  int sign;
};

constexpr Term kFamilies[kAxiomCount][2] = {
    {{Prod::Left, Prod::Left, true, +1}, {Prod::Left, Prod::Left, false, -1}},
    {{Prod::Left, Prod::Left, false, +1}, {Prod::Right, Prod::Left, false, -1}},
    {{Prod::Right, Prod::Left, true, +1}, {Prod::Left, Prod::Right, false, -1}},
    {{Prod::Left, Prod::Right, true, +1}, {Prod::Right, Prod::Right, true, -1}},
    {{Prod::Right, Prod::Right, true, +1}, {Prod::Right, Prod::Right, false, -1}},
};

}  // namespace

Matrix cocycle_system(const Algebra& L, std::size_t k, Exec exec) {
  AxiomReport axioms = check_axioms(L, exec);
  if (!axioms.ok)
    throw Error("cocycle system requires an algebra satisfying the defining identities (" +
                axiom_name(axioms.violations.front().id) + " fails)");
  const std::size_t n = L.dim;
  const std::size_t triples = n * n * n;
  const std::size_t cols = CochainPair::flat_size(n, k);
  Matrix sys(triples * kAxiomCount * k, cols);
  const CochainPair shape(n, k);

  parallel_for(triples, exec, [&](std::size_t t) {
    const std::size_t i = t / (n * n), j = (t / n) % n, l = t % n;
    for (std::size_t fam = 0; fam < kAxiomCount; ++fam) {
      const std::size_t row0 = (t * kAxiomCount + fam) * k;
      for (const Term& term : kFamilies[fam]) {
        const Tensor3& tens = L.tensor(term.tensor);
        for (std::size_t m = 0; m < n; ++m) {
          // f(x*y, z): coefficient tens[i][j][m] at cochain slot (m, l)
          // f(x, y*z): coefficient tens[j][l][m] at cochain slot (i, m)
          const Scalar& coef = term.inner_first ? tens.at(i, j, m) : tens.at(j, l, m);
          if (L.field.is_zero(coef)) continue;
          const std::size_t a = term.inner_first ? m : i;
          const std::size_t b = term.inner_first ? l : m;
          for (std::size_t c = 0; c < k; ++c) {
            Scalar& cell = sys(row0 + c, shape.index(term.cochain, a, b, c));
            cell = term.sign > 0 ? L.field.add(cell, coef) : L.field.sub(cell, coef);
          }
        }
      }
    }
  });
  return sys;
}

Matrix cocycle_system(const Algebra& L, std::size_t k) { return cocycle_system(L, k, default_exec()); }

Subspace cocycle_space(const Algebra& L, std::size_t k) {
  return nullspace(L.field, cocycle_system(L, k));
}

bool in_cocycle_space(const Algebra& L, const CochainPair& f) {
  if (f.base_dim != L.dim) throw Error("cochain base dimension mismatch");
  Matrix sys = cocycle_system(L, f.coeff_dim);
  return vec_is_zero(L.field, mat_vec(L.field, sys, f.flat()));
}

CochainPair coboundary_of(const Algebra& L, const LinearMap& g) {
  if (g.source_dim != L.dim) throw Error("coboundary_of: source dimension mismatch");
  const std::size_t n = L.dim, k = g.target_dim;
  CochainPair f(n, k);
  for (Prod p : {Prod::Left, Prod::Right})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec v = g.apply(L.field, L.basis_product(p, i, j));
        for (std::size_t c = 0; c < k; ++c) f.at(p, i, j, c) = v[c];
      }
  return f;
}

Subspace coboundary_space(const Algebra& L, std::size_t k) {
  const std::size_t n = L.dim;
  Matrix rows(0, CochainPair::flat_size(n, k));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t m = 0; m < n; ++m) {
      LinearMap g = LinearMap::zero(n, k);
      g.matrix(c, m) = Scalar(1);
      rows.append_row(coboundary_of(L, g).flat());
    }
  return subspace_from_rows(L.field, CochainPair::flat_size(n, k), rows);
}

namespace {

Vec permute(const Vec& v, const std::vector<std::size_t>& perm) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[perm[i]];
  return r;
}

}  // namespace

CohomologyResult h2(const Algebra& L, std::size_t k, CoordOrder order) {
  const Field& F = L.field;
  const std::size_t n = L.dim;
  const std::size_t cols = CochainPair::flat_size(n, k);

  std::vector<std::size_t> perm(cols);
  for (std::size_t i = 0; i < cols; ++i)
    perm[i] = order == CoordOrder::Forward ? i : cols - 1 - i;

  Matrix sys = cocycle_system(L, k);
  Matrix psys(sys.rows(), cols);
  for (std::size_t i = 0; i < sys.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) psys(i, j) = sys(i, perm[j]);

  Subspace Z = nullspace(F, psys);

  Subspace B0 = coboundary_space(L, k);
  Matrix brows(B0.dim(), cols);
  for (std::size_t i = 0; i < B0.dim(); ++i)
    for (std::size_t j = 0; j < cols; ++j) brows(i, j) = B0.basis(i, perm[j]);
  Subspace B = subspace_from_rows(F, cols, std::move(brows));

  if (!subspace_leq(F, B, Z))
    throw Error("internal: coboundaries violate the cocycle constraints");

  CohomologyResult res;
  res.z2_dim = Z.dim();
  res.b2_dim = B.dim();
  res.h2_dim = Z.dim() - B.dim();

  // Representatives: scan Z's rref basis, keep rows that grow the span of B.
  Subspace cur = B;
  for (std::size_t i = 0; i < Z.dim() && res.representatives.size() < res.h2_dim; ++i) {
    Vec z = Z.basis.row(i);
    if (subspace_contains(F, cur, z)) continue;
    Matrix one(0, cols);
    one.append_row(z);
    cur = subspace_sum(F, cur, subspace_from_rows(F, cols, one));
    // map back to the canonical coordinate order
    Vec orig(cols);
    for (std::size_t j = 0; j < cols; ++j) orig[perm[j]] = z[j];
    res.representatives.push_back(CochainPair::from_flat(n, k, orig));
  }
  if (res.representatives.size() != res.h2_dim)
    throw Error("internal: representative selection failed");
  return res;
}

CohomologyResult multiplier(const Algebra& L) { return h2(L, 1); }

std::optional<LinearMap> is_coboundary(const Algebra& L, const CochainPair& f) {
  if (f.base_dim != L.dim) throw Error("cochain base dimension mismatch");
  if (!in_cocycle_space(L, f)) throw Error("is_coboundary: cochain is not a cocycle");
  const std::size_t n = L.dim, k = f.coeff_dim;

  // One system per coefficient coordinate, same left-hand side: rows indexed
  // by (tag, i, j), unknowns g(e_m).
  Matrix T(2 * n * n, n);
  std::size_t r = 0;
  for (Prod p : {Prod::Left, Prod::Right})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++r) {
        Vec prod = L.basis_product(p, i, j);
        for (std::size_t m = 0; m < n; ++m) T(r, m) = prod[m];
      }

  LinearMap g = LinearMap::zero(n, k);
  for (std::size_t c = 0; c < k; ++c) {
    Vec rhs(2 * n * n);
    std::size_t q = 0;
    for (Prod p : {Prod::Left, Prod::Right})
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j, ++q) rhs[q] = f.at(p, i, j, c);
    auto x = solve(L.field, T, rhs);
    if (!x) return std::nullopt;
    for (std::size_t m = 0; m < n; ++m) g.matrix(c, m) = (*x)[m];
  }
  return g;
}

}  // namespace dialg
