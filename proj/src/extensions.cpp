#include "dialg/extensions.hpp"

#include <sstream>

namespace dialg {

Subspace CentralExtension::kernel_subspace() const {
  Matrix b(kernel_dim, total.dim);
  for (std::size_t i = 0; i < kernel_dim; ++i) b(i, i) = Scalar(1);
  return Subspace{total.dim, b};
}

CentralExtension from_cocycle(const Algebra& L, const CochainPair& f) {
  if (f.base_dim != L.dim) throw Error("from_cocycle: cochain shape mismatch");
  const std::size_t n = L.dim, k = f.coeff_dim;

  Algebra H = Algebra::zero(L.field, k + n);
  for (Prod p : {Prod::Left, Prod::Right})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t c = 0; c < k; ++c) H.tensor(p).at(k + i, k + j, c) = f.at(p, i, j, c);
        for (std::size_t m = 0; m < n; ++m) H.tensor(p).at(k + i, k + j, k + m) = L.tensor(p).at(i, j, m);
      }

  LinearMap proj{k + n, n, Matrix(n, k + n)};
  for (std::size_t i = 0; i < n; ++i) proj.matrix(i, k + i) = Scalar(1);
  LinearMap emb{k, k + n, Matrix(k + n, k)};
  for (std::size_t c = 0; c < k; ++c) emb.matrix(c, c) = Scalar(1);
  LinearMap sec{n, k + n, Matrix(k + n, n)};
  for (std::size_t i = 0; i < n; ++i) sec.matrix(k + i, i) = Scalar(1);

  return CentralExtension{L, k, std::move(H), std::move(proj), std::move(emb), std::move(sec), f};
}

void ensure_valid(const CentralExtension& E) {
  AxiomReport report = check_axioms(E.total);
  if (report.ok) return;
  const AxiomViolation& v = report.violations.front();
  std::ostringstream os;
  os << "total algebra violates " << axiom_name(v.id) << " at basis triple (" << v.i + 1 << ","
     << v.j + 1 << "," << v.k + 1 << "): the cochain is not a cocycle ("
     << report.violations.size() << " violations)";
  throw Error(os.str());
}

CochainPair to_cocycle(const CentralExtension& E, const std::optional<LinearMap>& section) {
  const Field& F = E.base.field;
  const std::size_t n = E.base.dim, k = E.kernel_dim;
  const LinearMap& s = section ? *section : E.section;
  if (s.source_dim != n || s.target_dim != k + n) throw Error("to_cocycle: section shape mismatch");
  if (!(mat_mul(F, E.projection.matrix, s.matrix) == Matrix::identity(n)))
    throw Error("to_cocycle: map is not a section of the projection");

  std::vector<Vec> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = s.apply(F, unit_vec(n, i));

  CochainPair f(n, k);
  for (Prod p : {Prod::Left, Prod::Right})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec defect = vec_sub(F, E.total.multiply(p, img[i], img[j]),
                             s.apply(F, E.base.basis_product(p, i, j)));
        for (std::size_t c = 0; c < k; ++c) f.at(p, i, j, c) = defect[c];
      }
  return f;
}

bool is_central(const CentralExtension& E) {
  return subspace_leq(E.total.field, E.kernel_subspace(), center(E.total));
}

std::optional<LinearMap> splits(const CentralExtension& E) {
  if (!is_central(E)) throw Error("splits: extension is not central");
  const Field& F = E.base.field;
  CochainPair f = to_cocycle(E);
  auto g = is_coboundary(E.base, f);
  if (!g) return std::nullopt;
  // homomorphic section: x -> (g(x), x)
  LinearMap beta{E.base.dim, E.total.dim,
                 vstack(g->matrix, Matrix::identity(E.base.dim))};
  if (!is_homomorphism(F, beta, E.base, E.total))
    throw Error("internal: splitting witness is not a homomorphism");
  if (!(mat_mul(F, E.projection.matrix, beta.matrix) == Matrix::identity(E.base.dim)))
    throw Error("internal: splitting witness is not a section");
  return beta;
}

CoveringResult find_covering(const CentralExtension& E, const CentralExtension& E1) {
  if (!E.base.same_structure(E1.base)) throw Error("find_covering: extensions have different bases");
  const Field& F = E.base.field;
  const std::size_t n = E.base.dim, k = E.kernel_dim, k1 = E1.kernel_dim;

  // τ(a, x) = (φ_A(a) + t(x), x); homomorphism ⇔ for all basis pairs and both
  // products  φ_A(f(x,y)) + t(x*y) = f1(x,y). Rows are indexed by
  // (product, i, j); unknowns per target coordinate are (φ_A row, t row).
  Matrix M(2 * n * n, k + n);
  std::size_t r = 0;
  for (Prod p : {Prod::Left, Prod::Right})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++r) {
        for (std::size_t c = 0; c < k; ++c) M(r, c) = E.cocycle.at(p, i, j, c);
        Vec prod = E.base.basis_product(p, i, j);
        for (std::size_t m = 0; m < n; ++m) M(r, k + m) = prod[m];
      }

  Subspace hom = nullspace(F, M);

  CoveringResult res;
  Matrix phi(k1, k), t(k1, n);
  for (std::size_t c1 = 0; c1 < k1; ++c1) {
    Vec rhs(2 * n * n);
    std::size_t q = 0;
    for (Prod p : {Prod::Left, Prod::Right})
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j, ++q) rhs[q] = E1.cocycle.at(p, i, j, c1);
    auto sol = solve(F, M, rhs);
    if (!sol) return res;  // does not cover
    for (std::size_t c = 0; c < k; ++c) phi(c1, c) = (*sol)[c];
    for (std::size_t m = 0; m < n; ++m) t(c1, m) = (*sol)[k + m];
  }

  auto assemble = [&](const Matrix& phiA, const Matrix& tmap, bool with_identity) {
    Matrix tau(k1 + n, k + n);
    for (std::size_t c1 = 0; c1 < k1; ++c1) {
      for (std::size_t c = 0; c < k; ++c) tau(c1, c) = phiA(c1, c);
      for (std::size_t m = 0; m < n; ++m) tau(c1, k + m) = tmap(c1, m);
    }
    if (with_identity)
      for (std::size_t m = 0; m < n; ++m) tau(k1 + m, k + m) = Scalar(1);
    return CoveringMorphism{LinearMap{k + n, k1 + n, tau}, LinearMap{k, k1, phiA}};
  };

  CoveringMorphism tau = assemble(phi, t, true);
  if (!is_homomorphism(F, tau.map, E.total, E1.total))
    throw Error("internal: covering witness is not a homomorphism");
  if (!(mat_mul(F, E1.projection.matrix, tau.map.matrix) == E.projection.matrix))
    throw Error("internal: covering witness does not commute with projections");

  res.witness = tau;
  res.solution_space_dim = k1 * hom.dim();
  for (std::size_t c1 = 0; c1 < k1; ++c1)
    for (std::size_t h = 0; h < hom.dim(); ++h) {
      Matrix dphi(k1, k), dt(k1, n);
      for (std::size_t c = 0; c < k; ++c) dphi(c1, c) = hom.basis(h, c);
      for (std::size_t m = 0; m < n; ++m) dt(c1, m) = hom.basis(h, k + m);
      res.homogeneous_basis.push_back(assemble(dphi, dt, false));
    }
  return res;
}

PullbackResult pullback(const Algebra& L, const Algebra& S, const Algebra& target,
                        const LinearMap& psi, const LinearMap& mu) {
  const Field& F = L.field;
  if (!(L.field == S.field) || !(L.field == target.field)) throw Error("pullback: field mismatch");
  if (psi.source_dim != L.dim || mu.source_dim != S.dim || psi.target_dim != target.dim ||
      mu.target_dim != target.dim)
    throw Error("pullback: shape mismatch");
  if (!is_homomorphism(F, psi, L, target) || !is_homomorphism(F, mu, S, target))
    throw Error("pullback: inputs are not homomorphisms");
  if (rank(F, psi.matrix) != target.dim || rank(F, mu.matrix) != target.dim)
    throw Error("pullback: inputs are not surjective");

  // kernel of [psi | -mu] on L ⊕ S
  Matrix sys(target.dim, L.dim + S.dim);
  for (std::size_t i = 0; i < target.dim; ++i) {
    for (std::size_t j = 0; j < L.dim; ++j) sys(i, j) = psi.matrix(i, j);
    for (std::size_t j = 0; j < S.dim; ++j) sys(i, L.dim + j) = F.neg(mu.matrix(i, j));
  }
  Subspace T = nullspace(F, sys);

  Algebra D = direct_sum(L, S);
  auto [A, incl] = subalgebra(D, T);  // throws if not closed

  LinearMap onto_left{A.dim, L.dim, Matrix(L.dim, A.dim)};
  LinearMap onto_right{A.dim, S.dim, Matrix(S.dim, A.dim)};
  for (std::size_t t = 0; t < A.dim; ++t) {
    for (std::size_t i = 0; i < L.dim; ++i) onto_left.matrix(i, t) = incl.matrix(i, t);
    for (std::size_t i = 0; i < S.dim; ++i) onto_right.matrix(i, t) = incl.matrix(L.dim + i, t);
  }
  return PullbackResult{std::move(A), std::move(onto_left), std::move(onto_right)};
}

namespace {

// Deterministic linear section of a surjective map: columns solved with free
// variables at zero.
Matrix section_of(const Field& F, const Matrix& proj) {
  Matrix s(proj.cols(), proj.rows());
  for (std::size_t t = 0; t < proj.rows(); ++t) {
    auto col = solve(F, proj, unit_vec(proj.rows(), t));
    if (!col) throw Error("section_of: map is not surjective");
    for (std::size_t i = 0; i < proj.cols(); ++i) s(i, t) = (*col)[i];
  }
  return s;
}

// Rebuild 0 -> ker(pi) -> G -> Q -> 0 in cocycle normal form, given that
// ker(pi) annihilates G on both sides.
CentralExtension normalize_extension(const Algebra& G, const Algebra& Q, const Matrix& pi) {
  const Field& F = G.field;
  Subspace A = nullspace(F, pi);
  Matrix S = section_of(F, pi);

  std::vector<Vec> sec(Q.dim);
  for (std::size_t t = 0; t < Q.dim; ++t) {
    sec[t] = Vec(G.dim);
    for (std::size_t i = 0; i < G.dim; ++i) sec[t][i] = S(i, t);
  }

  CochainPair f(Q.dim, A.dim());
  for (Prod p : {Prod::Left, Prod::Right})
    for (std::size_t i = 0; i < Q.dim; ++i)
      for (std::size_t j = 0; j < Q.dim; ++j) {
        Vec defect = vec_sub(F, G.multiply(p, sec[i], sec[j]),
                             mat_vec(F, S, Q.basis_product(p, i, j)));
        auto coords = coordinates_in(F, A, defect);
        if (!coords) throw Error("internal: section defect escapes the kernel");
        for (std::size_t c = 0; c < A.dim(); ++c) f.at(p, i, j, c) = (*coords)[c];
      }
  return from_cocycle(Q, f);
}

}  // namespace

CentralExtension compose(const CentralExtension& E1, const CentralExtension& E2) {
  if (!E1.base.same_structure(E2.total))
    throw Error("compose: base of the first extension must equal the total of the second");
  if (!is_perfect(E1.total))
    throw Error("compose: total algebra of the first extension is not perfect");
  const Field& F = E1.total.field;

  LinearMap pi = compose_maps(F, E2.projection, E1.projection);
  Subspace A = nullspace(F, pi.matrix);
  if (!subspace_leq(F, A, center(E1.total)))
    throw Error("compose: composite kernel is not central in the total algebra");

  CentralExtension E3 = normalize_extension(E1.total, E2.base, pi.matrix);
  ensure_valid(E3);
  if (!is_central(E3)) throw Error("internal: composite extension is not central");
  return E3;
}

CentralExtension extension_from_central_ideal(const Algebra& L, const Subspace& Z) {
  const Field& F = L.field;
  if (!subspace_leq(F, Z, center(L))) throw Error("ideal is not contained in the center");
  auto [Q, proj] = quotient(L, Z);

  // ker(proj) = Z, and rref bases are unique, so the kernel coordinates of
  // the normalized extension follow Z's basis rows.
  CentralExtension E = normalize_extension(L, Q, proj.matrix);
  ensure_valid(E);
  return E;
}

bool extensions_equal(const CentralExtension& a, const CentralExtension& b) {
  return a.base.same_structure(b.base) && a.kernel_dim == b.kernel_dim && a.cocycle == b.cocycle;
}

bool extensions_equivalent(const CentralExtension& a, const CentralExtension& b) {
  if (!a.base.same_structure(b.base) || a.kernel_dim != b.kernel_dim) return false;
  const Field& F = a.base.field;
  Vec diff = vec_sub(F, a.cocycle.flat(), b.cocycle.flat());
  return subspace_contains(F, coboundary_space(a.base, a.kernel_dim), diff);
}

std::string UniversalityCertificate::describe() const {
  std::ostringstream os;
  os << "central=" << (central ? "yes" : "no") << " total_perfect=" << (total_perfect ? "yes" : "no")
     << " total_multiplier_dim=" << total_multiplier_dim << " universal=" << (universal ? "yes" : "no")
     << "; criterion: a central extension whose total algebra is perfect with trivial multiplier"
        " uniquely covers every central extension of the base";
  return os.str();
}

UniversalityCertificate certify_universal(const CentralExtension& E) {
  UniversalityCertificate c;
  c.central = is_central(E);
  c.total_perfect = is_perfect(E.total);
  c.total_multiplier_dim = multiplier(E.total).h2_dim;
  c.universal = c.central && c.total_perfect && c.total_multiplier_dim == 0;
  return c;
}

CentralExtension universal_central_extension(const Algebra& L, CoordOrder order) {
  if (!is_perfect(L)) throw Error("universal central extension requires a perfect algebra");
  CohomologyResult coh = h2(L, 1, order);
  const std::size_t m = coh.h2_dim;

  CochainPair f(L.dim, m);
  for (std::size_t c = 0; c < m; ++c)
    for (Prod p : {Prod::Left, Prod::Right})
      for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) f.at(p, i, j, c) = coh.representatives[c].at(p, i, j, 0);

  CentralExtension E = from_cocycle(L, f);
  ensure_valid(E);
  UniversalityCertificate cert = certify_universal(E);
  if (!cert.total_perfect) throw Error("internal: universal extension total is not perfect");
  if (cert.total_multiplier_dim != 0)
    throw Error("internal: universal extension total has nontrivial multiplier");
  if (!cert.universal) throw Error("internal: universality certificate failed");
  return E;
}

DefiningPairReport verify_cover_properties(const Algebra& L) {
  if (!is_perfect(L)) throw Error("verify_cover_properties requires a perfect algebra");
  const Field& F = L.field;

  CentralExtension E = universal_central_extension(L);
  const Algebra& C = E.total;
  Subspace Z = E.kernel_subspace();

  DefiningPairReport rep;
  rep.cover = C;
  rep.multiplier_dim = E.kernel_dim;
  rep.kernel_in_center = subspace_leq(F, Z, center(C));
  rep.kernel_in_derived = subspace_leq(F, Z, derived(C));
  rep.cover_perfect = is_perfect(C);
  rep.cover_multiplier_trivial = multiplier(C).h2_dim == 0;

  auto [Q, proj] = quotient(C, Z);
  rep.quotient_is_base = Q.same_structure(L);
  rep.multiplier_roundtrip = multiplier(Q).h2_dim == E.kernel_dim;
  return rep;
}

}  // namespace dialg
