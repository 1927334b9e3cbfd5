#include <doctest.h>

#include "helpers.hpp"

using namespace dialg;
using namespace dialg::test;

namespace {

// re-evaluate a reported violation from the structure constants
bool violation_is_correct(const Algebra& L, const AxiomViolation& v) {
  auto prod = [&](Prod p, const Vec& x, const Vec& y) { return L.multiply(p, x, y); };
  Vec x = unit_vec(L.dim, v.i), y = unit_vec(L.dim, v.j), z = unit_vec(L.dim, v.k);
  Vec lhs, rhs;
  switch (v.id) {
    case AxiomId::AssocLeft:
      lhs = prod(Prod::Left, prod(Prod::Left, x, y), z);
      rhs = prod(Prod::Left, x, prod(Prod::Left, y, z));
      break;
    case AxiomId::LeftCollapse:
      lhs = prod(Prod::Left, x, prod(Prod::Left, y, z));
      rhs = prod(Prod::Left, x, prod(Prod::Right, y, z));
      break;
    case AxiomId::Middle:
      lhs = prod(Prod::Left, prod(Prod::Right, x, y), z);
      rhs = prod(Prod::Right, x, prod(Prod::Left, y, z));
      break;
    case AxiomId::RightCollapse:
      lhs = prod(Prod::Right, prod(Prod::Left, x, y), z);
      rhs = prod(Prod::Right, prod(Prod::Right, x, y), z);
      break;
    case AxiomId::AssocRight:
      lhs = prod(Prod::Right, prod(Prod::Right, x, y), z);
      rhs = prod(Prod::Right, x, prod(Prod::Right, y, z));
      break;
  }
  return vec_eq(L.field, lhs, v.lhs) && vec_eq(L.field, rhs, v.rhs) && !vec_eq(L.field, lhs, rhs);
}

bool has_violation(const AxiomReport& r, AxiomId id) {
  for (const auto& v : r.violations)
    if (v.id == id) return true;
  return false;
}

}  // namespace

TEST_CASE("defining identities on the catalog") {
  for (const CatalogEntry& e : catalog()) CHECK(check_axioms(e.build(Q())).ok);
}

TEST_CASE("one-sided idempotent fails exactly the left-collapse identity") {
  Field F = Q();
  Algebra a = Algebra::zero(F, 1);
  a.left.at(0, 0, 0) = Scalar(1);  // e ⊣ e = e, right product zero
  AxiomReport r = check_axioms(a);
  CHECK(!r.ok);
  REQUIRE(r.violations.size() == 1);
  const AxiomViolation& v = r.violations.front();
  CHECK(v.id == AxiomId::LeftCollapse);
  CHECK((v.i == 0 && v.j == 0 && v.k == 0));
  CHECK(vec_eq(F, v.lhs, vec(F, {1})));
  CHECK(vec_eq(F, v.rhs, vec(F, {0})));
}

TEST_CASE("targeted mutations are caught with correct witnesses") {
  Field F = Q();

  // right product zeroed on the idempotent: right-collapse breaks
  Algebra a = Algebra::zero(F, 1);
  a.right.at(0, 0, 0) = Scalar(1);
  AxiomReport r = check_axioms(a);
  CHECK(has_violation(r, AxiomId::RightCollapse));

  // non-associative left product
  Algebra b = Algebra::zero(F, 2);
  b.left.at(0, 0, 1) = Scalar(1);
  b.left.at(0, 1, 0) = Scalar(1);
  r = check_axioms(b);
  CHECK(has_violation(r, AxiomId::AssocLeft));

  // mirror image for the right product
  Algebra c = Algebra::zero(F, 2);
  c.right.at(0, 0, 1) = Scalar(1);
  c.right.at(0, 1, 0) = Scalar(1);
  r = check_axioms(c);
  CHECK(has_violation(r, AxiomId::AssocRight));

  // degree-2 truncated polynomials with an extra left entry: middle breaks
  Algebra d = catalog_algebra("t2");
  d.left.at(1, 0, 1) = Scalar(1);
  r = check_axioms(d);
  CHECK(has_violation(r, AxiomId::Middle));

  // idempotent with the right product removed: left-collapse breaks
  Algebra e = catalog_algebra("k1");
  e.right.at(0, 0, 0) = Scalar(0);
  r = check_axioms(e);
  CHECK(has_violation(r, AxiomId::LeftCollapse));

  // every mutated catalog algebra reports only correct witnesses
  std::mt19937_64 rng(7);
  for (const char* name : {"k1", "n2", "t2", "t3", "m2d"}) {
    Algebra m = catalog_algebra(name);
    Prod p = rng() % 2 ? Prod::Left : Prod::Right;
    std::size_t i = rng() % m.dim, j = rng() % m.dim, k = rng() % m.dim;
    m.tensor(p).at(i, j, k) = F.add(m.tensor(p).at(i, j, k), F.one());
    AxiomReport rep = check_axioms(m);
    for (const AxiomViolation& v : rep.violations) CHECK(violation_is_correct(m, v));
  }
}

TEST_CASE("diamond and derived ideals") {
  Field F = Q();
  Algebra n2 = catalog_algebra("n2");
  Subspace full = full_space(n2);
  Subspace d = diamond(n2, full, full);
  REQUIRE(d.dim() == 1);
  CHECK(d.basis.row(0) == vec(F, {0, 1}));

  CHECK(diamond(n2, zero_subspace(2), full).dim() == 0);

  Algebra k1 = catalog_algebra("k1");
  CHECK(diamond(k1, full_space(k1), full_space(k1)).dim() == 1);

  CHECK(derived(catalog_algebra("d1")).dim() == 0);
  CHECK(derived(catalog_algebra("t3")).dim() == 2);
}

TEST_CASE("perfectness, with the independent product-span oracle for m2d") {
  // oracle first: the span of all 16 basis products of matrix units
  Algebra m2d = catalog_algebra("m2d");
  Matrix prods(0, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) prods.append_row(m2d.basis_product(Prod::Left, i, j));
  CHECK(rank(Q(), prods) == 4);

  CHECK(is_perfect(m2d));
  CHECK(is_perfect(catalog_algebra("k1")));
  CHECK(!is_perfect(catalog_algebra("d1")));
  CHECK(!is_perfect(catalog_algebra("n2")));
}

TEST_CASE("center as the two-sided annihilator") {
  Field F = Q();
  CHECK(center(catalog_algebra("d1")).dim() == 1);
  CHECK(center(catalog_algebra("m2d")).dim() == 0);

  Subspace z = center(catalog_algebra("n2"));
  REQUIRE(z.dim() == 1);
  CHECK(z.basis.row(0) == vec(F, {0, 1}));

  for (const CatalogEntry& e : catalog()) {
    Algebra L = e.build(F);
    Subspace Z = center(L);
    CHECK(Z.dim() == e.center_dim);
    CHECK(is_ideal(L, Z));
    CHECK(diamond(L, Z, full_space(L)).dim() == 0);
    CHECK(diamond(L, full_space(L), Z).dim() == 0);
  }
}

TEST_CASE("quotients: by a nilpotent ideal, by zero, by everything") {
  Field F = Q();
  Algebra n2 = catalog_algebra("n2");
  Subspace e2 = subspace_from_rows(F, 2, mat(F, 1, 2, {0, 1}));
  auto [q, proj] = quotient(n2, e2);
  CHECK(q.same_structure(catalog_algebra("d1")));
  CHECK(is_homomorphism(F, proj, n2, q));

  Algebra m2d = catalog_algebra("m2d");
  auto [q0, p0] = quotient(m2d, zero_subspace(4));
  CHECK(q0.same_structure(m2d));

  auto [qf, pf] = quotient(m2d, full_space(m2d));
  CHECK(qf.dim == 0);

  Subspace e1 = subspace_from_rows(F, 2, mat(F, 1, 2, {1, 0}));
  CHECK_THROWS_AS(quotient(n2, e1), Error);  // not an ideal

  // derived ideal of a quotient = image of the derived ideal
  for (const char* name : {"n2", "t2", "t3"}) {
    Algebra L = catalog_algebra(name);
    Subspace Z = center(L);
    auto [Qt, pr] = quotient(L, Z);
    Matrix img(0, Qt.dim);
    Subspace d = derived(L);
    for (std::size_t i = 0; i < d.dim(); ++i) img.append_row(pr.apply(F, d.basis.row(i)));
    CHECK(subspace_from_rows(F, Qt.dim, img) == derived(Qt));
  }
}

TEST_CASE("direct sums") {
  Field F = Q();
  Algebra s = direct_sum(catalog_algebra("k1"), catalog_algebra("d1"));
  CHECK(s.dim == 2);
  CHECK(check_axioms(s).ok);
  CHECK(s.left.at(0, 0, 0) == F.one());
  CHECK(F.is_zero(s.left.at(1, 1, 1)));
  CHECK(derived(s).dim() == 1);

  Algebra ab2 = direct_sum(catalog_algebra("d1"), catalog_algebra("d1"));
  CHECK(ab2.same_structure(catalog_algebra("a2")));

  CHECK(direct_sum(catalog_algebra("m2d"), catalog_algebra("t3")).dim == 7);
  CHECK_THROWS_AS(direct_sum(catalog_algebra("d1", Q()), catalog_algebra("d1", F5())), Error);

  // projection from a perfect direct sum keeps perfectness
  Algebra p = direct_sum(catalog_algebra("m2d"), catalog_algebra("k1"));
  CHECK(is_perfect(p));
  LinearMap proj{5, 4, Matrix(4, 5)};
  for (std::size_t i = 0; i < 4; ++i) proj.matrix(i, i) = Scalar(1);
  CHECK(is_homomorphism(F, proj, p, catalog_algebra("m2d")));
  CHECK(is_perfect(catalog_algebra("m2d")));
}

TEST_CASE("homomorphism checks") {
  Field F = Q();
  Algebra n2 = catalog_algebra("n2");
  CHECK(is_homomorphism(F, LinearMap::identity(2), n2, n2));
  CHECK(is_homomorphism(F, LinearMap::zero(2, 2), n2, n2));

  // coordinate map n2 -> d1 ⊕ d1 is not a homomorphism
  Algebra a2 = catalog_algebra("a2");
  CHECK(!is_homomorphism(F, LinearMap::identity(2), n2, a2));
}

TEST_CASE("functionals to the field") {
  CHECK(hom_to_field_dim(catalog_algebra("k1")) == 0);
  CHECK(hom_to_field_dim(catalog_algebra("d1")) == 1);
  CHECK(hom_to_field_dim(catalog_algebra("n2")) == 1);
  CHECK(hom_to_field_dim(catalog_algebra("t3")) == 1);
}

TEST_CASE("multiplication operators match the products") {
  std::mt19937_64 rng(77);
  Algebra L = catalog_algebra("m2d");
  const Field& F = L.field;
  for (int it = 0; it < 10; ++it) {
    Vec a(L.dim), x(L.dim);
    for (auto& s : a) s = F.sample(rng);
    for (auto& s : x) s = F.sample(rng);
    MultiplicationOperators ops = multiplication_operators(L, a);
    CHECK(vec_eq(F, mat_vec(F, ops.lambda_left, x), L.multiply(Prod::Left, a, x)));
    CHECK(vec_eq(F, mat_vec(F, ops.lambda_right, x), L.multiply(Prod::Right, a, x)));
    CHECK(vec_eq(F, mat_vec(F, ops.rho_left, x), L.multiply(Prod::Left, x, a)));
    CHECK(vec_eq(F, mat_vec(F, ops.rho_right, x), L.multiply(Prod::Right, x, a)));
  }
}

TEST_CASE("diamond is monotone") {
  std::mt19937_64 rng(79);
  Algebra L = catalog_algebra("t3");
  const Field& F = L.field;
  for (int it = 0; it < 30; ++it) {
    Subspace S = random_space(F, L.dim, 1 + rng() % 2, rng);
    Subspace T = random_space(F, L.dim, 1 + rng() % 2, rng);
    Subspace S2 = subspace_sum(F, S, random_space(F, L.dim, 1, rng));
    Subspace T2 = subspace_sum(F, T, random_space(F, L.dim, 1, rng));
    CHECK(subspace_leq(F, diamond(L, S, T), diamond(L, S2, T2)));
  }
}

TEST_CASE("subalgebra extraction") {
  Field F = Q();
  Algebra t3 = catalog_algebra("t3");
  Subspace span = subspace_from_rows(F, 3, mat(F, 2, 3, {0, 1, 0, 0, 0, 1}));
  auto [sub, incl] = subalgebra(t3, span);
  CHECK(sub.dim == 2);
  CHECK(check_axioms(sub).ok);
  CHECK(is_homomorphism(F, incl, sub, t3));
  CHECK(derived(sub).dim() == 0);  // t^2 * t^2 = t^4 = 0

  Subspace not_closed = subspace_from_rows(F, 3, mat(F, 1, 3, {1, 0, 0}));
  CHECK_THROWS_AS(subalgebra(t3, not_closed), Error);
}

TEST_CASE("functional count over F_2 matches hom_to_field_dim exhaustively") {
  for (const char* name : {"d1", "k1", "n2", "t2", "t3", "m2d"}) {
    Algebra L = catalog_algebra(name, F2());
    const Field& F = L.field;
    std::size_t homs = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << L.dim); ++mask) {
      Vec theta(L.dim);
      for (std::size_t b = 0; b < L.dim; ++b) theta[b] = Scalar((mask >> b) & 1);
      // homomorphism into the one-dimensional zero-product algebra:
      // theta must vanish on every product
      bool ok = true;
      for (Prod p : {Prod::Left, Prod::Right})
        for (std::size_t i = 0; i < L.dim && ok; ++i)
          for (std::size_t j = 0; j < L.dim && ok; ++j) {
            Vec prod = L.basis_product(p, i, j);
            Scalar acc(0);
            for (std::size_t b = 0; b < L.dim; ++b) acc = F.add(acc, F.mul(theta[b], prod[b]));
            ok = F.is_zero(acc);
          }
      if (ok) ++homs;
    }
    CHECK(homs == (std::size_t{1} << hom_to_field_dim(L)));
  }
}
