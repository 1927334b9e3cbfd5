#include <doctest.h>

#include "helpers.hpp"

using namespace dialg;
using namespace dialg::test;

TEST_CASE("from_cocycle layouts and the canonical section") {
  Field F = Q();
  Algebra d1 = catalog_algebra("d1");

  CentralExtension e0 = from_cocycle(d1, CochainPair(1, 1));
  CHECK(e0.total.dim == 2);
  CHECK(check_axioms(e0.total).ok);
  CHECK(derived(e0.total).dim() == 0);  // 2-dim abelian

  CochainPair f(1, 1);
  f.at(Prod::Left, 0, 0, 0) = F.one();
  CentralExtension e1 = from_cocycle(d1, f);
  // kernel block first: e2 ⊣ e2 = e1 is n2 with the blocks swapped
  CHECK(e1.total.left.at(1, 1, 0) == F.one());
  CHECK(check_axioms(e1.total).ok);
  CHECK(center(e1.total).dim() == 1);
  CHECK(is_central(e1));

  // invalid cochain: constructed, but the axioms fail and ensure_valid throws
  Algebra n2 = catalog_algebra("n2");
  CochainPair bad(2, 1);
  bad.at(Prod::Left, 1, 1, 0) = F.one();
  CentralExtension eb = from_cocycle(n2, bad);
  CHECK(!check_axioms(eb.total).ok);
  CHECK_THROWS_AS(ensure_valid(eb), Error);

  // projection and section behave as advertised even on invalid data
  CHECK(mat_mul(F, eb.projection.matrix, eb.section.matrix) == Matrix::identity(2));
}

TEST_CASE("to_cocycle round-trips, exhaustively over F_2 at small dimension") {
  for (const char* name : {"d1", "k1", "n2"}) {
    Algebra L = catalog_algebra(name, F2());
    const std::size_t bits = CochainPair::flat_size(L.dim, 1);
    for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
      Vec flat(bits);
      for (std::size_t b = 0; b < bits; ++b) flat[b] = Scalar((mask >> b) & 1);
      CochainPair f = CochainPair::from_flat(L.dim, 1, flat);
      CHECK(to_cocycle(from_cocycle(L, f)) == f);
    }
  }
}

TEST_CASE("changing the section shifts the cochain by a coboundary") {
  std::mt19937_64 rng(301);
  Algebra L = catalog_algebra("t3");
  const Field& F = L.field;
  for (int it = 0; it < 10; ++it) {
    std::size_t k = 1 + rng() % 2;
    CochainPair f = random_cocycle(L, k, rng);
    CentralExtension E = from_cocycle(L, f);

    // new section mu'(x) = (g(x), x)
    LinearMap g = LinearMap::zero(L.dim, k);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t m = 0; m < L.dim; ++m) g.matrix(c, m) = F.sample(rng);
    LinearMap s{L.dim, E.total.dim, vstack(g.matrix, Matrix::identity(L.dim))};

    CochainPair f2 = to_cocycle(E, s);
    Vec diff = vec_sub(F, f2.flat(), f.flat());
    CHECK(subspace_contains(F, coboundary_space(L, k), diff));
    // specifically, the shift is -δg
    CHECK(vec_eq(F, diff, vec_scale(F, F.from_int(-1), coboundary_of(L, g).flat())));
  }

  // a non-section is rejected
  CentralExtension E = from_cocycle(L, CochainPair(3, 1));
  CHECK_THROWS_AS(to_cocycle(E, LinearMap::zero(3, 4)), Error);
}

TEST_CASE("centrality: canonical extensions are central, a fake one is not") {
  CHECK(is_central(from_cocycle(catalog_algebra("d1"), CochainPair(1, 1))));

  // direct-sum shape: kernel = the abelian block
  Algebra k1 = catalog_algebra("k1");
  CentralExtension split = from_cocycle(k1, CochainPair(1, 2));
  CHECK(is_central(split));

  // hand-built: k1 presented as an "extension" of the zero algebra by itself
  Algebra zero = Algebra::zero(Q(), 0);
  CentralExtension fake{zero, 1, k1, LinearMap::zero(1, 0), LinearMap::identity(1),
                        LinearMap::zero(0, 1), CochainPair(0, 1)};
  CHECK(!is_central(fake));
}

TEST_CASE("splitting: witnesses and refusals") {
  Field F = Q();
  Algebra d1 = catalog_algebra("d1");

  // zero cocycle splits with the canonical section
  CentralExtension e0 = from_cocycle(d1, CochainPair(1, 1));
  auto b0 = splits(e0);
  REQUIRE(b0.has_value());
  CHECK(b0->matrix == e0.section.matrix);

  // the n2 extension of d1 does not split
  CochainPair f(1, 1);
  f.at(Prod::Left, 0, 0, 0) = F.one();
  CHECK(!splits(from_cocycle(d1, f)).has_value());

  // every central extension of k1 by one F_2 coefficient splits
  Algebra k1 = catalog_algebra("k1", F2());
  Matrix sys = cocycle_system(k1, 1);
  std::size_t split_count = 0, cocycle_count = 0;
  for (std::size_t mask = 0; mask < 4; ++mask) {
    Vec flat{Scalar(mask & 1), Scalar((mask >> 1) & 1)};
    if (!vec_is_zero(k1.field, mat_vec(k1.field, sys, flat))) continue;
    ++cocycle_count;
    if (splits(from_cocycle(k1, CochainPair::from_flat(1, 1, flat))).has_value()) ++split_count;
  }
  CHECK(cocycle_count == 2);
  CHECK(split_count == cocycle_count);
}

TEST_CASE("split agrees with the coboundary test on random samples") {
  std::mt19937_64 rng(311);
  for (const char* name : {"n2", "t2", "m2d"}) {
    Algebra L = catalog_algebra(name);
    Subspace Z = cocycle_space(L, 1);
    for (int it = 0; it < 8; ++it) {
      std::size_t k = 1 + rng() % 2;
      CochainPair f = it % 2 ? random_cocycle_from(L, Z, k, rng) : random_coboundary(L, k, rng);
      CHECK(splits(from_cocycle(L, f)).has_value() == is_coboundary(L, f).has_value());
    }
  }
}

TEST_CASE("covering morphisms") {
  Field F = Q();
  Algebra k1 = catalog_algebra("k1");
  CentralExtension id_ext = from_cocycle(k1, CochainPair(1, 0));

  // a perfect total covers itself uniquely, by the identity
  CoveringResult self = find_covering(id_ext, id_ext);
  REQUIRE(self.witness.has_value());
  CHECK(self.solution_space_dim == 0);
  CHECK(self.witness->map.matrix == Matrix::identity(1));

  // the identity extension covers every splitting central extension
  std::mt19937_64 rng(313);
  for (int it = 0; it < 6; ++it) {
    CentralExtension e1 = from_cocycle(k1, random_cocycle(k1, 1 + rng() % 2, rng));
    CoveringResult r = find_covering(id_ext, e1);
    REQUIRE(r.witness.has_value());
    CHECK(r.solution_space_dim == 0);  // uniqueness from perfectness
    // diagram checks are internal postconditions; re-check the kernel square
    const CoveringMorphism& t = *r.witness;
    CHECK(mat_mul(F, e1.projection.matrix, t.map.matrix) == id_ext.projection.matrix);
  }

  // a non-split extension of d1 is not covered by the split one
  Algebra d1 = catalog_algebra("d1");
  CochainPair f(1, 1);
  f.at(Prod::Left, 0, 0, 0) = F.one();
  CentralExtension nonsplit = from_cocycle(d1, f);
  CentralExtension zero_ext = from_cocycle(d1, CochainPair(1, 1));
  // covering would force the nonzero target cocycle to be a coboundary shift
  // of zero through phi_A: the system is inconsistent
  CHECK(!find_covering(zero_ext, nonsplit).witness.has_value());
  // the other direction is solvable with phi_A = 0
  CHECK(find_covering(nonsplit, zero_ext).witness.has_value());

  // non-uniqueness is visible over a non-perfect total: d1 self-covering
  CoveringResult loose = find_covering(zero_ext, zero_ext);
  REQUIRE(loose.witness.has_value());
  CHECK(loose.solution_space_dim > 0);
  CHECK(loose.homogeneous_basis.size() == loose.solution_space_dim);

  // mismatched bases are rejected
  CHECK_THROWS_AS(find_covering(id_ext, zero_ext), Error);
}

TEST_CASE("pullbacks") {
  Field F = Q();
  Algebra L = catalog_algebra("m2d");
  LinearMap id = LinearMap::identity(4);

  PullbackResult diag = pullback(L, L, L, id, id);
  CHECK(diag.total.dim == 4);
  CHECK(diag.total.same_structure(L));
  CHECK(is_homomorphism(F, diag.onto_left, diag.total, L));

  // S = L with an extra kernel coordinate, zero cocycle
  CentralExtension es = from_cocycle(L, CochainPair(4, 1));
  PullbackResult r = pullback(L, es.total, L, id, es.projection);
  CHECK(r.total.dim == 4 + 5 - 4);
  CHECK(r.total.dim == es.total.dim);
  CHECK(check_axioms(r.total).ok);

  // dimension identity over F_3 towers
  std::mt19937_64 rng(317);
  Algebra t3 = catalog_algebra("t3", F3());
  for (int it = 0; it < 10; ++it) {
    CentralExtension ea = from_cocycle(t3, random_cocycle(t3, 1 + rng() % 2, rng));
    CentralExtension eb = from_cocycle(t3, random_cocycle(t3, 1 + rng() % 2, rng));
    PullbackResult p = pullback(ea.total, eb.total, t3, ea.projection, eb.projection);
    CHECK(p.total.dim == ea.total.dim + eb.total.dim - t3.dim);
    CHECK(is_homomorphism(t3.field, p.onto_left, p.total, ea.total));
    CHECK(is_homomorphism(t3.field, p.onto_right, p.total, eb.total));
  }

  // non-surjective and non-homomorphic inputs are rejected
  CHECK_THROWS_AS(pullback(L, L, L, LinearMap::zero(4, 4), id), Error);
}

TEST_CASE("extensions from central ideals") {
  Field F = Q();
  Algebra n2 = catalog_algebra("n2");
  Subspace z = subspace_from_rows(F, 2, mat(F, 1, 2, {0, 1}));

  CentralExtension e = extension_from_central_ideal(n2, z);
  CHECK(e.base.same_structure(catalog_algebra("d1")));
  CHECK(e.kernel_dim == 1);
  CHECK(e.total.dim == 2);
  // exactly the committed non-split witness: f_left(e1,e1) = 1
  CHECK(e.cocycle.at(Prod::Left, 0, 0, 0) == F.one());
  CHECK(!splits(e).has_value());

  // quotient by zero reproduces the algebra as an identity extension
  CentralExtension e0 = extension_from_central_ideal(n2, zero_subspace(2));
  CHECK(e0.kernel_dim == 0);
  CHECK(e0.total.same_structure(n2));

  // a non-central subspace is rejected
  Subspace e1 = subspace_from_rows(F, 2, mat(F, 1, 2, {1, 0}));
  CHECK_THROWS_AS(extension_from_central_ideal(n2, e1), Error);
}

TEST_CASE("composition of central towers") {
  Field F = Q();
  Algebra k1 = catalog_algebra("k1");
  CentralExtension id_ext = from_cocycle(k1, CochainPair(1, 0));

  CentralExtension c = compose(id_ext, id_ext);
  CHECK(c.base.same_structure(k1));
  CHECK(c.kernel_dim == 0);
  CHECK(c.total.same_structure(k1));

  // tower through a central ideal: t3 / center over the quotient
  Algebra t3 = catalog_algebra("t3");
  CentralExtension e2 = extension_from_central_ideal(t3, center(t3));
  CentralExtension e1 = from_cocycle(e2.total, CochainPair(3, 0));  // identity on the total
  // the total of e1 is t3 rewritten, which is not perfect: rejected
  CHECK_THROWS_AS(compose(e1, e2), Error);

  // a perfect tower built from the cover
  Algebra m2d = catalog_algebra("m2d");
  CentralExtension q0 = extension_from_central_ideal(m2d, zero_subspace(4));
  CentralExtension uce = universal_central_extension(m2d);
  CentralExtension c2 = compose(uce, q0);
  CHECK(is_central(c2));
  CHECK(c2.base.same_structure(m2d));
  // composing a universal extension keeps it universal
  CHECK(certify_universal(c2).universal);

  // mismatched towers are rejected
  CHECK_THROWS_AS(compose(id_ext, q0), Error);
}

TEST_CASE("extension equality vs coboundary equivalence") {
  std::mt19937_64 rng(331);
  Algebra L = catalog_algebra("t2");
  CochainPair f = random_cocycle(L, 1, rng);
  CentralExtension a = from_cocycle(L, f);
  CHECK(extensions_equal(a, a));
  CHECK(extensions_equivalent(a, a));

  // shift by a coboundary: equivalent, not equal
  CochainPair g = random_coboundary(L, 1, rng);
  CochainPair shifted = f;
  for (std::size_t t = 0; t < shifted.data.size(); ++t)
    shifted.data[t] = L.field.add(shifted.data[t], g.data[t]);
  CentralExtension b = from_cocycle(L, shifted);
  CHECK(extensions_equivalent(a, b));
  if (!vec_is_zero(L.field, g.flat())) CHECK(!extensions_equal(a, b));

  // a multiplier representative is not equivalent to the split extension
  CochainPair rep = multiplier(L).representatives.front();
  CHECK(!extensions_equivalent(from_cocycle(L, rep), from_cocycle(L, CochainPair(2, 1))));
}

TEST_CASE("auxiliary direct-product extension is central") {
  // shape used to force perfect totals: H x H/H' mapping onto the base
  // through the first factor
  Field F = Q();
  for (const char* name : {"t3", "m2d"}) {
    Algebra L = catalog_algebra(name);
    std::mt19937_64 rng(337);
    CentralExtension E = from_cocycle(L, random_cocycle(L, 1, rng));
    const Algebra& H = E.total;
    auto [Hab, abproj] = quotient(H, derived(H));
    Algebra D = direct_sum(H, Hab);

    // pi(h, b) = projection(h); kernel = A x H/H'
    Matrix pi(L.dim, D.dim);
    for (std::size_t i = 0; i < L.dim; ++i)
      for (std::size_t j = 0; j < H.dim; ++j) pi(i, j) = E.projection.matrix(i, j);
    Subspace ker = nullspace(F, pi);
    CHECK(ker.dim() == E.kernel_dim + Hab.dim);
    CHECK(subspace_leq(F, ker, center(D)));
  }
}

TEST_CASE("universal central extensions") {
  Field F = Q();

  // k1: trivial multiplier, the cover is k1 itself
  CentralExtension ek = universal_central_extension(catalog_algebra("k1"));
  CHECK(ek.kernel_dim == 0);
  CHECK(ek.total.same_structure(catalog_algebra("k1")));

  // non-perfect input is rejected
  CHECK_THROWS_AS(universal_central_extension(catalog_algebra("d1")), Error);
  CHECK_THROWS_AS(universal_central_extension(catalog_algebra("n2")), Error);

  // m2d and m3d: postconditions were verified inside; pin the regressions
  for (const char* name : {"m2d", "m3d"}) {
    Algebra L = catalog_algebra(name);
    CentralExtension e = universal_central_extension(L);
    CHECK(e.kernel_dim == multiplier(L).h2_dim);
    CHECK(e.kernel_dim == 0);
    CHECK(e.total.dim == L.dim);
    CHECK(is_perfect(e.total));
    CHECK(multiplier(e.total).h2_dim == 0);
  }
}

TEST_CASE("universality certificates") {
  Field F = Q();
  Algebra k1 = catalog_algebra("k1");

  UniversalityCertificate good = certify_universal(from_cocycle(k1, CochainPair(1, 0)));
  CHECK(good.universal);
  CHECK(good.central);
  CHECK(good.total_perfect);
  CHECK(good.total_multiplier_dim == 0);

  // non-perfect total: k1 with a superfluous kernel coordinate
  UniversalityCertificate bad1 = certify_universal(from_cocycle(k1, CochainPair(1, 1)));
  CHECK(!bad1.total_perfect);
  CHECK(!bad1.universal);

  // non-perfect base with zero cocycle
  UniversalityCertificate bad2 =
      certify_universal(from_cocycle(catalog_algebra("d1"), CochainPair(1, 0)));
  CHECK(!bad2.universal);
}

TEST_CASE("cover property reports") {
  DefiningPairReport k1 = verify_cover_properties(catalog_algebra("k1"));
  CHECK(k1.multiplier_dim == 0);
  CHECK(k1.all_hold());

  DefiningPairReport m2d = verify_cover_properties(catalog_algebra("m2d"));
  CHECK(m2d.multiplier_dim == 0);
  CHECK(m2d.cover.dim == 4);
  CHECK(m2d.all_hold());

  CHECK_THROWS_AS(verify_cover_properties(catalog_algebra("t3")), Error);
}

TEST_CASE("the full verification suite passes on every catalog algebra") {
  for (const char* name : {"d1", "k1", "n2", "t2", "m2d"}) {
    Algebra L = catalog_algebra(name);
    for (const TheoremCheck& row : run_theorem_suite(L, 5)) {
      INFO(name, ": ", row.key, ": ", row.detail);
      CHECK(row.passed);
    }
  }
}

TEST_CASE("structural invariants of canonical extensions") {
  std::mt19937_64 rng(601);
  for (const char* name : {"n2", "t3", "m2d"}) {
    Algebra L = catalog_algebra(name);
    const Field& F = L.field;
    CentralExtension E = from_cocycle(L, random_cocycle(L, 1 + rng() % 2, rng));

    // projection is a surjective homomorphism with the embedded kernel
    CHECK(is_homomorphism(F, E.projection, E.total, E.base));
    CHECK(rank(F, E.projection.matrix) == L.dim);
    CHECK(nullspace(F, E.projection.matrix) == E.kernel_subspace());

    // section and embedding are coordinate injections
    CHECK(mat_mul(F, E.projection.matrix, E.section.matrix) == Matrix::identity(L.dim));
    CHECK(subspace_leq(F, E.kernel_subspace(), center(E.total)));

    // the stored cocycle is the canonical section defect
    CHECK(to_cocycle(E) == E.cocycle);
  }
}
