#pragma once

#include "dialg/algebra.hpp"

namespace dialg {

// A 2-cochain with central coefficients: two bilinear maps L x L -> F^k.
// Flat coordinate order is (product tag, i, j, coefficient) lexicographic,
// with Left before Right; every representative choice downstream depends on
// this order being fixed.
struct CochainPair {
  std::size_t base_dim = 0;   // n
  std::size_t coeff_dim = 0;  // k
  std::vector<Scalar> data;   // size 2 n^2 k

  CochainPair() = default;
  CochainPair(std::size_t n, std::size_t k) : base_dim(n), coeff_dim(k), data(2 * n * n * k) {}

  static std::size_t flat_size(std::size_t n, std::size_t k) { return 2 * n * n * k; }
  std::size_t index(Prod p, std::size_t i, std::size_t j, std::size_t c) const {
    return (((p == Prod::Left ? 0 : 1) * base_dim + i) * base_dim + j) * coeff_dim + c;
  }
  Scalar& at(Prod p, std::size_t i, std::size_t j, std::size_t c) { return data[index(p, i, j, c)]; }
  const Scalar& at(Prod p, std::size_t i, std::size_t j, std::size_t c) const { return data[index(p, i, j, c)]; }

  // f(e_i, e_j) under one product, as a coefficient-space vector
  Vec value(Prod p, std::size_t i, std::size_t j) const;

  static CochainPair from_flat(std::size_t n, std::size_t k, const Vec& flat);
  const Vec& flat() const { return data; }

  friend bool operator==(const CochainPair&, const CochainPair&) = default;
};

// Linear constraints a cochain pair must satisfy for the extension it induces
// to satisfy the five defining identities. Five row families per basis triple
// (one per identity), each with one row per coefficient coordinate; rows are
// ordered by (triple, family, coefficient). Columns follow the flat cochain
// order. The from_cocycle axiom check is the independent oracle for these
// rows; they are never trusted on their own.
Matrix cocycle_system(const Algebra& L, std::size_t k, Exec exec);
Matrix cocycle_system(const Algebra& L, std::size_t k);

// Z^2: cochain pairs (flattened) annihilated by the constraint rows.
Subspace cocycle_space(const Algebra& L, std::size_t k);
bool in_cocycle_space(const Algebra& L, const CochainPair& f);

// B^2: the image of g -> (g(x ⊣ y), g(x ⊢ y)) over linear maps g: L -> F^k.
// Its dimension is k * dim L'.
Subspace coboundary_space(const Algebra& L, std::size_t k);

// The cochain (g(x ⊣ y), g(x ⊢ y)) of a linear map g: L -> F^k.
CochainPair coboundary_of(const Algebra& L, const LinearMap& g);

struct CohomologyResult {
  std::size_t z2_dim = 0, b2_dim = 0, h2_dim = 0;
  std::vector<CochainPair> representatives;  // h2_dim cocycles, independent mod B^2
};

// Cochain coordinate orders for representative selection. Forward is the
// canonical choice; Reversed exists to build a second, independent set of
// representatives for uniqueness tests.
enum class CoordOrder { Forward, Reversed };

CohomologyResult h2(const Algebra& L, std::size_t k, CoordOrder order = CoordOrder::Forward);

// dim M(L) = h2(L, 1).h2_dim
CohomologyResult multiplier(const Algebra& L);

// Witness g with f = (g∘⊣, g∘⊢), or nullopt. Throws if f is not a cocycle.
std::optional<LinearMap> is_coboundary(const Algebra& L, const CochainPair& f);

}  // namespace dialg
