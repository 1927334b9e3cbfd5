#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dialg/extensions.hpp"

namespace dialg {

// Line-oriented text formats.
//
// Algebra files:
//   dialg 1
//   field Q            (or: field p=<prime>)
//   dim <n>
//   left|right <i> <j> <k> <num>[/<den>]     one line per nonzero constant
//
// Extension files append to the base algebra block:
//   kernel <k>
//   cocycle left|right <i> <j> <c> <num>[/<den>]
//
// Indices are 1-based. Writers emit canonical form: constants sorted by
// (product, i, j, k) with left before right, rationals in lowest terms and
// "/1" omitted; parse(write(x)) is the identity on canonical objects.
// Blank lines and "#" comments are accepted on input.

Algebra parse_algebra(const std::string& text);
std::string write_algebra(const Algebra& a);

CentralExtension parse_extension(const std::string& text);
std::string write_extension(const CentralExtension& e);

// Same structure constants reinterpreted in another field. Every stored
// num/den is mapped through the target field; fails if a denominator is not
// invertible there.
Algebra convert_algebra(const Algebra& a, const Field& target);

// Generators. All outputs pass check_axioms.
Algebra gen_abelian(const Field& F, std::size_t n);

// Both products equal to one associative product given by its structure
// tensor; the three mixed identities degenerate to associativity.
Algebra gen_double_assoc(const Field& F, const Tensor3& assoc_table);

// m x m matrix algebra with both products the matrix product. Basis E_{ab}
// at index (a-1)m + (b-1). Perfect and unital.
Algebra gen_matrix_double(const Field& F, std::size_t m);

// span{t, t^2, ..., t^n}, both products t^a t^b = t^{a+b} truncated above n.
Algebra gen_truncated_poly(const Field& F, std::size_t n);

// Deterministic rejection sampler: sparse upward-graded tensors filtered by
// check_axioms. Same seed gives the same algebra on every platform.
Algebra gen_random(const Field& F, std::size_t n, std::uint64_t seed);

struct CatalogEntry {
  std::string name;
  std::string summary;
  Algebra (*build)(const Field& F);
  // frozen invariants over Q
  std::size_t derived_dim;
  std::size_t center_dim;
  bool perfect;
  std::optional<std::size_t> multiplier_dim;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);
Algebra catalog_algebra(const std::string& name, const Field& F = Field::rationals());

}  // namespace dialg
