#pragma once

#include <cstdint>

#include "dialg/catalog.hpp"

namespace dialg {

// One row of the verification suite: a structural statement about covers,
// multipliers or central extensions, machine-checked on a concrete algebra.
struct TheoremCheck {
  std::string key;
  bool applicable = true;  // some rows need a perfect (or non-perfect) input
  bool passed = true;
  std::string detail;
};

// Runs every check that applies to L. Deterministic for a fixed seed.
std::vector<TheoremCheck> run_theorem_suite(const Algebra& L, std::uint64_t seed = 1);

// Helpers shared with tests: deterministic random objects over L.
Subspace random_subspace(const Algebra& L, std::mt19937_64& rng, std::size_t generators);
CochainPair random_cocycle(const Algebra& L, std::size_t k, std::mt19937_64& rng);
// same, against a precomputed Z^2(L, F) basis (avoids re-solving per sample)
CochainPair random_cocycle_from(const Algebra& L, const Subspace& z2_basis, std::size_t k,
                                std::mt19937_64& rng);
CochainPair random_coboundary(const Algebra& L, std::size_t k, std::mt19937_64& rng);
CochainPair random_cochain(const Algebra& L, std::size_t k, std::mt19937_64& rng);

}  // namespace dialg
