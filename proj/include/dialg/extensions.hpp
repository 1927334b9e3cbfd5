#pragma once

#include "dialg/cohomology.hpp"

namespace dialg {

// Central extension 0 -> A -> H -> L -> 0 in cocycle normal form: the total
// algebra lives on coordinates (kernel block first, base block second), the
// projection drops the kernel block, the embedding and the canonical section
// are coordinate injections, and the stored cocycle is the defect of the
// canonical section. Equality of extensions = equal base, kernel_dim, cocycle.
struct CentralExtension {
  Algebra base;             // L
  std::size_t kernel_dim;   // k = dim A
  Algebra total;            // H, dim k + n
  LinearMap projection;     // H -> L
  LinearMap embedding;      // A -> H
  LinearMap section;        // L -> H, projection ∘ section = id
  CochainPair cocycle;

  Subspace kernel_subspace() const;  // embedded A inside H
};

// Builds the extension with total products (a,x)*(b,y) = (f*(x,y), x*y).
// Always constructs; the total satisfies the defining identities iff f is a
// cocycle (use check_axioms / ensure_valid to decide).
CentralExtension from_cocycle(const Algebra& L, const CochainPair& f);

// Throws with a diagnostic if the total algebra violates the identities.
void ensure_valid(const CentralExtension& E);

// Defect cochain of a section (default: the stored canonical one).
CochainPair to_cocycle(const CentralExtension& E, const std::optional<LinearMap>& section = {});

// embedded kernel ⊆ center(total)?
bool is_central(const CentralExtension& E);

// Homomorphic section if the extension splits, nullopt otherwise.
std::optional<LinearMap> splits(const CentralExtension& E);

// Extension morphism over the identity of the base.
struct CoveringMorphism {
  LinearMap map;          // τ: H -> H1
  LinearMap restriction;  // τ|_A: A -> A1
};

struct CoveringResult {
  std::optional<CoveringMorphism> witness;
  std::size_t solution_space_dim = 0;             // 0 = unique covering
  std::vector<CoveringMorphism> homogeneous_basis;  // differences of solutions
};

// All homomorphisms τ: total(E) -> total(E1) with proj1 ∘ τ = proj, solved as
// one linear system; absence of a witness means E does not cover E1.
CoveringResult find_covering(const CentralExtension& E, const CentralExtension& E1);

struct PullbackResult {
  Algebra total;       // T = {(a,b) : psi(a) = mu(b)} inside L ⊕ S
  LinearMap onto_left;   // T -> L
  LinearMap onto_right;  // T -> S
};

// Pullback of two surjective homomorphisms onto the same target.
PullbackResult pullback(const Algebra& L, const Algebra& S, const Algebra& target,
                        const LinearMap& psi, const LinearMap& mu);

// Composite of E1: 0 -> B -> G -> L -> 0 and E2: 0 -> C -> L -> Hq -> 0 along
// π = proj2 ∘ proj1, renormalized to cocycle normal form over Hq. Requires
// base(E1) = total(E2) exactly and a perfect G; verified central on output.
CentralExtension compose(const CentralExtension& E1, const CentralExtension& E2);

// The extension 0 -> Z -> L -> L/Z -> 0 for a central ideal Z, in normal form
// (the total is L rewritten on the basis [Z | section of the quotient]).
CentralExtension extension_from_central_ideal(const Algebra& L, const Subspace& Z);

// Equality is literal: same base constants, kernel dimension, cocycle.
bool extensions_equal(const CentralExtension& a, const CentralExtension& b);

// Equivalence allows a change of section: the cocycles differ by a coboundary.
bool extensions_equivalent(const CentralExtension& a, const CentralExtension& b);

struct UniversalityCertificate {
  bool central = false;
  bool total_perfect = false;
  std::size_t total_multiplier_dim = 0;
  bool universal = false;  // central && total_perfect && total_multiplier_dim == 0
  std::string describe() const;
};

// Sufficient criterion for universality: central, perfect total, trivial
// multiplier of the total. Universality follows because a perfect total with
// trivial multiplier makes every central extension of it split, splitting
// makes its identity extension universal, and composing that identity
// extension with E keeps universality.
UniversalityCertificate certify_universal(const CentralExtension& E);

// The universal central extension of a perfect algebra: stacks a
// deterministic basis of multiplier representatives into one cocycle with
// values in F^(dim M(L)). Postconditions (perfect total, trivial multiplier
// of the total, certificate) are verified before returning.
CentralExtension universal_central_extension(const Algebra& L, CoordOrder order = CoordOrder::Forward);

struct DefiningPairReport {
  Algebra cover;                     // K
  std::size_t multiplier_dim = 0;    // dim M
  bool quotient_is_base = false;     // K / M has exactly L's structure constants
  bool kernel_in_center = false;     // M ⊆ Z(K)
  bool kernel_in_derived = false;    // M ⊆ K'
  bool cover_perfect = false;        // K = K'
  bool cover_multiplier_trivial = false;  // dim M(K) = 0
  bool multiplier_roundtrip = false;      // dim M(K / M) = dim M
  bool all_hold() const {
    return quotient_is_base && kernel_in_center && kernel_in_derived && cover_perfect &&
           cover_multiplier_trivial && multiplier_roundtrip;
  }
};

DefiningPairReport verify_cover_properties(const Algebra& L);

}  // namespace dialg
