#pragma once

#include <array>
#include <string>
#include <utility>

#include "dialg/linalg.hpp"

namespace dialg {

// The two products of a diassociative algebra.
enum class Prod { Left, Right };  // Left = ⊣, Right = ⊢

inline const char* prod_name(Prod p) { return p == Prod::Left ? "left" : "right"; }

// n x n x n structure-constant tensor: e_i * e_j = sum_k c[i][j][k] e_k.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), e_(n * n * n) {}

  std::size_t n() const { return n_; }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return e_[(i * n_ + j) * n_ + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return e_[(i * n_ + j) * n_ + k]; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> e_;
};

// Finite-dimensional diassociative algebra given by structure constants.
// Construction does not validate the defining identities; run check_axioms
// before feeding an algebra to anything that assumes them.
struct Algebra {
  Field field;
  std::size_t dim = 0;
  Tensor3 left, right;

  static Algebra zero(const Field& f, std::size_t n) { return Algebra{f, n, Tensor3(n), Tensor3(n)}; }

  const Tensor3& tensor(Prod p) const { return p == Prod::Left ? left : right; }
  Tensor3& tensor(Prod p) { return p == Prod::Left ? left : right; }

  // e_i * e_j as a coordinate vector
  Vec basis_product(Prod p, std::size_t i, std::size_t j) const;
  Vec multiply(Prod p, const Vec& x, const Vec& y) const;

  bool same_structure(const Algebra& other) const {
    return field == other.field && dim == other.dim && left == other.left && right == other.right;
  }
};

// Linear map between coordinate spaces; v maps to matrix * v.
struct LinearMap {
  std::size_t source_dim = 0, target_dim = 0;
  Matrix matrix;

  static LinearMap identity(std::size_t n) { return LinearMap{n, n, Matrix::identity(n)}; }
  static LinearMap zero(std::size_t src, std::size_t dst) { return LinearMap{src, dst, Matrix(dst, src)}; }

  Vec apply(const Field& F, const Vec& v) const { return mat_vec(F, matrix, v); }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

LinearMap compose_maps(const Field& F, const LinearMap& outer, const LinearMap& inner);

// The five defining identities, in the order the cocycle constraint families
// reuse: associativity of ⊣, the inner-collapse law x⊣(y⊣z)=x⊣(y⊢z), the
// middle law (x⊢y)⊣z=x⊢(y⊣z), the outer-collapse law (x⊣y)⊢z=(x⊢y)⊢z, and
// associativity of ⊢.
enum class AxiomId { AssocLeft = 0, LeftCollapse = 1, Middle = 2, RightCollapse = 3, AssocRight = 4 };

std::string axiom_name(AxiomId id);
constexpr std::size_t kAxiomCount = 5;

struct AxiomViolation {
  AxiomId id;
  std::size_t i, j, k;  // basis triple (x, y, z) = (e_i, e_j, e_k), 0-based
  Vec lhs, rhs;
};

struct AxiomReport {
  bool ok = true;
  std::vector<AxiomViolation> violations;  // ordered by (triple, identity)
};

AxiomReport check_axioms(const Algebra& L, Exec exec);
AxiomReport check_axioms(const Algebra& L);

// Left/right multiplication operators by a fixed element under each product.
struct MultiplicationOperators {
  Matrix lambda_left;   // x -> a ⊣ x
  Matrix lambda_right;  // x -> a ⊢ x
  Matrix rho_left;      // x -> x ⊣ a
  Matrix rho_right;     // x -> x ⊢ a
};

MultiplicationOperators multiplication_operators(const Algebra& L, const Vec& a);

Subspace full_space(const Algebra& L);

// span{ s ⊣ t, s ⊢ t : s in S, t in T }
Subspace diamond(const Algebra& L, const Subspace& S, const Subspace& T);
Subspace derived(const Algebra& L);
bool is_perfect(const Algebra& L);

// Two-sided annihilator under both products.
Subspace center(const Algebra& L);

bool is_ideal(const Algebra& L, const Subspace& S);

// Quotient by a two-sided ideal, on the deterministic coordinate complement
// basis; the projection is a surjective homomorphism with kernel I.
std::pair<Algebra, LinearMap> quotient(const Algebra& L, const Subspace& I);

Algebra direct_sum(const Algebra& a, const Algebra& b);

bool is_homomorphism(const Field& F, const LinearMap& f, const Algebra& src, const Algebra& dst);

// dim Hom(L, F) where F carries the zero products: functionals vanishing on L'.
std::size_t hom_to_field_dim(const Algebra& L);

// Algebra structure on a multiplicatively closed subspace, plus the inclusion.
std::pair<Algebra, LinearMap> subalgebra(const Algebra& L, const Subspace& S);

}  // namespace dialg
