#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace dialg {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure in one of the text formats; `line` is 1-based.
struct ParseError : Error {
  ParseError(std::size_t line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
  std::size_t line;
};

// One exact field element. Rationals are arbitrary-precision and always kept
// canonical (lowest terms, positive denominator). Prime-field elements are
// stored as the canonical residue 0 <= r < p with denominator 1. All
// arithmetic goes through Field, which knows which interpretation applies.
using Scalar = mpq_class;

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;  // modulus, meaningful iff kind == PrimeField
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Field {
 public:
  Field() = default;  // rationals

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);  // throws unless p is prime

  const FieldSpec& spec() const { return spec_; }
  bool is_prime() const { return spec_.kind == FieldKind::PrimeField; }
  std::uint32_t modulus() const { return spec_.p; }
  std::string name() const;  // "Q" or "p=<modulus>"

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const;
  // num/den as an element of the field; for F_p this is num * den^-1 mod p.
  Scalar from_ratio(const mpz_class& num, const mpz_class& den) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws on zero
  Scalar div(const Scalar& a, const Scalar& b) const;

  bool is_zero(const Scalar& a) const { return mpq_sgn(a.get_mpq_t()) == 0; }
  bool eq(const Scalar& a, const Scalar& b) const { return mpq_equal(a.get_mpq_t(), b.get_mpq_t()) != 0; }

  // "n" or "n/d"; accepts any integers, reduces into the field.
  Scalar parse(const std::string& text) const;
  std::string str(const Scalar& a) const;

  // Small deterministic sample: uniform residue over F_p, small num/den over Q.
  // Consumes a fixed number of rng draws so streams stay reproducible.
  Scalar sample(std::mt19937_64& rng) const;
  Scalar sample_nonzero(std::mt19937_64& rng) const;

  friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }

 private:
  FieldSpec spec_{};

  Scalar residue(mpz_class v) const;  // reduce into [0, p)
};

}  // namespace dialg
