#include "dialg/field.hpp"

namespace dialg {

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw Error("modulus " + std::to_string(p) + " exceeds 2^31 - 1");
  mpz_class m(p);
  if (p < 2 || mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
    throw Error("modulus " + std::to_string(p) + " is not prime");
  Field f;
  f.spec_ = FieldSpec{FieldKind::PrimeField, p};
  return f;
}

std::string Field::name() const {
  return is_prime() ? "p=" + std::to_string(spec_.p) : "Q";
}

Scalar Field::residue(mpz_class v) const {
  mpz_class p(spec_.p);
  mpz_class r = v % p;
  if (r < 0) r += p;
  return Scalar(r);
}

Scalar Field::from_int(long v) const {
  if (!is_prime()) return Scalar(v);
  return residue(mpz_class(v));
}

Scalar Field::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw Error("zero denominator");
  if (!is_prime()) {
    Scalar s(num, den);
    s.canonicalize();
    return s;
  }
  return mul(residue(num), inv(residue(den)));
}

namespace {
// canonical residues fit a long (p < 2^31), so prime-field arithmetic can
// stay in machine words
inline long res_of(const Scalar& a) { return mpz_get_si(mpq_numref(a.get_mpq_t())); }
}  // namespace

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (!is_prime()) return a + b;
  long s = res_of(a) + res_of(b);
  if (s >= static_cast<long>(spec_.p)) s -= spec_.p;
  return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (!is_prime()) return a - b;
  long s = res_of(a) - res_of(b);
  if (s < 0) s += spec_.p;
  return Scalar(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (!is_prime()) return a * b;
  return Scalar(static_cast<long>(res_of(a) * static_cast<long long>(res_of(b)) % spec_.p));
}

Scalar Field::neg(const Scalar& a) const {
  if (!is_prime()) return -a;
  if (is_zero(a)) return a;
  return Scalar(static_cast<long>(spec_.p) - res_of(a));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error("division by zero");
  if (!is_prime()) return 1 / a;
  mpz_class r, p(spec_.p);
  if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error("element not invertible");  // p prime: only zero fails
  return Scalar(r);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::parse(const std::string& text) const {
  auto slash = text.find('/');
  try {
    mpz_class num(slash == std::string::npos ? text : text.substr(0, slash));
    mpz_class den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
    return from_ratio(num, den);
  } catch (const std::invalid_argument&) {
    throw Error("bad numeric literal '" + text + "'");
  }
}

std::string Field::str(const Scalar& a) const {
  return a.get_str();  // canonical: "n" or "n/d"
}

Scalar Field::sample(std::mt19937_64& rng) const {
  std::uint64_t r = rng();
  if (is_prime()) return residue(mpz_class(static_cast<unsigned long>(r % spec_.p)));
  // small rationals, denominator 1..3
  long num = static_cast<long>(r % 9) - 4;
  long den = static_cast<long>((r >> 32) % 3) + 1;
  return from_ratio(mpz_class(num), mpz_class(den));
}

Scalar Field::sample_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    Scalar s = sample(rng);
    if (!is_zero(s)) return s;
  }
}

}  // namespace dialg
