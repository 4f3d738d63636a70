#include "locoh/scalar.hpp"

#include "locoh/error.hpp"

namespace locoh {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

ScalarDomain ScalarDomain::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorKind::DomainMismatch, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return ScalarDomain(DomainKind::PrimeField, static_cast<std::uint32_t>(p));
}

Scalar ScalarDomain::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return Scalar(r);
}

Scalar ScalarDomain::make(const mpq_class& raw) const {
  mpq_class q = raw;
  q.canonicalize();
  switch (kind_) {
    case DomainKind::Rationals:
      return q;
    case DomainKind::Integers:
      if (q.get_den() != 1) {
        throw Error(ErrorKind::DomainMismatch, "value " + q.get_str() + " is not an integer");
      }
      return q;
    case DomainKind::PrimeField: {
      mpz_class den = q.get_den();
      mpz_class modulus(p_);
      mpz_class den_inv;
      if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw Error(ErrorKind::DomainMismatch,
                    "denominator of " + q.get_str() + " vanishes in GF(" + std::to_string(p_) + ")");
      }
      return reduce(mpz_class(q.get_num() * den_inv));
    }
  }
  return q;
}

bool ScalarDomain::contains(const Scalar& x) const {
  switch (kind_) {
    case DomainKind::Rationals:
      return true;
    case DomainKind::Integers:
      return x.get_den() == 1;
    case DomainKind::PrimeField:
      return x.get_den() == 1 && x.get_num() >= 0 && x.get_num() < p_;
  }
  return false;
}

void ScalarDomain::require(const Scalar& x) const {
  if (!contains(x)) {
    throw Error(ErrorKind::DomainMismatch, "value " + x.get_str() + " does not belong to " + name());
  }
}

Scalar ScalarDomain::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == DomainKind::PrimeField) return reduce(mpz_class(a.get_num() + b.get_num()));
  return Scalar(a + b);
}

Scalar ScalarDomain::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == DomainKind::PrimeField) return reduce(mpz_class(a.get_num() - b.get_num()));
  return Scalar(a - b);
}

Scalar ScalarDomain::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == DomainKind::PrimeField) return reduce(mpz_class(a.get_num() * b.get_num()));
  return Scalar(a * b);
}

Scalar ScalarDomain::neg(const Scalar& a) const {
  if (kind_ == DomainKind::PrimeField) return reduce(mpz_class(-a.get_num()));
  return Scalar(-a);
}

Scalar ScalarDomain::inv(const Scalar& a) const {
  if (a == 0) throw Error(ErrorKind::DomainMismatch, "division by zero in " + name());
  switch (kind_) {
    case DomainKind::Rationals:
      return Scalar(1 / a);
    case DomainKind::Integers:
      if (a != 1 && a != -1) throw Error(ErrorKind::NotAField, a.get_str() + " is not a unit in ZZ");
      return a;
    case DomainKind::PrimeField: {
      mpz_class r;
      mpz_class modulus(p_);
      mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), modulus.get_mpz_t());
      return Scalar(r);
    }
  }
  return a;
}

bool ScalarDomain::is_unit(const Scalar& a) const {
  if (kind_ == DomainKind::Integers) return a == 1 || a == -1;
  return a != 0;
}

std::string ScalarDomain::name() const {
  switch (kind_) {
    case DomainKind::Rationals: return "QQ";
    case DomainKind::Integers: return "ZZ";
    case DomainKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
  }
  return "?";
}

std::string to_string(const Scalar& x) { return x.get_str(); }

}  // namespace locoh
