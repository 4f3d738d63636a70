#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace locoh {

/// Every scalar is stored as an exact rational. Prime-field elements are kept
/// as their canonical residue in [0, p); integers as rationals with unit
/// denominator. The owning ScalarDomain decides which values are legal.
using Scalar = mpq_class;

enum class DomainKind { Rationals, PrimeField, Integers };

bool is_prime(std::uint64_t n) noexcept;

class ScalarDomain {
 public:
  static ScalarDomain rationals() noexcept { return ScalarDomain(DomainKind::Rationals, 0); }
  static ScalarDomain integers() noexcept { return ScalarDomain(DomainKind::Integers, 0); }
  /// Throws DomainMismatch unless p is a prime below 2^31.
  static ScalarDomain prime_field(std::uint64_t p);

  DomainKind kind() const noexcept { return kind_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_field() const noexcept { return kind_ != DomainKind::Integers; }

  /// Canonical image of an exact rational in this domain. Fails for a
  /// non-integer in ZZ or a denominator divisible by p in GF(p).
  Scalar make(const mpq_class& q) const;
  Scalar make(long v) const { return make(mpq_class(v)); }

  bool contains(const Scalar& x) const;
  void require(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Field inverse; for ZZ only +-1 are invertible.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  bool is_unit(const Scalar& a) const;

  /// "QQ", "ZZ" or "GF(p)".
  std::string name() const;

  bool operator==(const ScalarDomain&) const = default;

 private:
  ScalarDomain(DomainKind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}

  Scalar reduce(const mpz_class& v) const;

  DomainKind kind_;
  std::uint32_t p_;
};

std::string to_string(const Scalar& x);

}  // namespace locoh
