#include "locoh/poly.hpp"

#include "locoh/error.hpp"

namespace locoh {

Poly Poly::constant(ScalarDomain domain, std::size_t nvars, const Scalar& value) {
  Poly p(domain, nvars);
  p.add_term(Monomial::one(nvars), domain.make(value));
  return p;
}

Poly Poly::variable(ScalarDomain domain, std::size_t nvars, std::size_t var) {
  Poly p(domain, nvars);
  p.add_term(Monomial::unit(nvars, var), domain.make(1));
  return p;
}

Poly Poly::term(ScalarDomain domain, const Monomial& mono, const Scalar& coef) {
  Poly p(domain, mono.size());
  p.add_term(mono, domain.make(coef));
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

Scalar Poly::constant_term() const { return coefficient(Monomial::one(nvars_)); }

Scalar Poly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::total_degree() const noexcept {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.total_degree());
  return deg;
}

std::optional<int> Poly::homogeneous_degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  const int deg = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_)
    if (m.total_degree() != deg) return std::nullopt;
  return deg;
}

Poly& Poly::add_term(const Monomial& mono, const Scalar& coef) {
  if (mono.size() != nvars_) {
    throw Error(ErrorKind::RingMismatch, "monomial with " + std::to_string(mono.size()) + " exponents in a ring with " +
                                             std::to_string(nvars_) + " variables");
  }
  if (!mono.all_nonnegative()) throw Error(ErrorKind::InvalidArgument, "negative exponent in a polynomial");
  domain_.require(coef);
  if (coef == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(mono, coef);
  if (!inserted) {
    it->second = domain_.add(it->second, coef);
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void Poly::check_compatible(const Poly& other) const {
  if (!(domain_ == other.domain_) || nvars_ != other.nvars_) {
    throw Error(ErrorKind::RingMismatch, "polynomials over " + domain_.name() + "[" + std::to_string(nvars_) +
                                             " vars] and " + other.domain_.name() + "[" +
                                             std::to_string(other.nvars_) + " vars]");
  }
}

Poly& Poly::operator+=(const Poly& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, domain_.neg(c));
  return *this;
}

Poly Poly::operator+(const Poly& other) const {
  Poly r(*this);
  r += other;
  return r;
}

Poly Poly::operator-(const Poly& other) const {
  Poly r(*this);
  r -= other;
  return r;
}

Poly Poly::operator-() const {
  Poly r(domain_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, domain_.neg(c));
  return r;
}

Poly Poly::operator*(const Poly& other) const {
  check_compatible(other);
  Poly r(domain_, nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma + mb, domain_.mul(ca, cb));
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(domain_, nvars_);
  for (const auto& [m, x] : terms_) r.add_term(m, domain_.mul(x, c));
  return r;
}

Poly Poly::times_monomial(const Monomial& mono, const Scalar& coef) const {
  Poly r(domain_, nvars_);
  for (const auto& [m, x] : terms_) r.add_term(m + mono, domain_.mul(x, coef));
  return r;
}

Poly Poly::divide_exact(const Poly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  const auto& [lead_m, lead_c] = divisor.leading_lex();
  Poly quotient(domain_, nvars_);
  Poly rest(*this);
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading_lex();
    if (!lead_m.divides(m)) throw Error(ErrorKind::InvalidArgument, "polynomial division is not exact");
    Scalar q;
    if (domain_.kind() == DomainKind::Integers) {
      if (!mpz_divisible_p(c.get_num_mpz_t(), lead_c.get_num_mpz_t())) {
        throw Error(ErrorKind::InvalidArgument, "polynomial division is not exact over ZZ");
      }
      q = Scalar(mpz_class(c.get_num() / lead_c.get_num()));
    } else {
      q = domain_.div(c, lead_c);
    }
    const Monomial shift = m - lead_m;
    quotient.add_term(shift, q);
    rest -= divisor.times_monomial(shift, q);
  }
  return quotient;
}

Poly Poly::extended(std::size_t extra) const {
  Poly r(domain_, nvars_ + extra);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.extended(extra), c);
  return r;
}

Poly Poly::over(const ScalarDomain& target) const {
  Poly r(target, nvars_);
  for (const auto& [m, c] : terms_) r.add_term(m, target.make(c));
  return r;
}

}  // namespace locoh
