#include "locoh/nested_poly.hpp"

#include <algorithm>

#include "locoh/error.hpp"

namespace locoh {

NestedPolynomial NestedPolynomial::constant(CoefficientRing ring, std::size_t u_vars, const Poly& coef) {
  NestedPolynomial f(ring, u_vars);
  f.add_term(Monomial::one(u_vars), coef);
  return f;
}

NestedPolynomial NestedPolynomial::u_variable(CoefficientRing ring, std::size_t u_vars, std::size_t var) {
  NestedPolynomial f(ring, u_vars);
  f.add_term(Monomial::unit(u_vars, var), ring.one());
  return f;
}

NestedPolynomial& NestedPolynomial::add_term(const Monomial& u_mono, const Poly& coef) {
  if (u_mono.size() != u_vars_ || !u_mono.all_nonnegative()) {
    throw Error(ErrorKind::RingMismatch, "U-monomial does not fit a ring with " + std::to_string(u_vars_) + " U-variables");
  }
  if (!(coef.domain() == ring_.base) || coef.nvars() != ring_.x_vars) {
    throw Error(ErrorKind::RingMismatch, "coefficient outside the declared R_0");
  }
  if (coef.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(u_mono, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

void NestedPolynomial::check_compatible(const NestedPolynomial& other) const {
  if (!(ring_ == other.ring_) || u_vars_ != other.u_vars_) {
    throw Error(ErrorKind::RingMismatch, "nested polynomials from different rings");
  }
}

NestedPolynomial NestedPolynomial::operator+(const NestedPolynomial& other) const {
  check_compatible(other);
  NestedPolynomial r(*this);
  for (const auto& [m, c] : other.terms_) r.add_term(m, c);
  return r;
}

NestedPolynomial NestedPolynomial::operator-(const NestedPolynomial& other) const { return *this + (-other); }

NestedPolynomial NestedPolynomial::operator-() const {
  NestedPolynomial r(ring_, u_vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

NestedPolynomial NestedPolynomial::operator*(const NestedPolynomial& other) const {
  check_compatible(other);
  NestedPolynomial r(ring_, u_vars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma + mb, ca * cb);
  return r;
}

NestedPolynomial NestedPolynomial::scaled(const Scalar& c) const {
  NestedPolynomial r(ring_, u_vars_);
  for (const auto& [m, x] : terms_) r.add_term(m, x.scaled(c));
  return r;
}

std::optional<int> NestedPolynomial::u_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int deg = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_) {
    if (m.total_degree() != deg) {
      throw Error(ErrorKind::NotHomogeneous, "U-degrees " + std::to_string(deg) + " and " +
                                                 std::to_string(m.total_degree()) + " in one polynomial");
    }
  }
  return deg;
}

std::vector<Poly> NestedPolynomial::content() const {
  std::vector<Poly> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (std::find(out.begin(), out.end(), it->second) == out.end()) out.push_back(it->second);
  }
  return out;
}

GradedIdeal::GradedIdeal(CoefficientRing ring, std::size_t u_vars, std::vector<NestedPolynomial> generators)
    : ring_(ring), u_vars_(u_vars), generators_(std::move(generators)) {
  if (u_vars_ == 0) throw Error(ErrorKind::InvalidArgument, "need at least one U-variable");
  for (const auto& g : generators_) {
    if (!(g.ring() == ring_) || g.u_vars() != u_vars_) {
      throw Error(ErrorKind::RingMismatch, "generator from a different ring");
    }
    (void)g.u_degree();
  }
}

GradedIdeal GradedIdeal::over(const ScalarDomain& base) const {
  CoefficientRing ring{base, ring_.x_vars};
  std::vector<NestedPolynomial> gens;
  for (const auto& g : generators_) {
    NestedPolynomial h(ring, u_vars_);
    for (const auto& [m, c] : g.terms()) h.add_term(m, c.over(base));
    gens.push_back(std::move(h));
  }
  return GradedIdeal(ring, u_vars_, std::move(gens));
}

std::vector<Poly> content_ideal(const GradedIdeal& ideal) {
  std::vector<Poly> out;
  for (const auto& g : ideal.generators())
    for (auto& c : g.content())
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  return out;
}

}  // namespace locoh
