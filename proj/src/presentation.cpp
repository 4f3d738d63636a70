#include "locoh/presentation.hpp"

#include <algorithm>

#include "locoh/error.hpp"

namespace locoh {

InverseBasis::InverseBasis(std::size_t s, int d, std::vector<Monomial> elements)
    : s_(s), d_(d), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<std::size_t> InverseBasis::index_of(const Monomial& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Compositions of `left` into the remaining positive parts.
void compositions(std::size_t var, std::size_t s, int left, std::vector<int>& cur, std::vector<Monomial>& out) {
  if (var + 1 == s) {
    cur[var] = left;
    out.emplace_back(cur);
    return;
  }
  for (int part = 1; part <= left - static_cast<int>(s - var - 1); ++part) {
    cur[var] = part;
    compositions(var + 1, s, left - part, cur, out);
  }
}

}  // namespace

InverseBasis inverse_basis(std::size_t s, int d) {
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "need at least one U-variable");
  if (d < static_cast<int>(s)) {
    throw Error(ErrorKind::DegreeTooSmall, "component is zero above end -s (d=" + std::to_string(d) +
                                               " < s=" + std::to_string(s) + ")");
  }
  std::vector<Monomial> positive;
  std::vector<int> cur(s, 0);
  compositions(0, s, d, cur, positive);
  std::sort(positive.begin(), positive.end(), [](const Monomial& a, const Monomial& b) { return lex_less(a, b); });
  std::vector<Monomial> elements;
  elements.reserve(positive.size());
  for (const auto& m : positive) elements.push_back(-m);
  return InverseBasis(s, d, std::move(elements));
}

std::map<Monomial, Poly> inverse_action(const NestedPolynomial& f, const Monomial& lambda) {
  if (lambda.size() != f.u_vars()) {
    throw Error(ErrorKind::LengthMismatch, "inverse monomial has the wrong number of entries");
  }
  if (!lambda.all_negative()) throw Error(ErrorKind::InvalidArgument, "inverse monomials need negative exponents");
  (void)f.u_degree();
  std::map<Monomial, Poly> out;
  for (const auto& [mu, coef] : f.terms()) {
    Monomial target = lambda + mu;
    if (!target.all_negative()) continue;
    auto [it, inserted] = out.try_emplace(target, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

PresentationMatrix presentation_matrix(const GradedIdeal& ideal, int d) {
  const std::size_t s = ideal.u_vars();
  InverseBasis rows = inverse_basis(s, d);
  std::vector<ColumnBlock> blocks;
  std::size_t total_cols = 0;
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    auto delta = ideal.generators()[i].u_degree();
    if (!delta) continue;
    blocks.push_back(ColumnBlock{i, *delta, inverse_basis(s, d + *delta)});
    total_cols += blocks.back().basis.size();
  }
  PolyMatrix entries(ideal.ring(), rows.size(), total_cols);
  std::size_t col = 0;
  for (const auto& block : blocks) {
    const auto& f = ideal.generators()[block.generator];
    for (const auto& lambda : block.basis.elements()) {
      for (const auto& [rho, coef] : inverse_action(f, lambda)) {
        auto r = rows.index_of(rho);
        // Degrees match by construction, so every surviving target is a row.
        if (!r) throw Error(ErrorKind::TheoremViolation, "inverse action left the degree -d component");
        entries.at(*r, col) = coef;
      }
      ++col;
    }
  }
  return PresentationMatrix{s, d, std::move(rows), std::move(blocks), std::move(entries)};
}

namespace {

bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_subset(std::size_t k) {
  std::vector<std::size_t> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = i;
  return v;
}

}  // namespace

std::vector<Poly> minors_ideal(const PolyMatrix& m, std::size_t t) {
  if (t == 0 || t > std::min(m.rows(), m.cols())) {
    throw Error(ErrorKind::SizeTooLarge, std::to_string(t) + "x" + std::to_string(t) + " minors of a " +
                                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  const long double count = static_cast<long double>(binomial(static_cast<long>(m.rows()), static_cast<long>(t))) *
                            static_cast<long double>(binomial(static_cast<long>(m.cols()), static_cast<long>(t)));
  if (count > static_cast<long double>(kMaxMinorCount)) {
    throw Error(ErrorKind::TooManyMinors, "would enumerate more than " + std::to_string(kMaxMinorCount) + " minors");
  }
  std::vector<Poly> out;
  auto rows = first_subset(t);
  do {
    auto cols = first_subset(t);
    do {
      Poly minor = determinant(m.select(rows, cols));
      if (!minor.is_zero() && std::find(out.begin(), out.end(), minor) == out.end()) out.push_back(std::move(minor));
    } while (next_subset(cols, m.cols()));
  } while (next_subset(rows, m.rows()));
  return out;
}

}  // namespace locoh
