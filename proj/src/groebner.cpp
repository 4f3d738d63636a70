#include "locoh/groebner.hpp"

#include <algorithm>
#include <set>

#include "locoh/error.hpp"

namespace locoh {

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
  if (kind == OrderKind::Lex) return b < a;
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  // Reverse lex: the last differing exponent decides, smaller wins.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

using Term = std::pair<Monomial, Scalar>;

// Terms sorted descending in the chosen order.
struct OrderedPoly {
  std::vector<Term> terms;

  bool zero() const { return terms.empty(); }
  const Monomial& lead() const { return terms.front().first; }
  const Scalar& lead_coef() const { return terms.front().second; }
};

class Engine {
 public:
  Engine(ScalarDomain domain, std::size_t nvars, MonomialOrder order)
      : dom_(domain), nvars_(nvars), order_(order) {}

  OrderedPoly from(const Poly& p) const {
    OrderedPoly out;
    for (const auto& [m, c] : p.terms()) out.terms.emplace_back(m, c);
    sort_terms(out);
    return out;
  }

  Poly to_poly(const OrderedPoly& p) const {
    Poly out(dom_, nvars_);
    for (const auto& [m, c] : p.terms) out.add_term(m, c);
    return out;
  }

  void sort_terms(OrderedPoly& p) const {
    std::sort(p.terms.begin(), p.terms.end(),
              [this](const Term& a, const Term& b) { return order_.greater(a.first, b.first); });
  }

  void make_monic(OrderedPoly& p) const {
    if (p.zero()) return;
    const Scalar inv = dom_.inv(p.lead_coef());
    for (auto& t : p.terms) t.second = dom_.mul(t.second, inv);
  }

  // a - coef * mono * b, merging two sorted term lists.
  OrderedPoly sub_scaled(const OrderedPoly& a, const Scalar& coef, const Monomial& mono, const OrderedPoly& b) const {
    OrderedPoly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
      if (j == b.terms.size()) {
        out.terms.push_back(a.terms[i++]);
        continue;
      }
      Monomial bm = b.terms[j].first + mono;
      if (i == a.terms.size() || order_.greater(bm, a.terms[i].first)) {
        out.terms.emplace_back(std::move(bm), dom_.neg(dom_.mul(coef, b.terms[j].second)));
        ++j;
      } else if (order_.greater(a.terms[i].first, bm)) {
        out.terms.push_back(a.terms[i++]);
      } else {
        Scalar c = dom_.sub(a.terms[i].second, dom_.mul(coef, b.terms[j].second));
        if (c != 0) out.terms.emplace_back(std::move(bm), std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction of every term; `skip` excludes one basis element.
  OrderedPoly reduce(OrderedPoly p, const std::vector<OrderedPoly>& basis, std::size_t skip = SIZE_MAX) const {
    OrderedPoly rem;
    while (!p.zero()) {
      const Monomial lead = p.lead();
      bool reduced = false;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == skip || basis[k].zero()) continue;
        if (basis[k].lead().divides(lead)) {
          const Scalar coef = dom_.div(p.lead_coef(), basis[k].lead_coef());
          p = sub_scaled(p, coef, lead - basis[k].lead(), basis[k]);
          reduced = true;
          break;
        }
      }
      if (!reduced) {
        rem.terms.push_back(std::move(p.terms.front()));
        p.terms.erase(p.terms.begin());
      }
    }
    return rem;
  }

  Monomial lcm(const Monomial& a, const Monomial& b) const {
    std::vector<int> e(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
  }

  bool coprime(const Monomial& a, const Monomial& b) const {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (a[i] > 0 && b[i] > 0) return false;
    return true;
  }

  OrderedPoly spoly(const OrderedPoly& f, const OrderedPoly& g) const {
    const Monomial l = lcm(f.lead(), g.lead());
    OrderedPoly left;
    const Monomial fm = l - f.lead();
    for (const auto& [m, c] : f.terms) left.terms.emplace_back(m + fm, c);
    return sub_scaled(left, dom_.div(f.lead_coef(), g.lead_coef()), l - g.lead(), g);
  }

  std::vector<OrderedPoly> run(const std::vector<Poly>& gens) const {
    std::vector<OrderedPoly> g;
    for (const auto& p : gens) {
      OrderedPoly q = from(p);
      if (q.zero()) continue;
      make_monic(q);
      g.push_back(std::move(q));
    }
    auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 0; j < g.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

    auto is_constant = [](const OrderedPoly& p) { return p.lead().total_degree() == 0; };
    for (const auto& p : g)
      if (is_constant(p)) return unit();

    while (!pending.empty()) {
      // Normal selection strategy: smallest lcm first.
      auto best = pending.begin();
      Monomial best_lcm = lcm(g[best->first].lead(), g[best->second].lead());
      for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
        Monomial l = lcm(g[it->first].lead(), g[it->second].lead());
        if (order_.greater(best_lcm, l)) {
          best = it;
          best_lcm = std::move(l);
        }
      }
      const auto [i, j] = *best;
      pending.erase(best);
      if (coprime(g[i].lead(), g[j].lead())) continue;
      bool chain = false;
      for (std::size_t k = 0; k < g.size() && !chain; ++k) {
        if (k == i || k == j) continue;
        if (g[k].lead().divides(best_lcm) && !pending.count(key(i, k)) && !pending.count(key(j, k))) chain = true;
      }
      if (chain) continue;
      OrderedPoly h = reduce(spoly(g[i], g[j]), g);
      if (h.zero()) continue;
      make_monic(h);
      if (is_constant(h)) return unit();
      const std::size_t n = g.size();
      g.push_back(std::move(h));
      for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
    }
    return interreduce(std::move(g));
  }

  std::vector<OrderedPoly> interreduce(std::vector<OrderedPoly> g) const {
    // Drop elements whose leading monomial is a multiple of another's.
    std::vector<OrderedPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
        if (i == j) continue;
        if (g[j].lead().divides(g[i].lead()) && (g[j].lead() != g[i].lead() || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(g[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      minimal[i] = reduce(minimal[i], minimal, i);
      make_monic(minimal[i]);
    }
    std::sort(minimal.begin(), minimal.end(),
              [this](const OrderedPoly& a, const OrderedPoly& b) { return order_.greater(b.lead(), a.lead()); });
    return minimal;
  }

  std::vector<OrderedPoly> unit() const {
    OrderedPoly one;
    one.terms.emplace_back(Monomial::one(nvars_), Scalar(1));
    return {one};
  }

 private:
  ScalarDomain dom_;
  std::size_t nvars_;
  MonomialOrder order_;
};

void check_common_ring(const std::vector<Poly>& gens, const ScalarDomain& dom, std::size_t nvars) {
  for (const auto& p : gens) {
    if (!(p.domain() == dom) || p.nvars() != nvars) {
      throw Error(ErrorKind::RingMismatch, "generators from different polynomial rings");
    }
  }
}

}  // namespace

Monomial leading_monomial(const Poly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading monomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (!best || order.greater(m, *best)) best = &m;
  return *best;
}

GroebnerBasis::GroebnerBasis(std::vector<Poly> generators, std::vector<Poly> basis, MonomialOrder order)
    : generators_(std::move(generators)), basis_(std::move(basis)), order_(order) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : basis_) out.push_back(leading_monomial(g, order_));
  return out;
}

Poly GroebnerBasis::normal_form(const Poly& f) const {
  if (basis_.empty()) return f;
  Engine eng(f.domain(), f.nvars(), order_);
  check_common_ring(basis_, f.domain(), f.nvars());
  std::vector<OrderedPoly> g;
  for (const auto& b : basis_) g.push_back(eng.from(b));
  return eng.to_poly(eng.reduce(eng.from(f), g));
}

bool GroebnerBasis::is_unit() const { return basis_.size() == 1 && basis_.front().is_constant(); }

GroebnerBasis buchberger(const std::vector<Poly>& generators, MonomialOrder order) {
  if (generators.empty()) return GroebnerBasis({}, {}, order);
  const ScalarDomain dom = generators.front().domain();
  const std::size_t nvars = generators.front().nvars();
  check_common_ring(generators, dom, nvars);
  if (!dom.is_field()) throw Error(ErrorKind::NotAField, "Groebner bases need field coefficients, got " + dom.name());
  Engine eng(dom, nvars, order);
  std::vector<Poly> basis;
  for (const auto& p : eng.run(generators)) basis.push_back(eng.to_poly(p));
  return GroebnerBasis(generators, std::move(basis), order);
}

bool is_unit_ideal(const std::vector<Poly>& generators) {
  if (generators.empty()) return false;
  const ScalarDomain dom = generators.front().domain();
  if (dom.kind() == DomainKind::Integers) {
    if (generators.front().nvars() != 0) {
      throw Error(ErrorKind::NotAField, "unit-ideal test over ZZ[X] is not supported");
    }
    mpz_class g = 0;
    for (const auto& p : generators) {
      const mpz_class v = p.constant_term().get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return g == 1;
  }
  return buchberger(generators).is_unit();
}

bool in_radical(const Poly& f, const std::vector<Poly>& generators) {
  if (f.is_zero()) return true;
  if (!f.domain().is_field()) throw Error(ErrorKind::NotAField, "radical membership needs field coefficients");
  const std::size_t n = f.nvars();
  std::vector<Poly> extended;
  for (const auto& g : generators) extended.push_back(g.extended(1));
  Poly t = Poly::variable(f.domain(), n + 1, n);
  extended.push_back(Poly::constant(f.domain(), n + 1, 1) - t * f.extended(1));
  return is_unit_ideal(extended);
}

namespace {

bool covers_all_variables(const std::vector<Monomial>& leading, std::size_t nvars) {
  for (const auto& m : leading)
    if (m.total_degree() == 0) return true;
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& m : leading)
      if (m[v] > 0 && m[v] == m.total_degree()) found = true;
    if (!found) return false;
  }
  return true;
}

void count_outside(std::size_t var, std::vector<int>& cur, const std::vector<int>& bound,
                   const std::vector<Monomial>& leading, std::uint64_t& count) {
  if (var == cur.size()) {
    const Monomial m(cur);
    for (const auto& l : leading)
      if (l.divides(m)) return;
    ++count;
    return;
  }
  for (int e = 0; e < bound[var]; ++e) {
    cur[var] = e;
    // Prune: if this prefix is already divisible with zeros after, all extensions are too.
    std::vector<int> probe(cur.begin(), cur.begin() + static_cast<long>(var) + 1);
    probe.resize(cur.size(), 0);
    bool dead = false;
    for (const auto& l : leading)
      if (l.divides(Monomial(probe))) dead = true;
    if (dead) break;
    count_outside(var + 1, cur, bound, leading, count);
  }
  cur[var] = 0;
}

}  // namespace

std::optional<std::uint64_t> staircase_count(const std::vector<Monomial>& leading, std::size_t nvars) {
  if (!covers_all_variables(leading, nvars)) return std::nullopt;
  for (const auto& m : leading)
    if (m.total_degree() == 0) return 0;
  std::vector<int> bound(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    int best = -1;
    for (const auto& m : leading)
      if (m[v] > 0 && m[v] == m.total_degree() && (best < 0 || m[v] < best)) best = m[v];
    bound[v] = best;
  }
  std::uint64_t count = 0;
  std::vector<int> cur(nvars, 0);
  count_outside(0, cur, bound, leading, count);
  return count;
}

bool is_cofinite(const std::vector<Poly>& generators) {
  if (generators.empty()) return false;
  const std::size_t nvars = generators.front().nvars();
  if (nvars == 0) return true;
  return covers_all_variables(buchberger(generators).leading_monomials(), nvars);
}

std::optional<std::uint64_t> quotient_dimension(const std::vector<Poly>& generators) {
  if (generators.empty()) return std::nullopt;
  const auto gb = buchberger(generators);
  return staircase_count(gb.leading_monomials(), generators.front().nvars());
}

std::optional<std::uint64_t> module_quotient_dimension(const PolyMatrix& m) {
  const std::size_t nx = m.ring().x_vars;
  const std::size_t n = m.rows();
  if (n == 0) return 0;
  const ScalarDomain dom = m.ring().base;
  if (!dom.is_field()) throw Error(ErrorKind::NotAField, "module quotient dimension needs field coefficients");
  std::vector<Poly> gens;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Poly g(dom, nx + n);
    for (std::size_t r = 0; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      g += m(r, c).extended(n) * Poly::variable(dom, nx + n, nx + r);
    }
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      gens.push_back(Poly::variable(dom, nx + n, nx + i) * Poly::variable(dom, nx + n, nx + j));
  const auto leading = buchberger(gens).leading_monomials();
  std::uint64_t total = 0;
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<Monomial> x_parts;
    for (const auto& lm : leading) {
      int e_degree = 0;
      for (std::size_t k = 0; k < n; ++k) e_degree += lm[nx + k];
      if (e_degree != 1 || lm[nx + row] != 1) continue;
      x_parts.emplace_back(std::vector<int>(lm.exponents().begin(), lm.exponents().begin() + static_cast<long>(nx)));
    }
    auto part = nx == 0 ? std::optional<std::uint64_t>(x_parts.empty() ? 1 : 0) : staircase_count(x_parts, nx);
    if (!part) return std::nullopt;
    total += *part;
  }
  return total;
}

}  // namespace locoh
