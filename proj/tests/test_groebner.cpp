#include <doctest.h>

#include "locoh/error.hpp"
#include "locoh/groebner.hpp"
#include "locoh/parse.hpp"
#include "support.hpp"

using namespace locoh;
using namespace testing;

namespace {

std::vector<Poly> polys(const std::string& text, std::size_t m, const ScalarDomain& base = qq()) {
  const CoefficientRing ring{base, m};
  std::vector<Poly> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_coefficient(piece, ring));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> texts(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format(p));
  std::sort(out.begin(), out.end());
  return out;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  const Monomial a = leading_monomial(f, order), b = leading_monomial(g, order);
  std::vector<int> l(a.size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = std::max(a[i], b[i]);
  const Monomial lcm(l);
  const auto& dom = f.domain();
  return f.times_monomial(lcm - a, dom.inv(f.coefficient(a))) - g.times_monomial(lcm - b, dom.inv(g.coefficient(b)));
}

}  // namespace

TEST_CASE("buchberger examples") {
  CHECK(texts(buchberger(polys("X,Y", 2)).basis()) == std::vector<std::string>{"X", "Y"});
  CHECK(texts(buchberger(polys("X^2,X*Y,Y^2,X", 2)).basis()) == std::vector<std::string>{"X", "Y^2"});
  CHECK(buchberger({}).basis().empty());
  const auto grevlex = buchberger(polys("X^2-Y,X*Y-1", 2));
  CHECK(grevlex.contains(polys("X-Y^2", 2)[0]));
  CHECK(grevlex.contains(polys("Y^3-1", 2)[0]));
  CHECK_FALSE(grevlex.is_unit());
  CHECK(texts(buchberger(polys("X^2-Y,X*Y-1", 2), MonomialOrder{OrderKind::Lex}).basis()) ==
        std::vector<std::string>{"X - Y^2", "Y^3 - 1"});
  try {
    buchberger(polys("2*X", 1, zz()));
    FAIL("expected NotAField");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAField);
  }
}

TEST_CASE("unit ideal test") {
  CHECK_FALSE(is_unit_ideal(polys("X,Y", 2)));
  CHECK(is_unit_ideal(polys("X,X-1", 1)));
  CHECK_FALSE(is_unit_ideal(polys("2", 0, zz())));
  CHECK(is_unit_ideal(polys("2,3", 0, zz())));
  CHECK_FALSE(is_unit_ideal({}));
  CHECK(is_unit_ideal(polys("5", 0, qq())));
  CHECK_FALSE(is_unit_ideal(polys("0", 0, gf(5))));
}

TEST_CASE("radical membership examples") {
  CHECK(in_radical(polys("X", 1)[0], polys("X^2", 1)));
  CHECK_FALSE(in_radical(polys("Y", 2)[0], polys("X", 2)));
  CHECK(in_radical(polys("X^2", 2)[0], polys("4*X^4,4*X^3*Y,2*X^2*Y^2,2*X*Y^3,Y^4", 2)));
  CHECK(in_radical(polys("X+Y", 2)[0], polys("X^3,Y^2", 2)));
}

TEST_CASE("cofiniteness examples") {
  CHECK(is_cofinite(polys("X,Y,Z", 3)));
  CHECK(is_cofinite(polys("X^2,X*Y,Y^2", 2)));
  CHECK_FALSE(is_cofinite(polys("X", 2)));
  CHECK_FALSE(is_cofinite({}));
  CHECK(quotient_dimension(polys("X^2,X*Y,Y^2", 2)) == 3u);
  CHECK(quotient_dimension(polys("X,Y,Z", 3)) == 1u);
  CHECK(quotient_dimension(polys("X^2-1,Y^3", 2)) == 6u);
  CHECK_FALSE(quotient_dimension(polys("X*Y", 2)).has_value());
  CHECK(quotient_dimension(polys("1", 2)) == 0u);
}

TEST_CASE("reduced bases are canonical, reduced and closed under S-polynomials") {
  Rng rng(4001);
  for (int trial = 0; trial < 50; ++trial) {
    const ScalarDomain dom = trial % 2 ? qq() : gf(7);
    const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<Poly> gens;
    const int count = uniform(rng, 1, 3);
    for (int g = 0; g < count; ++g) gens.push_back(random_poly(rng, dom, m, 3, uniform(rng, 1, 3), 3));
    const MonomialOrder order{trial % 3 == 0 ? OrderKind::Lex : OrderKind::DegRevLex};
    const auto gb = buchberger(gens, order);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& g : shuffled) g = g.scaled(dom.make(mpq_class(uniform(rng, 1, 6))));
    CHECK(texts(buchberger(shuffled, order).basis()) == texts(gb.basis()));
    const auto& basis = gb.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Monomial lm = leading_monomial(basis[i], order);
      CHECK(basis[i].coefficient(lm) == 1);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        for (const auto& [mono, coef] : basis[j].terms()) CHECK_FALSE(lm.divides(mono));
        CHECK(gb.normal_form(s_polynomial(basis[i], basis[j], order)).is_zero());
      }
    }
    for (const auto& g : gens) CHECK(gb.contains(g));
  }
}

TEST_CASE("membership is closed under multiplication") {
  Rng rng(4002);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2;
    std::vector<Poly> gens{random_poly(rng, gf(5), m, 2, 2), random_poly(rng, gf(5), m, 2, 2)};
    const auto gb = buchberger(gens);
    const Poly f = gens[0] * random_poly(rng, gf(5), m, 2, 2) + gens[1] * random_poly(rng, gf(5), m, 2, 2);
    CHECK(gb.contains(f));
    CHECK(gb.contains(f * random_poly(rng, gf(5), m, 2, 3)));
  }
}

TEST_CASE("radical membership agrees with small powers") {
  Rng rng(4003);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2;
    std::vector<Poly> gens;
    for (int g = 0; g < 2; ++g) gens.push_back(random_poly(rng, qq(), m, 3, uniform(rng, 1, 2), 2));
    const Poly f = random_poly(rng, qq(), m, 1, 2, 2);
    const auto gb = buchberger(gens);
    Poly power = f;
    bool small_power = false;
    for (int k = 1; k <= 4 && !small_power; ++k, power = power * f) small_power = gb.contains(power);
    if (small_power) CHECK(in_radical(f, gens));
  }
}

TEST_CASE("cofiniteness and staircase counts against enumeration") {
  Rng rng(4004);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<std::vector<int>> gens;
    std::vector<Monomial> monos;
    std::vector<Poly> ps;
    const int count = uniform(rng, 1, 4);
    for (int g = 0; g < count; ++g) {
      std::vector<int> e(m);
      for (auto& v : e) v = uniform(rng, 0, 3) * (uniform(rng, 0, 2) == 0 ? 0 : 1);
      gens.push_back(e);
      monos.emplace_back(e);
      ps.push_back(Poly::term(qq(), Monomial(e), 1));
    }
    const int bound = 8;
    const auto small = brute_staircase(gens, m, bound), large = brute_staircase(gens, m, bound + 4);
    const bool finite = small == large;
    CHECK(is_cofinite(ps) == finite);
    CHECK(staircase_count(monos, m).has_value() == finite);
    if (finite) {
      CHECK(*staircase_count(monos, m) == small);
      CHECK(*quotient_dimension(ps) == small);
    }
  }
}

TEST_CASE("module quotient dimension") {
  const CoefficientRing ring{qq(), 1};
  PolyMatrix a(ring, 1, 1);
  a.at(0, 0) = parse_coefficient("X-1", ring);
  CHECK(module_quotient_dimension(a) == 1u);
  PolyMatrix b(ring, 2, 2);
  b.at(0, 0) = parse_coefficient("X^2-1", ring);
  b.at(1, 1) = parse_coefficient("X", ring);
  CHECK(module_quotient_dimension(b) == 3u);
  PolyMatrix c(ring, 2, 1);
  c.at(0, 0) = parse_coefficient("1", ring);
  c.at(1, 0) = parse_coefficient("X", ring);
  CHECK_FALSE(module_quotient_dimension(c).has_value());
  PolyMatrix d(ring, 2, 2);
  d.at(0, 0) = parse_coefficient("1", ring);
  d.at(1, 0) = parse_coefficient("X", ring);
  d.at(1, 1) = parse_coefficient("X^3+1", ring);
  CHECK(module_quotient_dimension(d) == 3u);
  PolyMatrix e(CoefficientRing{qq(), 0}, 2, 1);
  e.at(0, 0) = Poly::constant(qq(), 0, 1);
  CHECK(module_quotient_dimension(e) == 1u);
}
