#include <doctest.h>

#include "locoh/builtins.hpp"
#include "locoh/cohomology.hpp"
#include "locoh/error.hpp"
#include "locoh/parse.hpp"
#include "support.hpp"

using namespace locoh;
using namespace testing;

namespace {

std::vector<std::uint64_t> values(const HilbertTable& t) {
  std::vector<std::uint64_t> out;
  for (const auto& row : t.rows) out.push_back(row.result ? row.result->value : ~0ull);
  return out;
}

ErrorKind kind_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("top dimension examples") {
  CHECK(top_dimension(builtin_ideal("singh"), 3).value == 1);
  CHECK(top_dimension(builtin_ideal("section3"), 4).value == 16);
  const auto z = top_dimension(parse_ideal("2*U*V", zz(), 0, 2), 4);
  CHECK(z.value == 3);
  CHECK(z.method == TopMethod::SmithForm);
  CHECK(z.invariant_factors == std::vector<mpz_class>{2, 2, 2});
  CHECK(top_dimension(parse_ideal("12*U", zz(), 0, 1), 1).value == 3);
  CHECK(top_dimension(parse_ideal("U*V", qq(), 0, 2), 3).value == 0);
  const auto graded = top_dimension(parse_ideal("X*U+Y^2*V", qq(), 2, 2), 2);
  CHECK(graded.method == TopMethod::Strands);
  CHECK(graded.value == 2);
  CHECK(kind_of([] { top_dimension(builtin_ideal("singh"), 2); }) == ErrorKind::DegreeTooSmall);
  CHECK(kind_of([] { top_dimension(parse_ideal("X*U", qq(), 2, 1), 1); }) == ErrorKind::NotFiniteLength);
  CHECK(kind_of([] { top_dimension(parse_ideal("0*U", zz(), 0, 1), 1); }) == ErrorKind::NotFiniteLength);
  CHECK(kind_of([] { top_dimension(parse_ideal("X*U", zz(), 1, 1), 1); }) == ErrorKind::DomainMismatch);
}

TEST_CASE("infinite length names the content ideal") {
  try {
    top_dimension(parse_ideal("X*U+X*V", qq(), 2, 2), 3);
    FAIL("expected NotFiniteLength");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFiniteLength);
    CHECK(std::string(e.what()).find("content ideal (X)") != std::string::npos);
  }
}

TEST_CASE("ungraded coefficients fall back to module Groebner bases") {
  // Content (X - 1, Y) is cofinite of colength 1 but the entries mix degrees.
  const auto ideal = parse_ideal("X*U^2-U^2+Y*V^2", qq(), 2, 2);
  const auto r2 = top_dimension(ideal, 2);
  CHECK(r2.method == TopMethod::ModuleGroebner);
  CHECK(r2.value == 1);
  const auto r3 = top_dimension(ideal, 3);
  CHECK(r3.method == TopMethod::ModuleGroebner);
  // M = [[X-1, 0, Y, 0], [0, X-1, 0, Y]] up to order: two copies of K[X,Y]/(X-1, Y).
  CHECK(r3.value == 2);
}

TEST_CASE("hilbert tables") {
  const auto singh = hilbert_table(make_query(builtin_ideal("singh"), 3, 6));
  CHECK(values(singh) == std::vector<std::uint64_t>{1, 6, 20, 50});
  const auto sec3 = hilbert_table(make_query(builtin_ideal("section3"), 2, 6));
  CHECK(values(sec3) == std::vector<std::uint64_t>{3, 8, 16, 24, 35});
  const auto f2 = hilbert_table(make_query(builtin_ideal("singh", gf(2)), 4, 4));
  CHECK(f2.rows[0].result->value > 6);
  CHECK(kind_of([] { make_query(builtin_ideal("singh"), 2, 5); }) == ErrorKind::DegreeTooSmall);
  CHECK(kind_of([] { make_query(builtin_ideal("singh"), 5, 4); }) == ErrorKind::InvalidArgument);
  // Rows with infinite length are recorded without aborting the others.
  const auto mixed = hilbert_table(make_query(parse_ideal("X*U", qq(), 2, 1), 1, 3));
  CHECK(mixed.rows.size() == 3);
  for (const auto& row : mixed.rows) {
    CHECK_FALSE(row.result.has_value());
    CHECK(row.error.find("NotFiniteLength") != std::string::npos);
  }
}

TEST_CASE("machine-derived regression values in characteristic 2") {
  // Frozen from the first run of the engine; checked against the dichotomy only.
  const std::vector<std::uint64_t> h2{1, 7, 20, 60, 119, 209};
  CHECK(values(hilbert_table(make_query(builtin_ideal("singh", gf(2)), 3, 8))) == h2);
}

TEST_CASE("vanishing examples") {
  for (int d = 1; d <= 4; ++d) CHECK(vanishes(parse_ideal("U^2", qq(), 0, 1), d).vanishes());
  const auto singh = vanishes(builtin_ideal("singh"), 5);
  CHECK_FALSE(singh.vanishes());
  CHECK_FALSE(singh.content_unit);
  CHECK_FALSE(vanishes(parse_ideal("2*U*V", zz(), 0, 2), 3).vanishes());
  CHECK(vanishes(parse_ideal("2*U*V+3*V^2", zz(), 0, 2), 3).vanishes());
  CHECK(vanishes(parse_ideal("X*U+U+V", qq(), 2, 2), 3).vanishes());
  CHECK_FALSE(vanishes(parse_ideal("X*U+U+Y*V", qq(), 2, 2), 3).vanishes());
}

TEST_CASE("gap-free dichotomy") {
  CHECK(gap_free_check(make_query(builtin_ideal("section3"), 2, 6)) == GapFree::NoneVanish);
  CHECK(gap_free_check(make_query(parse_ideal("U^2, V^2-U*V", qq(), 0, 2), 2, 6)) == GapFree::AllVanish);
  CHECK(gap_free_check(make_query(builtin_ideal("singh"), 3, 6)) == GapFree::NoneVanish);
}

TEST_CASE("top component at d = s") {
  const auto sec3 = top_component_at_s(builtin_ideal("section3"));
  CHECK(sec3.quotient_length == 3u);
  CHECK(sec3.top_value == 3u);
  CHECK(top_component_at_s(builtin_ideal("singh")).top_value == 1u);
  const auto z = top_component_at_s(parse_ideal("3*U", zz(), 0, 1));
  CHECK(z.quotient_length == 1u);
  CHECK(z.top_value == 1u);
  CHECK(top_component_at_s(parse_ideal("U^2", qq(), 0, 1)).top_value == 0u);
  const auto inf = top_component_at_s(parse_ideal("X*U", qq(), 2, 1));
  CHECK_FALSE(inf.quotient_length.has_value());
  CHECK_FALSE(inf.top_value.has_value());
  CHECK(top_component_at_s(parse_ideal("0*U", qq(), 0, 2)).top_value == 1u);
}

TEST_CASE("pi sets") {
  CHECK(pi_set(0).empty());
  CHECK(pi_set(1).empty());
  CHECK(pi_set(2) == std::vector<std::uint64_t>{2});
  CHECK(pi_set(3) == std::vector<std::uint64_t>{3});
  CHECK(pi_set(6) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(kind_of([] { pi_set(-1); }) == ErrorKind::OutOfRange);
  for (long n = 0; n <= 60; ++n) {
    std::vector<std::uint64_t> expected;
    for (long p = 2; p <= 61; ++p)
      if (small_prime(p) && digit_criterion_in_pi(n, p)) expected.push_back(static_cast<std::uint64_t>(p));
    CAPTURE(n);
    CHECK(pi_set(n) == expected);
  }
  // 2 lies in pi(3^k - 1) while 3 does not.
  for (long j : {2L, 8L, 26L}) {
    const auto pi = pi_set(j);
    CHECK(std::find(pi.begin(), pi.end(), 2u) != pi.end());
    CHECK(std::find(pi.begin(), pi.end(), 3u) == pi.end());
  }
}

TEST_CASE("closed forms and the determinant recurrence") {
  CHECK(h0_closed(5) == 20);
  CHECK(h2_closed(8) == 64);
  CHECK(h2_closed(9) == 80);
  CHECK(tridiag_det(3) == 0);
  CHECK(tridiag_det(5) == -8);
  CHECK(tridiag_det(1) == 2);
  CHECK(tridiag_det(2) == 2);
  CHECK(tridiag_det(4) == -4);
  CHECK(kind_of([] { h0_closed(2); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { h2_closed(1); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { tridiag_det(0); }) == ErrorKind::OutOfRange);
  for (long n = 1; n <= 12; ++n) CHECK(tridiag_det(n) == mpz_class(cofactor_det(to_rows(tridiag_matrix(n))).get_num()));
  for (long n = 1; n <= 32; ++n) CHECK((tridiag_det(n) == 0) == (n % 4 == 3));
}

TEST_CASE("closed forms match the engine") {
  const auto singh = hilbert_table(make_query(builtin_ideal("singh"), 3, 8));
  for (const auto& row : singh.rows) CHECK(mpz_class(std::to_string(row.result->value)) == h0_closed(row.d));
  const auto sec3 = hilbert_table(make_query(builtin_ideal("section3"), 2, 12));
  for (const auto& row : sec3.rows) CHECK(mpz_class(std::to_string(row.result->value)) == h2_closed(row.d));
}

TEST_CASE("reverse polynomial fitting") {
  std::vector<FitPoint> h0;
  for (int d = 3; d <= 10; ++d) h0.push_back({d, h0_closed(d)});
  const auto fit = fit_reverse_polynomial(h0, 5);
  REQUIRE(fit.is_polynomial());
  CHECK(fit.polynomial->degree() == 4);
  CHECK(fit.polynomial->coefficients[4] == mpq_class(1, 12));
  for (int d = 3; d <= 30; ++d) CHECK((*fit.polynomial)(mpq_class(-d)) == mpq_class(h0_closed(d)));
  CHECK(fit.polynomial->to_string() == "1/12*r^4 + 1/3*r^3 + 5/12*r^2 + 1/6*r");

  std::vector<FitPoint> h2;
  for (int d = 2; d <= 20; ++d) h2.push_back({d, h2_closed(d)});
  const auto refuted = fit_reverse_polynomial(h2, 6);
  REQUIRE_FALSE(refuted.is_polynomial());
  REQUIRE(refuted.refutation.size() == 2);
  for (const auto& ip : refuted.refutation) {
    CHECK(ip.window.size() == 7);
    for (int d : ip.window) CHECK(ip.polynomial(mpq_class(-d)) == mpq_class(h2_closed(d)));
    CHECK(ip.polynomial(mpq_class(-ip.conflict_d)) == ip.predicted);
    CHECK(ip.predicted != mpq_class(h2_closed(ip.conflict_d)));
    CHECK(ip.conflict_value == h2_closed(ip.conflict_d));
  }
  CHECK(refuted.refutation[0].polynomial.coefficients != refuted.refutation[1].polynomial.coefficients);

  std::vector<FitPoint> seven;
  for (int d = 1; d <= 9; ++d) seven.push_back({d, 7});
  const auto constant = fit_reverse_polynomial(seven, 6);
  REQUIRE(constant.is_polynomial());
  CHECK(constant.polynomial->degree() == 0);
  CHECK(constant.polynomial->to_string() == "7");

  CHECK(kind_of([&] { fit_reverse_polynomial(std::vector<FitPoint>(h0.begin(), h0.begin() + 7), 6); }) ==
        ErrorKind::InsufficientData);
  CHECK(kind_of([] { fit_reverse_polynomial({{1, 1}, {2, 1}, {4, 1}}, 1); }) == ErrorKind::InsufficientData);
}

TEST_CASE("fitting a polynomial table recovers it exactly") {
  Rng rng(6001);
  for (int trial = 0; trial < 30; ++trial) {
    const int degree = uniform(rng, 0, 5);
    std::vector<mpq_class> coefs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coefs) c = mpq_class(uniform(rng, -20, 20));
    const RationalPolynomial truth{coefs};
    std::vector<FitPoint> points;
    for (int d = 1; d <= 12; ++d) points.push_back({d, mpz_class(truth(mpq_class(-d)).get_num())});
    const auto fit = fit_reverse_polynomial(points, 6);
    REQUIRE(fit.is_polynomial());
    for (int d = 1; d <= 12; ++d) CHECK((*fit.polynomial)(mpq_class(-d)) == truth(mpq_class(-d)));
  }
}

TEST_CASE("characteristic comparison") {
  const auto two = char_comparison(2, 3, 4);
  CHECK(two[0].equal);
  CHECK_FALSE(two[0].p_in_pi);
  CHECK_FALSE(two[1].equal);
  CHECK(two[1].p_in_pi);
  const auto five = char_comparison(5, 6, 6);
  CHECK(five[0].equal);
  CHECK_FALSE(five[0].p_in_pi);
  CHECK(kind_of([] { char_comparison(4, 3, 4); }) == ErrorKind::DomainMismatch);
  CHECK(kind_of([] { char_comparison(2, 2, 4); }) == ErrorKind::DegreeTooSmall);
}

TEST_CASE("content plus the irrelevant ideal") {
  CHECK(minimal_primes_report(builtin_ideal("singh")).generators ==
        std::vector<std::string>{"X", "Y", "Z", "U", "V", "W"});
  auto sec3 = minimal_primes_report(builtin_ideal("section3")).generators;
  std::sort(sec3.begin(), sec3.end() - 2);
  CHECK(sec3 == std::vector<std::string>{"X*Y", "X^2", "Y^2", "U", "V"});
  CHECK(minimal_primes_report(parse_ideal("U^2", qq(), 0, 1)).whole_ring);
  CHECK(minimal_primes_report(parse_ideal("6*U", zz(), 0, 1)).generators == std::vector<std::string>{"6", "U"});
}

TEST_CASE("prime factor counts") {
  CHECK(prime_factor_count(1) == 0);
  CHECK(prime_factor_count(8) == 3);
  CHECK(prime_factor_count(-12) == 3);
  CHECK(prime_factor_count(97) == 1);
  CHECK_THROWS(prime_factor_count(0));
}
