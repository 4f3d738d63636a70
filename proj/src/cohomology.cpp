#include "locoh/cohomology.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "locoh/builtins.hpp"
#include "locoh/groebner.hpp"
#include "locoh/linalg.hpp"
#include "locoh/parse.hpp"
#include "locoh/presentation.hpp"

namespace locoh {

CohomologyQuery make_query(GradedIdeal ideal, int d_min, int d_max, StrandOptions strand) {
  const int s = static_cast<int>(ideal.u_vars());
  if (d_min < s) {
    throw Error(ErrorKind::DegreeTooSmall, "component is zero above end -s (d=" + std::to_string(d_min) +
                                               " < s=" + std::to_string(s) + ")");
  }
  if (d_max < d_min) {
    throw Error(ErrorKind::InvalidArgument, "empty degree range " + std::to_string(d_min) + ".." + std::to_string(d_max));
  }
  return CohomologyQuery{std::move(ideal), d_min, d_max, strand};
}

StrandOptions strand_options_from_env() {
  StrandOptions options;
  if (const char* raw = std::getenv("LOCOH_MAX_DEGREE"); raw && *raw) {
    const std::string_view text(raw);
    int value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value < 0) {
      throw Error(ErrorKind::InvalidArgument, "LOCOH_MAX_DEGREE must be a non-negative integer, got '" +
                                                  std::string(text) + "'");
    }
    options.ceiling = value;
  }
  return options;
}

std::string to_string(TopMethod method) {
  switch (method) {
    case TopMethod::FieldRank: return "field-rank";
    case TopMethod::SmithForm: return "smith-form";
    case TopMethod::Strands: return "strands";
    case TopMethod::ModuleGroebner: return "module-groebner";
  }
  return "?";
}

std::string to_string(GapFree verdict) { return verdict == GapFree::AllVanish ? "AllVanish" : "NoneVanish"; }

namespace {

std::string ring_name(const CoefficientRing& ring) {
  std::string out = ring.base.name();
  if (ring.x_vars == 0) return out;
  out += "[";
  for (std::size_t i = 0; i < ring.x_vars; ++i) {
    out += (i ? "," : "") + format(Poly::variable(ring.base, ring.x_vars, i));
  }
  return out + "]";
}

std::string ideal_text(const std::vector<Poly>& gens) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + format(gens[i]);
  return out + (gens.empty() ? "0)" : ")");
}

[[noreturn]] void infinite_length(const CoefficientRing& ring, const std::vector<Poly>& content, int d) {
  throw Error(ErrorKind::NotFiniteLength, "content ideal " + ideal_text(content) + " has infinite colength in " +
                                              ring_name(ring) + ", so the component at d=" + std::to_string(d) +
                                              " has infinite length");
}

void require_supported(const CoefficientRing& ring) {
  if (ring.x_vars > 0 && !ring.base.is_field()) {
    throw Error(ErrorKind::DomainMismatch, "coefficient ring " + ring_name(ring) + " is not supported");
  }
}

bool all_units(const std::vector<mpz_class>& factors) {
  return std::all_of(factors.begin(), factors.end(), [](const mpz_class& f) { return f == 1; });
}

mpz_class integer_gcd(const std::vector<Poly>& content) {
  mpz_class g = 0;
  for (const auto& c : content) {
    const mpq_class v = c.constant_term();
    g = gcd(g, mpz_class(v.get_num()));
  }
  return g;
}

}  // namespace

std::uint64_t prime_factor_count(const mpz_class& n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "prime factor count of 0");
  mpz_class rest = abs(n);
  std::uint64_t count = 0;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    while (rest % p == 0) {
      rest /= p;
      ++count;
    }
  }
  return count + (rest > 1 ? 1 : 0);
}

TopResult top_dimension(const GradedIdeal& ideal, int d, const StrandOptions& options) {
  const CoefficientRing& ring = ideal.ring();
  require_supported(ring);
  const PresentationMatrix pm = presentation_matrix(ideal, d);
  TopResult out;
  out.d = d;
  out.rows = pm.row_basis.size();
  if (ring.x_vars == 0) {
    const ExactMatrix m = pm.entries.to_constant();
    if (ring.base.is_field()) {
      out.method = TopMethod::FieldRank;
      out.rank = rank(m);
      out.value = out.rows - out.rank;
      return out;
    }
    out.method = TopMethod::SmithForm;
    out.invariant_factors = smith_normal_form(m);
    for (const auto& f : out.invariant_factors) {
      if (f == 0) infinite_length(ring, content_ideal(ideal), d);
      out.value += prime_factor_count(f);
    }
    return out;
  }
  const auto content = content_ideal(ideal);
  if (!is_cofinite(content)) infinite_length(ring, content, d);
  if (auto graded = infer_grading(pm.entries)) {
    out.method = TopMethod::Strands;
    out.strands = coker_dimension(*graded, options);
    out.value = out.strands->total;
    return out;
  }
  out.method = TopMethod::ModuleGroebner;
  const auto dim = module_quotient_dimension(pm.entries);
  if (!dim) infinite_length(ring, content, d);
  out.value = *dim;
  return out;
}

HilbertTable hilbert_table(const CohomologyQuery& q) {
  HilbertTable table{q, {}};
  for (int d = q.d_min; d <= q.d_max; ++d) {
    HilbertRow row;
    row.d = d;
    try {
      row.result = top_dimension(q.ideal, d, q.strand);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFiniteLength) throw;
      row.error = e.what();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

VanishingReport vanishes(const GradedIdeal& ideal, int d) {
  const CoefficientRing& ring = ideal.ring();
  require_supported(ring);
  const PresentationMatrix pm = presentation_matrix(ideal, d);
  VanishingReport report;
  report.d = d;
  if (ring.x_vars == 0) {
    const ExactMatrix m = pm.entries.to_constant();
    report.cokernel_zero = ring.base.is_field() ? rank(m) == m.rows() : all_units(smith_normal_form(m));
  } else if (auto graded = infer_grading(pm.entries)) {
    report.cokernel_zero = coker_is_zero(*graded);
  } else {
    report.cokernel_zero = module_quotient_dimension(pm.entries) == std::optional<std::uint64_t>(0);
  }
  report.content_unit = is_unit_ideal(content_ideal(ideal));
  if (report.cokernel_zero != report.content_unit) {
    throw Error(ErrorKind::RouteDisagreement,
                "at d=" + std::to_string(d) + " the cokernel is " + (report.cokernel_zero ? "zero" : "nonzero") +
                    " but the content ideal is " + (report.content_unit ? "the unit ideal" : "proper"));
  }
  return report;
}

GapFree gap_free_check(const CohomologyQuery& q) {
  std::vector<int> zero, nonzero;
  for (int d = q.d_min; d <= q.d_max; ++d) (vanishes(q.ideal, d).vanishes() ? zero : nonzero).push_back(d);
  if (!zero.empty() && !nonzero.empty()) {
    throw Error(ErrorKind::TheoremViolation, "component vanishes at d=" + std::to_string(zero.front()) +
                                                 " but not at d=" + std::to_string(nonzero.front()));
  }
  return nonzero.empty() ? GapFree::AllVanish : GapFree::NoneVanish;
}

std::optional<std::uint64_t> content_colength(const GradedIdeal& ideal) {
  const CoefficientRing& ring = ideal.ring();
  require_supported(ring);
  const auto content = content_ideal(ideal);
  if (ring.x_vars > 0) return quotient_dimension(content);
  if (ring.base.is_field()) return content.empty() ? 1 : 0;
  if (const mpz_class g = integer_gcd(content); g != 0) return prime_factor_count(g);
  return std::nullopt;
}

TopComponent top_component_at_s(const GradedIdeal& ideal, const StrandOptions& options) {
  const CoefficientRing& ring = ideal.ring();
  require_supported(ring);
  TopComponent out;
  out.content = content_ideal(ideal);
  out.quotient_length = content_colength(ideal);
  try {
    out.top_value = top_dimension(ideal, static_cast<int>(ideal.u_vars()), options).value;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotFiniteLength) throw;
  }
  if (out.top_value != out.quotient_length) {
    auto show = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string("infinite"); };
    throw Error(ErrorKind::TheoremViolation, "component at d=s has length " + show(out.top_value) +
                                                 " but R_0/content has length " + show(out.quotient_length));
  }
  return out;
}

std::vector<std::uint64_t> pi_set(long n) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "pi_set needs n >= 0, got " + std::to_string(n));
  std::vector<std::uint64_t> out;
  for (long p = 2; p <= n; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    for (long i = 1; i <= n; ++i) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
      if (c % p == 0) {
        out.push_back(static_cast<std::uint64_t>(p));
        break;
      }
    }
  }
  return out;
}

mpz_class h0_closed(long d) {
  if (d < 3) throw Error(ErrorKind::OutOfRange, "h0 closed form needs d >= 3, got " + std::to_string(d));
  const mpz_class D = d;
  return D * (D - 1) * (D - 1) * (D - 2) / 12;
}

mpz_class h2_closed(long d) {
  if (d < 2) throw Error(ErrorKind::OutOfRange, "h2 closed form needs d >= 2, got " + std::to_string(d));
  const mpz_class D = d;
  return d % 4 == 0 ? mpz_class(D * D) : mpz_class(D * D - 1);
}

mpz_class tridiag_det(long n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "tridiagonal determinant needs n >= 1, got " + std::to_string(n));
  mpz_class prev = 2, cur = 2;
  for (long k = 3; k <= n; ++k) {
    mpz_class next = 2 * cur - 2 * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ExactMatrix tridiag_matrix(long n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "tridiagonal matrix needs n >= 1, got " + std::to_string(n));
  const auto N = static_cast<std::size_t>(n);
  ExactMatrix m(ScalarDomain::integers(), N, N);
  for (std::size_t i = 0; i < N; ++i) {
    m.set(i, i, 2);
    if (i + 1 < N) {
      m.set(i + 1, i, 2);
      m.set(i, i + 1, 1);
    }
  }
  return m;
}

int RationalPolynomial::degree() const {
  for (std::size_t i = coefficients.size(); i-- > 0;)
    if (coefficients[i] != 0) return static_cast<int>(i);
  return -1;
}

mpq_class RationalPolynomial::operator()(const mpq_class& r) const {
  mpq_class acc = 0;
  for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * r + coefficients[i];
  return acc;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    mpq_class c = coefficients[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    const bool show_coef = i == 0 || c != 1;
    if (show_coef) out += c.get_str();
    if (i > 0) {
      out += (show_coef ? "*" : "") + var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

// Newton divided differences through (x_i, y_i), expanded to coefficients.
RationalPolynomial interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  const std::size_t n = xs.size();
  std::vector<mpq_class> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  std::vector<mpq_class> poly{dd[n - 1]};
  for (std::size_t j = n - 1; j-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * xs[j];
    }
    next[0] += dd[j];
    poly = std::move(next);
  }
  RationalPolynomial out{std::move(poly)};
  out.coefficients.resize(static_cast<std::size_t>(std::max(out.degree() + 1, 1)));
  return out;
}

// Interpolant through points[first .. first + count), in r = -d.
Interpolant interpolant(const std::vector<FitPoint>& points, std::size_t first, std::size_t count) {
  std::vector<mpq_class> xs, ys;
  Interpolant out;
  for (std::size_t i = first; i < first + count; ++i) {
    xs.emplace_back(-points[i].d);
    ys.emplace_back(points[i].value);
    out.window.push_back(points[i].d);
  }
  out.polynomial = interpolate(xs, ys);
  out.conflict_d = 0;
  return out;
}

// Largest d whose tabulated value the interpolant misses.
bool find_conflict(const std::vector<FitPoint>& points, Interpolant& ip) {
  for (std::size_t i = points.size(); i-- > 0;) {
    const mpq_class predicted = ip.polynomial(mpq_class(-points[i].d));
    if (predicted != mpq_class(points[i].value)) {
      ip.conflict_d = points[i].d;
      ip.conflict_value = points[i].value;
      ip.predicted = predicted;
      return true;
    }
  }
  return false;
}

}  // namespace

FitResult fit_reverse_polynomial(std::vector<FitPoint> points, int window) {
  if (window < 0) throw Error(ErrorKind::InvalidArgument, "window must be non-negative");
  std::sort(points.begin(), points.end(), [](const FitPoint& a, const FitPoint& b) { return a.d < b.d; });
  const auto need = static_cast<std::size_t>(window) + 2;
  if (points.size() < need) {
    throw Error(ErrorKind::InsufficientData, "window " + std::to_string(window) + " needs " + std::to_string(need) +
                                                 " rows, got " + std::to_string(points.size()));
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].d != points[i - 1].d + 1) {
      throw Error(ErrorKind::InsufficientData, "rows are not consecutive at d=" + std::to_string(points[i].d));
    }
  }
  const std::size_t span = static_cast<std::size_t>(window) + 1;
  Interpolant tail = interpolant(points, points.size() - span, span);
  FitResult result;
  if (!find_conflict(points, tail)) {
    result.polynomial = tail.polynomial;
    return result;
  }
  const std::size_t at = static_cast<std::size_t>(tail.conflict_d - points.front().d);
  Interpolant other = interpolant(points, at, span);
  if (!find_conflict(points, other)) {
    throw Error(ErrorKind::TheoremViolation, "second interpolant unexpectedly fits every row");
  }
  result.refutation = {std::move(tail), std::move(other)};
  return result;
}

FitResult fit_reverse_polynomial(const HilbertTable& table, int window) {
  std::vector<FitPoint> points;
  for (const auto& row : table.rows) {
    if (!row.result) throw Error(ErrorKind::InsufficientData, "row d=" + std::to_string(row.d) + " has no finite value");
    points.push_back({row.d, mpz_class(std::to_string(row.result->value))});
  }
  return fit_reverse_polynomial(std::move(points), window);
}

std::vector<CharComparisonRow> char_comparison(std::uint64_t p, int d_min, int d_max, const StrandOptions& options) {
  const ScalarDomain field = ScalarDomain::prime_field(p);
  if (d_min < 3) {
    throw Error(ErrorKind::DegreeTooSmall, "characteristic comparison needs d >= 3, got " + std::to_string(d_min));
  }
  const GradedIdeal zero = builtin_ideal("singh");
  const GradedIdeal modp = zero.over(field);
  std::vector<CharComparisonRow> rows;
  for (int d = d_min; d <= d_max; ++d) {
    CharComparisonRow row{d, top_dimension(zero, d, options).value, top_dimension(modp, d, options).value, false, false};
    row.equal = row.h0 == row.hp;
    const auto pi = pi_set(d - 2);
    row.p_in_pi = std::find(pi.begin(), pi.end(), p) != pi.end();
    if (row.h0 > row.hp || row.equal == row.p_in_pi) {
      throw Error(ErrorKind::TheoremViolation, "at d=" + std::to_string(d) + ": h_0=" + std::to_string(row.h0) +
                                                   ", h_" + std::to_string(p) + "=" + std::to_string(row.hp) + ", " +
                                                   std::to_string(p) + (row.p_in_pi ? " in " : " not in ") +
                                                   "pi(" + std::to_string(d - 2) + ")");
    }
    rows.push_back(row);
  }
  return rows;
}

MinimalPrimesReport minimal_primes_report(const GradedIdeal& ideal) {
  const CoefficientRing& ring = ideal.ring();
  const auto content = content_ideal(ideal);
  MinimalPrimesReport report;
  if (is_unit_ideal(content)) {
    report.whole_ring = true;
    return report;
  }
  const std::size_t s = ideal.u_vars();
  auto show = [&](const Poly& p) { return format(NestedPolynomial::constant(ring, s, p)); };
  if (ring.base.is_field()) {
    for (const auto& c : content) report.generators.push_back(show(c.scaled(ring.base.inv(c.leading_lex().second))));
  } else if (const mpz_class g = integer_gcd(content); g != 0) {
    report.generators.push_back(show(Poly::constant(ring.base, ring.x_vars, mpq_class(g))));
  }
  for (std::size_t i = 0; i < s; ++i) report.generators.push_back(format(NestedPolynomial::u_variable(ring, s, i)));
  return report;
}

}  // namespace locoh
