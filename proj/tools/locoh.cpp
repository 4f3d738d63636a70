// Command-line front end for top local cohomology computations.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "locoh/builtins.hpp"
#include "locoh/cohomology.hpp"
#include "locoh/error.hpp"
#include "locoh/presentation.hpp"
#include "locoh/report.hpp"

namespace {

using namespace locoh;

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kNotFiniteLength = 3;
constexpr int kTheoremViolation = 4;

struct RingFlags {
  std::string ideal;
  std::string builtin;
  std::optional<std::size_t> s;
  std::optional<std::size_t> m;
  std::string field;
  std::optional<std::uint64_t> p;
};

struct Flags {
  RingFlags ring;
  std::optional<int> d;
  std::optional<int> d_min;
  std::optional<int> d_max;
  int window = 6;
  long n = 32;
  std::string format = "table";
  std::string output;
};

void add_ring_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--ideal", f.ring.ideal, "generators, comma separated (X,Y,Z / Xi coefficients; U,V,W / Ui)");
  cmd->add_option("--builtin", f.ring.builtin, "singh, section3 or remark16");
  cmd->add_option("--s", f.ring.s, "number of U variables");
  cmd->add_option("--m", f.ring.m, "number of X variables");
  cmd->add_option("--field", f.ring.field, "q (rationals), p (prime field, needs --p) or z (integers)");
  cmd->add_option("--p", f.ring.p, "characteristic");
}

void add_output_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--output", f.output, "write to this file instead of stdout");
}

ScalarDomain base_domain(const RingFlags& r) {
  std::string field = r.field;
  if (field.empty()) field = r.p ? "p" : "q";
  if (field == "q") return ScalarDomain::rationals();
  if (field == "z") return ScalarDomain::integers();
  if (field == "p") {
    if (!r.p) throw Error(ErrorKind::InvalidArgument, "--field p needs --p");
    return ScalarDomain::prime_field(*r.p);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown --field '" + field + "' (q, p, z)");
}

GradedIdeal load_ideal(const RingFlags& r, bool content_only_ok) {
  const ScalarDomain base = base_domain(r);
  if (!r.builtin.empty() && !r.ideal.empty()) throw Error(ErrorKind::InvalidArgument, "give --ideal or --builtin, not both");
  if (!r.builtin.empty()) {
    const BuiltinExample& ex = builtin_example(r.builtin);
    if (ex.content_only && !content_only_ok) {
      throw Error(ErrorKind::InvalidArgument, "builtin '" + ex.name + "' only supports the content command");
    }
    if ((r.s && *r.s != ex.u_vars) || (r.m && *r.m != ex.x_vars)) {
      throw Error(ErrorKind::InvalidArgument, "builtin '" + ex.name + "' has m=" + std::to_string(ex.x_vars) +
                                                  ", s=" + std::to_string(ex.u_vars));
    }
    return builtin_ideal(ex.name, base);
  }
  if (r.ideal.empty()) throw Error(ErrorKind::InvalidArgument, "missing --ideal or --builtin");
  return parse_ideal(r.ideal, base, r.m, r.s);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFiniteLength: return kNotFiniteLength;
    case ErrorKind::TheoremViolation:
    case ErrorKind::RouteDisagreement: return kTheoremViolation;
    default: return kInputError;
  }
}

void write(const Flags& f, const std::string& text) {
  if (f.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(f.output);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot open " + f.output);
  out << text;
}

CohomologyQuery range_query(const Flags& f, GradedIdeal ideal) {
  const int s = static_cast<int>(ideal.u_vars());
  const int lo = f.d_min.value_or(f.d.value_or(s));
  const int hi = f.d_max.value_or(f.d.value_or(lo));
  return make_query(std::move(ideal), lo, hi, strand_options_from_env());
}

int run(const std::string& command, const Flags& f) {
  const Format format = parse_format(f.format);
  if (command == "present") {
    if (!f.d) throw Error(ErrorKind::InvalidArgument, "present needs --d");
    write(f, render(presentation_matrix(load_ideal(f.ring, false), *f.d), format));
    return kOk;
  }
  if (command == "hilbert") {
    const HilbertTable table = hilbert_table(range_query(f, load_ideal(f.ring, false)));
    write(f, render(table, format));
    for (const auto& row : table.rows)
      if (!row.result) return kNotFiniteLength;
    return kOk;
  }
  if (command == "vanish") {
    const CohomologyQuery q = range_query(f, load_ideal(f.ring, false));
    std::vector<VanishingReport> reports;
    for (int d = q.d_min; d <= q.d_max; ++d) reports.push_back(vanishes(q.ideal, d));
    write(f, render(reports, gap_free_check(q), format));
    return kOk;
  }
  if (command == "fit") {
    const HilbertTable table = hilbert_table(range_query(f, load_ideal(f.ring, false)));
    write(f, render(fit_reverse_polynomial(table, f.window), format));
    return kOk;
  }
  if (command == "compare") {
    if (!f.ring.p) throw Error(ErrorKind::InvalidArgument, "compare needs --p");
    const int lo = f.d_min.value_or(3), hi = f.d_max.value_or(8);
    write(f, render(char_comparison(*f.ring.p, lo, hi, strand_options_from_env()), *f.ring.p, format));
    return kOk;
  }
  if (command == "tridiag") {
    if (f.n < 1) throw Error(ErrorKind::OutOfRange, "--n must be at least 1");
    write(f, render(tridiag_table(f.n), format));
    return kOk;
  }
  if (command == "content") {
    write(f, render(summarize_content(load_ideal(f.ring, true)), format));
    return kOk;
  }
  throw Error(ErrorKind::InvalidArgument, "no command given");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Top local cohomology of graded quotients S/I, S = R_0[U_1..U_s]", "locoh"};
  app.require_subcommand(1);
  Flags f;

  auto* present = app.add_subcommand("present", "print the presentation matrix M(f; d)");
  add_ring_flags(present, f);
  present->add_option("--d", f.d, "degree d (component -d)");

  auto* hilbert = app.add_subcommand("hilbert", "tabulate lengths of the components -d");
  auto* vanish = app.add_subcommand("vanish", "decide vanishing by cokernel and by content");
  auto* fit = app.add_subcommand("fit", "test a table for reverse polynomial type");
  for (auto* cmd : {hilbert, vanish, fit}) {
    add_ring_flags(cmd, f);
    cmd->add_option("--d", f.d, "single degree");
    cmd->add_option("--dmin", f.d_min, "first degree");
    cmd->add_option("--dmax", f.d_max, "last degree");
  }
  fit->add_option("--window", f.window, "interpolation window (points minus one)");

  auto* compare = app.add_subcommand("compare", "compare characteristic 0 with characteristic p on singh");
  compare->add_option("--p", f.ring.p, "prime")->required();
  compare->add_option("--dmin", f.d_min, "first degree (default 3)");
  compare->add_option("--dmax", f.d_max, "last degree (default 8)");

  auto* tridiag = app.add_subcommand("tridiag", "tridiagonal determinants by recurrence and elimination");
  tridiag->add_option("--n", f.n, "largest size (default 32)");

  auto* content = app.add_subcommand("content", "content ideal, unit and cofiniteness tests");
  add_ring_flags(content, f);

  for (auto* cmd : {present, hilbert, vanish, fit, compare, tridiag, content}) add_output_flags(cmd, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), f);
  } catch (const Error& e) {
    std::cerr << "locoh: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "locoh: " << e.what() << "\n";
    return kTheoremViolation;
  }
}
