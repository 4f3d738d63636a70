#include "locoh/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "locoh/groebner.hpp"
#include "locoh/linalg.hpp"
#include "locoh/parse.hpp"

namespace locoh {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "table") return Format::Table;
  throw Error(ErrorKind::InvalidArgument, "unknown format '" + std::string(name) + "' (json, csv, table)");
}

ContentSummary summarize_content(const GradedIdeal& ideal) {
  ContentSummary out{content_ideal(ideal), false, false, std::nullopt, {}};
  out.colength = content_colength(ideal);
  out.is_cofinite = out.colength.has_value();
  out.is_unit = is_unit_ideal(out.generators);
  out.minimal_primes = minimal_primes_report(ideal);
  return out;
}

std::vector<TridiagRow> tridiag_table(long n_max) {
  std::vector<TridiagRow> rows;
  for (long n = 1; n <= n_max; ++n) {
    rows.push_back({n, tridiag_det(n), mpz_class(determinant(tridiag_matrix(n)).get_num())});
  }
  return rows;
}

std::string aligned_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto widen = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  widen(header);
  for (const auto& r : rows) widen(r);
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += "  ";
      line += cells[i];
      if (i + 1 < cells.size()) line += std::string(width[i] - cells[i].size(), ' ');
    }
    out << line << '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return out.str();
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    const std::string& c = cells[i];
    if (c.find_first_of(",\"\n") == std::string::npos) {
      line += c;
      continue;
    }
    line += '"';
    for (char ch : c) {
      if (ch == '"') line += '"';
      line += ch;
    }
    line += '"';
  }
  return line + '\n';
}

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string out = csv_line(header);
  for (const auto& r : rows) out += csv_line(r);
  return out;
}

std::string emit(Format format, const json& j, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  switch (format) {
    case Format::Json: return dump(j);
    case Format::Csv: return csv(header, rows);
    case Format::Table: return aligned_table(header, rows);
  }
  return {};
}

// Integers that fit in 64 bits stay numbers, larger ones become strings.
json exact(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json monomial_json(const Monomial& m) { return m.exponents(); }

std::string monomial_text(const Monomial& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out + ")";
}

json strand_json(const StrandReport& r) {
  json rows = json::array();
  for (const auto& row : r.per_degree) {
    rows.push_back({{"degree", row.degree}, {"ambientDim", row.ambient}, {"imageRank", row.image_rank},
                    {"cokerDim", row.coker}});
  }
  return {{"perDegree", rows}, {"totalDim", r.total}, {"stabilizedAt", r.stabilized_at}};
}

std::string ideal_echo(const GradedIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) out += (out.empty() ? "" : ", ") + format(g);
  return out;
}

std::string ring_echo(const GradedIdeal& ideal) {
  return ideal.ring().base.name() + " with m=" + std::to_string(ideal.ring().x_vars) + ", s=" +
         std::to_string(ideal.u_vars());
}

std::string polys_text(const std::vector<Poly>& gens) {
  std::string out;
  for (const auto& g : gens) out += (out.empty() ? "" : ", ") + format(g);
  return out;
}

}  // namespace

std::string render(const PresentationMatrix& m, Format format) {
  const PolyMatrix& e = m.entries;
  std::vector<std::vector<std::string>> cells(e.rows());
  json entries = json::array();
  for (std::size_t r = 0; r < e.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < e.cols(); ++c) {
      cells[r].push_back(locoh::format(e(r, c)));
      row.push_back(cells[r].back());
    }
    entries.push_back(row);
  }
  json row_basis = json::array();
  for (const auto& lam : m.row_basis.elements()) row_basis.push_back(monomial_json(lam));
  json blocks = json::array();
  std::vector<std::string> header;
  for (const auto& b : m.column_blocks) {
    json basis = json::array();
    for (const auto& lam : b.basis.elements()) {
      basis.push_back(monomial_json(lam));
      header.push_back("f" + std::to_string(b.generator + 1) + monomial_text(lam));
    }
    blocks.push_back({{"generator", b.generator}, {"generatorDegree", b.generator_degree}, {"basis", basis}});
  }
  const json j{{"s", m.s}, {"d", m.d}, {"rowBasis", row_basis}, {"columnBlocks", blocks}, {"entries", entries}};
  if (format == Format::Table) {
    header.insert(header.begin(), "row");
    for (std::size_t r = 0; r < cells.size(); ++r) cells[r].insert(cells[r].begin(), monomial_text(m.row_basis[r]));
  }
  if (format == Format::Csv) return csv_line(header) + [&] {
    std::string out;
    for (const auto& r : cells) out += csv_line(r);
    return out;
  }();
  return emit(format, j, header, cells);
}

std::string render(const StrandReport& report, Format format) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : report.per_degree) {
    rows.push_back({std::to_string(r.degree), std::to_string(r.ambient), std::to_string(r.image_rank),
                    std::to_string(r.coker)});
  }
  std::string out = emit(format, strand_json(report), {"degree", "ambient", "image_rank", "coker"}, rows);
  if (format == Format::Table) {
    out += "total " + std::to_string(report.total) + ", stabilized at " + std::to_string(report.stabilized_at) + "\n";
  }
  return out;
}

std::string render(const HilbertTable& table, Format format) {
  const CohomologyQuery& q = table.query;
  json rows = json::array();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : table.rows) {
    json jr{{"d", row.d}};
    std::string value, stabilized, notes;
    if (row.result) {
      const TopResult& r = *row.result;
      jr["value"] = r.value;
      jr["method"] = to_string(r.method);
      jr["vanishing"] = row.vanishing();
      value = std::to_string(r.value);
      notes = to_string(r.method);
      if (r.strands) {
        jr["stabilizedAt"] = r.strands->stabilized_at;
        jr["strands"] = strand_json(*r.strands);
        stabilized = std::to_string(r.strands->stabilized_at);
      }
      if (r.method == TopMethod::FieldRank) jr["rank"] = r.rank;
      if (r.method == TopMethod::SmithForm) {
        json f = json::array();
        for (const auto& v : r.invariant_factors) f.push_back(exact(v));
        jr["invariantFactors"] = f;
      }
    } else {
      jr["value"] = nullptr;
      jr["notFiniteLength"] = true;
      jr["error"] = row.error;
      notes = row.error;
    }
    rows.push_back(jr);
    cells.push_back({std::to_string(row.d), value, stabilized, notes});
  }
  const json j{{"query", {{"ideal", ideal_echo(q.ideal)}, {"ring", q.ideal.ring().base.name()},
                          {"m", q.ideal.ring().x_vars}, {"s", q.s()}, {"dMin", q.d_min}, {"dMax", q.d_max}}},
               {"rows", rows}};
  if (format == Format::Table) {
    return "ideal (" + ideal_echo(q.ideal) + ") over " + ring_echo(q.ideal) + "\n" +
           aligned_table({"d", "value", "stabilized_at", "notes"}, cells);
  }
  return emit(format, j, {"d", "value", "stabilized_at", "notes"}, cells);
}

std::string render(const std::vector<VanishingReport>& reports, std::optional<GapFree> verdict, Format format) {
  json rows = json::array();
  std::vector<std::vector<std::string>> cells;
  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
  for (const auto& r : reports) {
    rows.push_back({{"d", r.d}, {"vanishes", r.vanishes()}, {"cokernelZero", r.cokernel_zero},
                    {"contentUnit", r.content_unit}});
    cells.push_back({std::to_string(r.d), yes(r.vanishes()), yes(r.cokernel_zero), yes(r.content_unit)});
  }
  json j{{"rows", rows}};
  if (verdict) j["gapFree"] = to_string(*verdict);
  std::string out = emit(format, j, {"d", "vanishes", "route_cokernel", "route_content"}, cells);
  if (format == Format::Table && verdict) out += "gap-free: " + to_string(*verdict) + "\n";
  return out;
}

std::string render(const FitResult& fit, Format format) {
  if (fit.polynomial) {
    const auto& p = *fit.polynomial;
    json coefs = json::array();
    for (const auto& c : p.coefficients) coefs.push_back(c.get_str());
    const json j{{"reversePolynomialType", true}, {"variable", "r = -d"}, {"polynomial", p.to_string()},
                 {"degree", p.degree()}, {"coefficients", coefs}};
    if (format == Format::Json) return dump(j);
    if (format == Format::Csv) return csv({"verdict", "degree", "polynomial"}, {{"polynomial", std::to_string(p.degree()), p.to_string()}});
    return "reverse polynomial type on the tabulated range\nh(r) = " + p.to_string() + "  (r = -d, degree " +
           std::to_string(p.degree()) + ")\n";
  }
  json evidence = json::array();
  std::vector<std::vector<std::string>> cells;
  for (const auto& ip : fit.refutation) {
    json window = ip.window;
    evidence.push_back({{"window", window},
                        {"polynomial", ip.polynomial.to_string()},
                        {"conflict", {{"d", ip.conflict_d}, {"value", exact(ip.conflict_value)},
                                      {"predicted", ip.predicted.get_str()}}}});
    cells.push_back({std::to_string(ip.window.front()) + ".." + std::to_string(ip.window.back()),
                     ip.polynomial.to_string(), std::to_string(ip.conflict_d), ip.conflict_value.get_str(),
                     ip.predicted.get_str()});
  }
  const json j{{"reversePolynomialType", false}, {"variable", "r = -d"}, {"refutation", evidence}};
  if (format == Format::Json) return dump(j);
  const std::vector<std::string> header{"window_d", "interpolant", "conflict_d", "value", "predicted"};
  if (format == Format::Csv) return csv(header, cells);
  return "NOT reverse polynomial type: two interpolants disagree with the table\n" + aligned_table(header, cells);
}

std::string render(const std::vector<CharComparisonRow>& rows, std::uint64_t p, Format format) {
  json jr = json::array();
  std::vector<std::vector<std::string>> cells;
  const std::string hp = "h_" + std::to_string(p);
  for (const auto& r : rows) {
    jr.push_back({{"d", r.d}, {"h0", r.h0}, {"hp", r.hp}, {"equal", r.equal}, {"pInPi", r.p_in_pi}});
    cells.push_back({std::to_string(r.d), std::to_string(r.h0), std::to_string(r.hp), r.equal ? "yes" : "no",
                     r.p_in_pi ? "yes" : "no"});
  }
  return emit(format, json{{"p", p}, {"rows", jr}}, {"d", "h_0", hp, "equal", "p_in_pi(d-2)"}, cells);
}

std::string render(const std::vector<TridiagRow>& rows, Format format) {
  json jr = json::array();
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    jr.push_back({{"n", r.n}, {"delta", exact(r.recurrence)}, {"direct", exact(r.direct)},
                  {"zero", r.recurrence == 0}, {"agree", r.recurrence == r.direct}});
    cells.push_back({std::to_string(r.n), r.recurrence.get_str(), r.direct.get_str(), r.recurrence == 0 ? "yes" : "no"});
  }
  return emit(format, json{{"rows", jr}}, {"n", "delta", "direct", "zero"}, cells);
}

std::string render(const ContentSummary& s, Format format) {
  json gens = json::array();
  for (const auto& g : s.generators) gens.push_back(locoh::format(g));
  json primes = json::array();
  for (const auto& g : s.minimal_primes.generators) primes.push_back(g);
  json j{{"generators", gens}, {"isUnit", s.is_unit}, {"isCofinite", s.is_cofinite},
         {"colength", s.colength ? json(*s.colength) : json(nullptr)},
         {"minimalPrimesIdeal", s.minimal_primes.whole_ring ? json("whole ring") : json(primes)}};
  const std::string colength = s.colength ? std::to_string(*s.colength) : "infinite";
  std::string prime_text = s.minimal_primes.whole_ring ? "whole ring" : "";
  for (const auto& g : s.minimal_primes.generators) prime_text += (prime_text.empty() ? "" : ", ") + g;
  const std::vector<std::string> header{"content", "is_unit", "is_cofinite", "colength", "minimal_primes_ideal"};
  return emit(format, j, header,
              {{polys_text(s.generators), s.is_unit ? "true" : "false", s.is_cofinite ? "true" : "false", colength,
                prime_text}});
}

}  // namespace locoh
