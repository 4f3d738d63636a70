#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "locoh/cohomology.hpp"
#include "locoh/presentation.hpp"
#include "locoh/strand.hpp"

namespace locoh {

enum class Format { Json, Csv, Table };

/// "json", "csv" or "table"; anything else is InvalidArgument.
Format parse_format(std::string_view name);

struct ContentSummary {
  std::vector<Poly> generators;
  bool is_unit;
  bool is_cofinite;
  std::optional<std::uint64_t> colength;
  MinimalPrimesReport minimal_primes;
};

ContentSummary summarize_content(const GradedIdeal& ideal);

struct TridiagRow {
  long n;
  mpz_class recurrence;
  mpz_class direct;  // determinant by elimination
};

std::vector<TridiagRow> tridiag_table(long n_max);

/// Every renderer ends its output with a newline. JSON objects have sorted keys.
std::string render(const PresentationMatrix& m, Format format);
std::string render(const StrandReport& report, Format format);
std::string render(const HilbertTable& table, Format format);
std::string render(const std::vector<VanishingReport>& reports, std::optional<GapFree> verdict, Format format);
std::string render(const FitResult& fit, Format format);
std::string render(const std::vector<CharComparisonRow>& rows, std::uint64_t p, Format format);
std::string render(const std::vector<TridiagRow>& rows, Format format);
std::string render(const ContentSummary& summary, Format format);

/// Columns padded to their widest cell, separated by two spaces.
std::string aligned_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

/// RFC 4180 quoting where needed.
std::string csv_line(const std::vector<std::string>& cells);

}  // namespace locoh
