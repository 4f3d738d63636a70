#include "locoh/parse.hpp"

#include <cctype>

#include "locoh/error.hpp"

namespace locoh {
namespace {

class Reader {
 public:
  Reader(std::string_view text, std::size_t base_offset, std::string_view full)
      : text_(text), base_(base_offset), full_(full) {}

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < base_ + pos && i < full_.size(); ++i) {
      if (full_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits_here() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t pos() const noexcept { return pos_; }
  void advance() { ++pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t base_;
  std::string_view full_;
};

struct Factor {
  bool is_number = false;
  mpq_class number;
  bool is_x = false;
  std::size_t index = 0;  // 1-based
  int exponent = 1;
};

Factor read_factor(Reader& in) {
  Factor f;
  const char c = in.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    f.is_number = true;
    mpz_class num(in.digits());
    mpz_class den = 1;
    if (in.accept('/')) {
      const std::size_t at = in.pos();
      std::string d = in.digits();
      if (d.empty()) in.fail("expected a denominator after '/'");
      den = mpz_class(d);
      if (den == 0) in.fail_at(at, "zero denominator");
    }
    f.number = mpq_class(num, den);
    f.number.canonicalize();
    return f;
  }
  const std::size_t at = in.pos();
  switch (c) {
    case 'X': case 'Y': case 'Z': case 'U': case 'V': case 'W': break;
    default:
      if (c == '\0') in.fail("unexpected end of input");
      in.fail(std::string("unexpected character '") + c + "'");
  }
  in.advance();
  // Index digits must follow the letter directly.
  std::string idx = in.digits_here();
  f.is_x = (c == 'X' || c == 'Y' || c == 'Z');
  if (!idx.empty()) {
    if (c != 'X' && c != 'U') in.fail_at(at, std::string("indexed variable must use X or U, got '") + c + "'");
    f.index = std::stoul(idx);
    if (f.index == 0) in.fail_at(at, "variable indices start at 1");
  } else {
    f.index = (c == 'X' || c == 'U') ? 1 : (c == 'Y' || c == 'V') ? 2 : 3;
  }
  if (in.accept('^')) {
    std::string e = in.digits();
    if (e.empty()) in.fail("expected a non-negative integer exponent after '^'");
    f.exponent = std::stoi(e);
  }
  return f;
}

template <typename OnTerm>
void read_sum(Reader& in, OnTerm&& on_term) {
  if (in.at_end()) in.fail("empty polynomial");
  bool first = true;
  while (!in.at_end()) {
    int sign = 1;
    if (in.accept('+')) {
    } else if (in.accept('-')) {
      sign = -1;
    } else if (!first) {
      in.fail("expected '+' or '-' between terms");
    }
    mpq_class coef = sign;
    std::vector<Factor> vars;
    const std::size_t term_start = in.pos();
    for (;;) {
      Factor f = read_factor(in);
      if (f.is_number) {
        coef *= f.number;
      } else {
        vars.push_back(f);
      }
      if (!in.accept('*')) break;
    }
    on_term(coef, vars, term_start);
    first = false;
  }
}

std::vector<std::pair<std::string_view, std::size_t>> split_generators(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == ';') {
      out.emplace_back(text.substr(start, i - start), start);
      start = i + 1;
    }
  }
  return out;
}

NestedPolynomial parse_piece(std::string_view piece, std::size_t offset, std::string_view full,
                             const CoefficientRing& ring, std::size_t u_vars, bool allow_u) {
  Reader in(piece, offset, full);
  NestedPolynomial f(ring, u_vars);
  read_sum(in, [&](const mpq_class& coef, const std::vector<Factor>& vars, std::size_t term_start) {
    std::vector<int> xe(ring.x_vars, 0), ue(u_vars, 0);
    for (const auto& v : vars) {
      if (v.is_x) {
        if (v.index > ring.x_vars) {
          in.fail_at(term_start, "X" + std::to_string(v.index) + " is outside a coefficient ring with " +
                                     std::to_string(ring.x_vars) + " X-variables");
        }
        xe[v.index - 1] += v.exponent;
      } else {
        if (!allow_u) in.fail_at(term_start, "U-variables are not allowed here");
        if (v.index > u_vars) {
          in.fail_at(term_start, "U" + std::to_string(v.index) + " is outside a ring with " +
                                     std::to_string(u_vars) + " U-variables");
        }
        ue[v.index - 1] += v.exponent;
      }
    }
    Scalar c;
    try {
      c = ring.base.make(coef);
    } catch (const Error& e) {
      in.fail_at(term_start, e.what());
    }
    f.add_term(Monomial(ue), Poly::term(ring.base, Monomial(xe), c));
  });
  return f;
}

std::string scalar_text(const Scalar& c) { return c.get_str(); }

std::string var_name(bool is_x, std::size_t index, std::size_t count) {
  static const char* xs[] = {"X", "Y", "Z"};
  static const char* us[] = {"U", "V", "W"};
  if (count <= 3) return is_x ? xs[index] : us[index];
  return (is_x ? "X" : "U") + std::to_string(index + 1);
}

void append_powers(std::string& out, const Monomial& m, bool is_x, bool& need_star) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (need_star) out += '*';
    out += var_name(is_x, i, m.size());
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
    need_star = true;
  }
}

void append_term(std::string& out, const Scalar& coef, const Monomial& xm, const Monomial* um) {
  const bool negative = coef < 0;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  const Scalar mag = abs(coef);
  const bool trivial = xm.total_degree() == 0 && (um == nullptr || um->total_degree() == 0);
  bool need_star = false;
  if (mag != 1 || trivial) {
    out += scalar_text(mag);
    need_star = true;
  }
  append_powers(out, xm, true, need_star);
  if (um) append_powers(out, *um, false, need_star);
}

}  // namespace

VariableCounts scan_variables(std::string_view text) {
  VariableCounts counts;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    std::size_t idx = 0;
    if (c == 'X' || c == 'U') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      idx = j > i + 1 ? std::stoul(std::string(text.substr(i + 1, j - i - 1))) : 1;
    } else if (c == 'Y' || c == 'V') {
      idx = 2;
    } else if (c == 'Z' || c == 'W') {
      idx = 3;
    } else {
      continue;
    }
    auto& slot = (c == 'X' || c == 'Y' || c == 'Z') ? counts.x_vars : counts.u_vars;
    slot = std::max(slot, idx);
  }
  return counts;
}

NestedPolynomial parse_polynomial(std::string_view text, const CoefficientRing& ring, std::size_t u_vars) {
  return parse_piece(text, 0, text, ring, u_vars, true);
}

std::vector<NestedPolynomial> parse_generators(std::string_view text, const CoefficientRing& ring,
                                               std::size_t u_vars) {
  std::vector<NestedPolynomial> out;
  bool blank = true;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (blank) return out;
  for (const auto& [piece, offset] : split_generators(text)) {
    out.push_back(parse_piece(piece, offset, text, ring, u_vars, true));
  }
  return out;
}

Poly parse_coefficient(std::string_view text, const CoefficientRing& ring) {
  NestedPolynomial f = parse_piece(text, 0, text, ring, 0, false);
  return f.is_zero() ? ring.zero() : f.terms().begin()->second;
}

std::string format(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) append_term(out, it->second, it->first, nullptr);
  return out;
}

std::string format(const NestedPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto ut = f.terms().rbegin(); ut != f.terms().rend(); ++ut)
    for (auto xt = ut->second.terms().rbegin(); xt != ut->second.terms().rend(); ++xt)
      append_term(out, xt->second, xt->first, &ut->first);
  return out;
}

}  // namespace locoh
