#include "akizuki/series_io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <vector>

#include "akizuki/errors.hpp"

namespace akizuki {

namespace {

struct Term {
  mpq_class coeff;
  long exponent = 0;
};

class TermLexer {
 public:
  explicit TermLexer(std::string_view text) : text_(text) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty series literal");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = next() == '-';
    }
    while (true) {
      Term term = parse_term();
      if (negative) term.coeff = -term.coeff;
      terms.push_back(std::move(term));
      skip_space();
      if (at_end()) break;
      const char op = next();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      negative = op == '-';
    }
    return terms;
  }

 private:
  Term parse_term() {
    skip_space();
    Term term;
    term.coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      term.coeff = parse_rational();
      have_coeff = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        next();
        skip_space();
        if (at_end() || peek() != 't') fail("expected 't' after '*'");
      }
    }
    if (!at_end() && peek() == 't') {
      next();
      term.exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        next();
        skip_space();
        term.exponent = parse_signed();
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or 't'");
    }
    return term;
  }

  mpq_class parse_rational() {
    const std::string num = digits();
    skip_space();
    if (!at_end() && peek() == '/') {
      next();
      skip_space();
      const std::string den = digits();
      mpq_class q{mpz_class(num), mpz_class(den)};
      if (q.get_den() == 0) fail("zero denominator");
      q.canonicalize();
      return q;
    }
    return mpq_class(mpz_class(num));
  }

  long parse_signed() {
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) negative = next() == '-';
    const std::string d = digits();
    long value = 0;
    const auto [end, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
    if (ec != std::errc{} || end != d.data() + d.size()) fail("exponent out of range");
    return negative ? -value : value;
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(next());
    if (out.empty()) fail("expected digits");
    return out;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char next() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_term(const FieldElement& magnitude, long exponent) {
  std::string power;
  if (exponent == 1) {
    power = "t";
  } else if (exponent != 0) {
    power = "t^" + std::to_string(exponent);
  }
  if (exponent == 0) return magnitude.to_string();
  if (magnitude.is_one()) return power;
  return magnitude.to_string() + "*" + power;
}

// terms in ascending exponent order, zero coefficients already removed
std::string join_terms(const std::vector<std::pair<long, FieldElement>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exponent, c] : terms) {
    const bool negative = c.is_negative();
    const FieldElement magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += format_term(magnitude, exponent);
    first = false;
  }
  return out;
}

}  // namespace

std::string format_series(const TruncatedSeries& s) {
  std::vector<std::pair<long, FieldElement>> terms;
  for (std::size_t i = 0; i < s.precision(); ++i) {
    if (!s[i].is_zero()) terms.emplace_back(static_cast<long>(i), s[i]);
  }
  return join_terms(terms);
}

std::string format_tail(const LaurentTail& tail) {
  std::vector<std::pair<long, FieldElement>> terms;
  for (std::size_t j = tail.depth(); j >= 1; --j) {
    const auto d = tail.coefficient(j);
    if (!d.is_zero()) terms.emplace_back(-static_cast<long>(j), d);
  }
  return join_terms(terms);
}

TruncatedSeries parse_series(std::string_view text, Field field, std::size_t precision) {
  std::vector<FieldElement> coeffs(precision, field.zero());
  for (const auto& term : TermLexer(text).parse()) {
    if (term.exponent < 0) {
      throw ParseError("negative exponent in series literal '" + std::string(text) + "'");
    }
    const auto e = static_cast<std::size_t>(term.exponent);
    if (e < precision) coeffs[e] += field.from_rational(term.coeff);
  }
  return TruncatedSeries(field, std::move(coeffs));
}

LaurentTail parse_tail(std::string_view text, Field field) {
  std::map<std::size_t, FieldElement> by_depth;
  for (const auto& term : TermLexer(text).parse()) {
    const auto c = field.from_rational(term.coeff);
    if (term.exponent >= 0) {
      if (!c.is_zero()) {
        throw ParseError("tail literal '" + std::string(text) + "' has a non-negative exponent");
      }
      continue;
    }
    auto [it, inserted] = by_depth.try_emplace(static_cast<std::size_t>(-term.exponent), c);
    if (!inserted) it->second += c;
  }
  std::vector<FieldElement> terms(by_depth.empty() ? 0 : by_depth.rbegin()->first, field.zero());
  for (const auto& [j, c] : by_depth) terms[j - 1] = c;
  return LaurentTail(field, std::move(terms));
}

}  // namespace akizuki
