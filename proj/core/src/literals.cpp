#include "akizuki/literals.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "akizuki/errors.hpp"
#include "akizuki/series_io.hpp"

namespace akizuki {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits "name( a ; b ; ... )" into its arguments.
std::vector<std::string_view> split_call(std::string_view text, std::string_view name, std::size_t arity) {
  const std::string_view body = trim(text);
  const std::string shown(text);
  if (body.substr(0, name.size()) != name) throw ParseError("expected " + std::string(name) + "(...) in '" + shown + "'");
  std::string_view rest = trim(body.substr(name.size()));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
    throw ParseError("expected parenthesized arguments in '" + shown + "'");
  }
  rest = rest.substr(1, rest.size() - 2);
  std::vector<std::string_view> args;
  while (true) {
    const auto semi = rest.find(';');
    args.push_back(trim(rest.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  if (args.size() != arity) {
    throw ParseError(std::string(name) + " takes " + std::to_string(arity) + " arguments in '" + shown + "'");
  }
  return args;
}

std::size_t parse_level(std::string_view text) {
  std::size_t n = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc{} || end != text.data() + text.size() || n == 0) {
    throw ParseError("expected a positive integer, got '" + std::string(text) + "'");
  }
  return n;
}

}  // namespace

H1Class parse_h1(std::string_view text, Field field) {
  const auto args = split_call(text, "gf", 3);
  const std::size_t n = parse_level(args[2]);
  return H1Class::make(NormalForm(parse_series(args[0], field, n), parse_series(args[1], field, n)), n);
}

ContinuousHom parse_hom(std::string_view text, Field field) {
  const auto args = split_call(text, "hom", 3);
  const std::size_t n = parse_level(args[0]);
  return ContinuousHom::make(parse_series(args[1], field, n), parse_series(args[2], field, n));
}

ResiduePair parse_pair(std::string_view text, Field field, std::size_t precision) {
  const auto args = split_call(text, "pair", 2);
  return {parse_series(args[0], field, precision), parse_series(args[1], field, precision)};
}

CompletionElement parse_comp(std::string_view text, Field field, std::size_t precision) {
  const auto args = split_call(text, "comp", 2);
  return {parse_series(args[0], field, precision), parse_series(args[1], field, precision)};
}

std::string format_h1(const H1Class& omega) {
  return "gf(" + format_series(omega.numerator().x()) + ";" + format_series(omega.numerator().y()) + ";" +
         std::to_string(omega.exponent()) + ")";
}

std::string format_hom(const ContinuousHom& hom) {
  return "hom(" + std::to_string(hom.level()) + ";" + format_series(hom.alpha()) + ";" + format_series(hom.beta()) +
         ")";
}

std::string format_pair(const ResiduePair& pair) {
  return "pair(" + format_series(pair.sigma) + ";" + format_series(pair.rho) + ")";
}

std::string format_comp(const CompletionElement& c) {
  return "comp(" + format_series(c.rho) + ";" + format_series(c.sigma) + ")";
}

}  // namespace akizuki
