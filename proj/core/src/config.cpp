#include "akizuki/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "akizuki/errors.hpp"

namespace akizuki {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::size_t to_size(const std::string& text, const std::string& key) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw ParseError("config key '" + key + "' expects a non-negative integer, got '" + text + "'");
  }
  return value;
}

}  // namespace

AkizukiInstance InstanceConfig::build() const {
  const Field f = Field::parse(field);
  const ExponentRule rule = exponents ? ExponentRule::explicit_list(*exponents) : ExponentRule::minimal();
  std::vector<FieldElement> unit_values;
  for (const auto& u : units) {
    mpq_class q;
    try {
      q = mpq_class(u);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad unit '" + u + "'");
    }
    if (q.get_den() == 0) throw ParseError("bad unit '" + u + "'");
    unit_values.push_back(f.from_rational(q));
  }
  return AkizukiInstance::make(f, precision, rule, std::move(unit_values));
}

InstanceConfig parse_instance_config(std::string_view text, InstanceConfig config) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "field") {
      Field::parse(value);
      config.field = value;
    } else if (key == "precision") {
      config.precision = to_size(value, key);
    } else if (key == "exponents") {
      if (value == "minimal") {
        config.exponents.reset();
      } else {
        std::vector<std::size_t> list;
        for (const auto& item : split_commas(value)) list.push_back(to_size(item, key));
        config.exponents = std::move(list);
      }
    } else if (key == "units") {
      config.units = split_commas(value);
    } else {
      throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return config;
}

InstanceConfig load_instance_config(const std::string& path, InstanceConfig base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_config(buffer.str(), std::move(base));
}

}  // namespace akizuki
