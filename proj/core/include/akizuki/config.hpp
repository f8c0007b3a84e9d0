#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "akizuki/instance.hpp"

namespace akizuki {

// Textual instance description, as read from a configuration file:
//
//   # comment
//   field = q | fp:<prime>
//   precision = <N>
//   exponents = minimal | <comma list>
//   units = <comma list of integers or p/q>
//
// Every key is optional; the defaults give the rationals, N = 31, minimal
// exponents and unit coefficients 1.
struct InstanceConfig {
  std::string field = "q";
  std::size_t precision = 31;
  std::optional<std::vector<std::size_t>> exponents;
  std::vector<std::string> units;

  AkizukiInstance build() const;
};

// Later keys override earlier ones. Throws ParseError on malformed lines.
InstanceConfig parse_instance_config(std::string_view text, InstanceConfig base = {});
InstanceConfig load_instance_config(const std::string& path, InstanceConfig base = {});

}  // namespace akizuki
