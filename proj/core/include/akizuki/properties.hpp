#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "akizuki/instance.hpp"

namespace akizuki::props {

struct PropertyResult {
  std::string name;
  std::size_t cases_run = 0;
  // First failing case, described with its inputs.
  std::optional<std::string> counterexample;

  bool passed() const noexcept { return !counterexample.has_value(); }
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> results;

  bool passed() const noexcept;
};

// "series", "ring", "cohomology", "duality", "completion".
const std::vector<std::string>& suite_names();

// Runs every property of `suite` against `inst` for `count` seeded cases.
// Case i of a property draws from its own engine (seed, property, i), so
// results do not depend on execution order. "all" runs every suite.
// Throws ParseError for an unknown suite name.
std::vector<SuiteReport> run_suite(const AkizukiInstance& inst, std::string_view suite, std::uint64_t seed,
                                   std::size_t count);

}  // namespace akizuki::props
