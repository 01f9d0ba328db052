#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sympow/caps.hpp"
#include "sympow/reports.hpp"

namespace sympow::cli {

struct RunConfig {
  std::string command;
  std::optional<std::string> input_path;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> r;
  std::optional<std::size_t> d;
  std::optional<std::size_t> x;  // non-base points of X
  std::optional<std::size_t> z;  // non-base points of Z
  std::uint64_t seed = 0;
  Caps caps;
  std::optional<std::string> output_path;
};

const std::vector<std::string>& commands();

/// "name=value,name=value" applied on top of the defaults. Throws InvalidInput.
Caps parse_caps(std::string_view spec);

/// {"command", "ok", "reports"}. Throws sympow::Error on bad input or exceeded caps.
reports::Json execute(const RunConfig& config);

/// Writes the JSON report (or an error object) to the output path or `out`.
/// Returns 0 when every identity held, 1 when one failed, 2 on input or cap errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sympow::cli
