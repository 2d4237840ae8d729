#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "json.hpp"

namespace hartogs {

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::string command;  // taken from the document's "command" field when empty
  nlohmann::json doc;
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 0;
};

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;  // a check ran and came out negative
inline constexpr int kExitInput = 2;    // bad config, bad tuple, unknown command

// Executes one sub-command and writes its report to `out`. Input errors are
// written to `out` as {"error": kind, "message": ...}.
int run(const RunConfig& config, std::ostream& out);

}  // namespace hartogs
