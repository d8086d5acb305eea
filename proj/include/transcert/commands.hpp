#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "transcert/json_io.hpp"

namespace transcert {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "transcert";
inline constexpr const char* kToolVersion = "0.1.0";

/// Global flags shared by every subcommand; all are echoed into certificates.
struct Params {
  std::uint64_t seed = 0;
  std::int64_t prec = 20;
  std::uint32_t height = 2;
  std::uint64_t max_points = 1'000'000;
  std::string strategy = "exhaustive";
};

/// exit_code: 0 success, 1 not found or failed verification, 2 malformed input.
struct Outcome {
  int exit_code = 0;
  io::Json output;
};

const std::vector<std::string>& command_names();

/// Runs a subcommand on a JSON input and wraps the result in a certificate.
/// Never throws for bad input; errors become exit code 2 with a JSON pointer.
Outcome run_command(const std::string& command, const io::Json& input, const Params& params);

/// Re-checks a certificate produced by run_command using only the verifier
/// checks, and compares against the embedded transcript.
Outcome verify_certificate(const io::Json& certificate);

/// Sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const io::Json& j);

}  // namespace transcert
