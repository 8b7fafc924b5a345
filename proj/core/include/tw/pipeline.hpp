#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tw/geometry.hpp"
#include "tw/trisection.hpp"

namespace tw {

enum ExitCode : int {
  kExitOk = 0,
  kExitAssertion = 1,
  kExitCertification = 2,
  kExitInput = 3,
};

struct PipelineConfig {
  Triple n{0, 0, 0};  // upstairs stabilizations per sector
  Scales scales;
  Tolerances tol;
  int grid_n = 256;
};

/// {"schema","n":[n1,n2,n3],"M"?,"R"?,"epsilon_prime"?,"tol"?,"band"?,"grid_n"?}.
PipelineConfig parse_pipeline_config(const std::string& text);

/// Throws SchemaError unless n >= 0 and 1/M < 1 < R < M.
void check_pipeline_config(const PipelineConfig& cfg);

struct CommandResult {
  int exit_code = kExitOk;
  std::string report;  // JSON, schema tw/1
};

/// Family of n1 + n2 + n3 pleated graphs, certified, pulled back along
/// standard_rho and compared with the stabilized standard B^4 trisection.
CommandResult run_stein_b4(const PipelineConfig& cfg);

struct VerifyOptions {
  std::optional<double> tol;  // overrides the residual tolerance
  std::uint64_t seed = 1;
};

/// Subcommands: params, diagram-h1, bridge, cover, geometry, cusp, psh,
/// reconstruct. cusp and psh accept empty input and use defaults.
CommandResult run_verify(const std::string& subcommand, const std::string& input,
                         const VerifyOptions& opts = {});

/// Report for input errors: exit 3 with the failing location.
CommandResult input_error(const std::string& command, const std::string& location,
                          const std::string& message);

}  // namespace tw
