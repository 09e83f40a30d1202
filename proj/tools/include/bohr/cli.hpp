#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bohr::cli {

enum class Command { Radius, Tables, Verify, Calibrate, Bloch, Bounds };
enum class Format { Json, Csv, Text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoRoot = 3;
inline constexpr int kExitVerification = 4;

struct RunConfig {
  Command command = Command::Radius;

  std::string phi = "monomial";
  double p = 1.0;
  std::size_t m = 0;
  std::size_t N = 1;
  double mu = 1.0;
  std::optional<double> gamma;
  std::optional<double> lambda_h;
  double nu = 0.5;
  double tol = 1e-12;
  double scan_step = 1e-3;
  Format format = Format::Json;
  std::uint64_t seed = 0;
  std::optional<std::string> out_path;

  std::string kind;     // radius: refined | rogosinski; calibrate: q | p
  std::optional<int> table_id;
  std::string family = "theorem_c";
  std::string theorem = "41";
  std::string domain = "disk";
  double beta = 0.25;
  std::size_t m_deg = 2;
  std::vector<double> tail;
  bool allow_errata = false;
};

std::optional<Command> parse_command(const std::string& name);
std::optional<Format> parse_format(const std::string& name);

/// Runs one command and writes its record(s) to `out` (or to config.out_path).
/// Diagnostics go to `err` as a single line. Returns 0 on success, 2 on invalid input,
/// 3 when no root exists or constraints are infeasible, 4 when verification fails.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bohr::cli
