#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ptk/core.hpp"

namespace ptk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::size_t kMaxSweepRows = 1'000'000;

enum class Command { Theta, Witness, Verify, Sweep, Selftest };
enum class OutputFormat { Human, Json, Csv };

/// Inclusive range of non-negative integers.
struct Range {
  Count lo = 0;
  Count hi = 0;
  Count size() const noexcept { return hi - lo + 1; }
};

struct RunConfig {
  Command command = Command::Theta;
  std::string spec;
  Count oracle_max = 12;
  Range k1;
  Range k2;
  Range k3;
  /// Big-part profiles for sweep; every part >= 4.  Default: one empty one.
  std::vector<PartProfile> big{PartProfile{}};
  bool check_remark = false;
  OutputFormat format = OutputFormat::Human;
  std::uint64_t seed = 1;
};

/// "A..B" or "A".  Throws ptk::ParseError.
Range parse_range(std::string_view text);

/// Semicolon-separated profile strings, e.g. "4,4;4,5".  Throws
/// ptk::ParseError on bad syntax or a part below 4.
std::vector<PartProfile> parse_big_list(std::string_view text);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view value);

int cmd_theta(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_witness(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_selftest(const RunConfig& config, std::ostream& out,
                 std::ostream& err);

/// Parses argv and dispatches.  Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace ptk::cli
