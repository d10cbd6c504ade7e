#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "report/document.hpp"

namespace tauratio::app {

enum class Command { constants, kappa_table, verify, phi_sum, identity, oracle, smooth };

std::optional<Command> parse_command(std::string_view name);
const char* command_name(Command command);

inline constexpr std::uint64_t kMaxX = 1'000'000'000;
inline constexpr std::uint64_t kMaxOracleX = 100'000;

struct RunConfig {
  Command command = Command::constants;
  std::uint64_t a = 1;
  std::uint32_t k = 2;
  std::uint64_t m = 1;
  std::optional<std::uint64_t> x;  // per-command default
  std::uint64_t xmax = 10'000'000;
  double prec = 1e-9;
  bool log10_checkpoints = true;
  std::vector<std::uint64_t> checkpoints;  // explicit list when !log10_checkpoints
  unsigned threads = 1;
  std::optional<report::Format> format;  // csv for verify, json otherwise
  double s = 2.0;
  std::optional<std::uint64_t> pmax;
  std::uint64_t d = 6;
};

// Sets one option from its textual value ("a", "1e6", ...). Numbers accept
// plain integers and scientific notation as long as the value is integral.
// Throws ConfigError with a one-line message.
void set_option(RunConfig& config, std::string_view key, std::string_view value);

// Cross-field checks; throws ConfigError.
void validate(const RunConfig& config);

report::Format effective_format(const RunConfig& config);

// Powers of ten from `first` up to `upper`, or the explicit list.
std::vector<std::uint64_t> resolve_checkpoints(const RunConfig& config, std::uint64_t upper,
                                               std::uint64_t first = 1000);

std::uint64_t parse_count(std::string_view text, std::string_view what);
double parse_real(std::string_view text, std::string_view what);

}  // namespace tauratio::app
