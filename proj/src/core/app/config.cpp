#include "app/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "common/errors.hpp"
#include "constants/euler.hpp"

namespace tauratio::app {
namespace {

constexpr std::array<std::pair<Command, const char*>, 7> kCommands{{
    {Command::constants, "constants"},
    {Command::kappa_table, "kappa-table"},
    {Command::verify, "verify"},
    {Command::phi_sum, "phi-sum"},
    {Command::identity, "identity"},
    {Command::oracle, "oracle"},
    {Command::smooth, "smooth"},
}};

[[noreturn]] void bad(std::string_view what, std::string_view text, std::string_view why) {
  throw ConfigError("--" + std::string(what) + ": " + std::string(why) + " (got '" + std::string(text) + "')");
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands) {
    if (name == n) return c;
  }
  return std::nullopt;
}

const char* command_name(Command command) {
  for (const auto& [c, n] : kCommands) {
    if (c == command) return n;
  }
  return "unknown";
}

double parse_real(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
  if (r.ec != std::errc{} || r.ptr != text.data() + text.size() || !std::isfinite(v)) {
    bad(what, text, "expected a real number");
  }
  return v;
}

std::uint64_t parse_count(std::string_view text, std::string_view what) {
  std::uint64_t u = 0;
  const auto r = std::from_chars(text.data(), text.data() + text.size(), u);
  if (r.ec == std::errc{} && r.ptr == text.data() + text.size()) return u;
  const double v = parse_real(text, what);
  if (v < 0 || v != std::floor(v) || v >= 9.2e18) bad(what, text, "expected a non-negative integer");
  return static_cast<std::uint64_t>(v);
}

void set_option(RunConfig& config, std::string_view key, std::string_view value) {
  auto positive = [&] {
    const std::uint64_t v = parse_count(value, key);
    if (v == 0) bad(key, value, "must be >= 1");
    return v;
  };
  if (key == "a") {
    config.a = positive();
  } else if (key == "k") {
    const std::uint64_t v = parse_count(value, key);
    if (v < 2 || v > 64) bad(key, value, "must lie in [2, 64]");
    config.k = static_cast<std::uint32_t>(v);
  } else if (key == "m") {
    config.m = positive();
  } else if (key == "x") {
    config.x = positive();
  } else if (key == "xmax") {
    config.xmax = positive();
  } else if (key == "prec") {
    config.prec = parse_real(value, key);
  } else if (key == "checkpoints") {
    if (value == "log10") {
      config.log10_checkpoints = true;
      config.checkpoints.clear();
      return;
    }
    config.log10_checkpoints = false;
    config.checkpoints.clear();
    std::size_t start = 0;
    while (start <= value.size()) {
      const std::size_t end = std::min(value.find(',', start), value.size());
      const auto item = value.substr(start, end - start);
      if (item.empty()) bad(key, value, "empty entry in checkpoint list");
      config.checkpoints.push_back(parse_count(item, key));
      start = end + 1;
    }
  } else if (key == "threads") {
    const std::uint64_t v = parse_count(value, key);
    if (v < 1 || v > 256) bad(key, value, "must lie in [1, 256]");
    config.threads = static_cast<unsigned>(v);
  } else if (key == "format") {
    config.format = report::parse_format(value);
    if (!config.format) bad(key, value, "expected csv, json or human");
  } else if (key == "s") {
    config.s = parse_real(value, key);
  } else if (key == "pmax") {
    const std::uint64_t v = parse_count(value, key);
    if (v < 2) bad(key, value, "must be >= 2");
    config.pmax = v;
  } else if (key == "d") {
    const std::uint64_t v = parse_count(value, key);
    if (v < 2) bad(key, value, "must be >= 2");
    config.d = v;
  } else {
    throw ConfigError("unknown option --" + std::string(key));
  }
}

void validate(const RunConfig& config) {
  if (!(config.prec >= constants::kMinTargetTail && config.prec <= constants::kMaxTargetTail)) {
    throw ConfigError("--prec must lie in [1e-12, 1e-2]");
  }
  if (config.xmax > kMaxX) throw ConfigError("--xmax must be <= 1e9");
  if (config.x && *config.x > kMaxX) throw ConfigError("--x must be <= 1e9");
  if (!config.log10_checkpoints) {
    if (config.checkpoints.empty()) throw ConfigError("--checkpoints: empty list");
    for (std::size_t i = 0; i < config.checkpoints.size(); ++i) {
      if (config.checkpoints[i] == 0) throw ConfigError("--checkpoints: entries must be >= 1");
      if (i > 0 && config.checkpoints[i] <= config.checkpoints[i - 1]) {
        throw ConfigError("--checkpoints: list must be strictly increasing");
      }
    }
    if (config.checkpoints.back() > kMaxX) throw ConfigError("--checkpoints: entries must be <= 1e9");
  }
  if (config.command == Command::oracle && config.x && *config.x > kMaxOracleX) {
    throw ConfigError("oracle: --x must be <= 1e5");
  }
  if (config.command == Command::identity && !(config.s > 1.0)) {
    throw ConfigError("identity: --s must be > 1");
  }
}

report::Format effective_format(const RunConfig& config) {
  if (config.format) return *config.format;
  return config.command == Command::verify ? report::Format::csv : report::Format::json;
}

std::vector<std::uint64_t> resolve_checkpoints(const RunConfig& config, std::uint64_t upper, std::uint64_t first) {
  std::vector<std::uint64_t> out;
  if (!config.log10_checkpoints) return config.checkpoints;
  for (std::uint64_t x = first; x <= upper; x *= 10) out.push_back(x);
  if (out.empty()) throw ConfigError("log10 checkpoint grid is empty below " + std::to_string(upper));
  return out;
}

}  // namespace tauratio::app
