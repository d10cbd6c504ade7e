// tau-ratio-lab: command-line front end over the C interface.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "tauratio/tauratio.h"

namespace {

constexpr const char* kCommands[][2] = {
    {"constants", "K, C, L, kappa(a), K(a) and Phi_a(1) with tail bounds"},
    {"kappa-table", "the twelve printed kappa values and the closed forms"},
    {"verify", "streamed S_a and E_a against their predictions"},
    {"phi-sum", "coprime totient sums against the C log x + L main term"},
    {"identity", "F_a(s) against sqrt(zeta(s)) Phi_a(s)"},
    {"oracle", "exact small-x sums against naive implementations"},
    {"smooth", "d-smooth enumeration and the (8 ln x)^s bound"},
};

constexpr const char* kOptions[][2] = {
    {"a", "shift a >= 1"},
    {"k", "divisor order k >= 2"},
    {"m", "modulus m for phi-sum"},
    {"x", "bound x (also N for identity)"},
    {"xmax", "largest checkpoint for verify"},
    {"prec", "target tail bound in [1e-12, 1e-2]"},
    {"checkpoints", "log10 or n1,n2,..."},
    {"threads", "worker threads"},
    {"format", "csv, json or human"},
    {"s", "real s for identity"},
    {"pmax", "prime cutoff P for identity"},
    {"d", "d >= 2 for smooth"},
};

int usage_error(const std::string& message) {
  std::cerr << "tau-ratio-lab: " << message << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisor-ratio sums, their constants and their asymptotics", "tau-ratio-lab"};
  app.require_subcommand(1);

  std::map<std::string, std::string> values;
  std::string out_path;
  for (const auto& [name, help] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    for (const auto& [key, desc] : kOptions) sub->add_option(std::string("--") + key, values[key], desc);
    sub->add_option("--out", out_path, "write output to PATH instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  const CLI::App* chosen = app.get_subcommands().front();
  tr_config* config = nullptr;
  if (tr_config_create(chosen->get_name().c_str(), &config) != TR_OK) return usage_error(tr_last_error());
  for (const auto& [key, desc] : kOptions) {
    if (chosen->count(std::string("--") + key) == 0) continue;
    if (tr_config_set(config, key, values[key].c_str()) != TR_OK) {
      const std::string message = tr_last_error();
      tr_config_destroy(config);
      return usage_error(message);
    }
  }

  tr_report* report = nullptr;
  const tr_status status = tr_run(config, &report);
  tr_config_destroy(config);
  if (status != TR_OK) return usage_error(tr_last_error());

  const char* text = nullptr;
  size_t length = 0;
  tr_report_text(report, &text, &length);
  const int passed = tr_report_passed(report);
  if (out_path.empty()) {
    std::fwrite(text, 1, length, stdout);
    std::fflush(stdout);
  } else {
    std::ofstream file(out_path, std::ios::binary);
    file.write(text, static_cast<std::streamsize>(length));
    if (!file) {
      tr_report_destroy(report);
      return usage_error("cannot write " + out_path);
    }
  }
  tr_report_destroy(report);
  return passed ? 0 : 2;
}
