#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tauratio::report {

// monostate renders as an empty CSV field or JSON null.
using Value = std::variant<std::monostate, bool, std::int64_t, std::uint64_t, double, std::string>;

struct Column {
  std::string name;
  bool scientific = false;  // human format only
};

struct Table {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<Value>> rows;
};

struct Assertion {
  std::string name;
  bool passed;
  std::string detail;
};

struct Document {
  std::string command;
  std::vector<std::pair<std::string, Value>> fields;
  std::vector<Table> tables;
  std::vector<Assertion> assertions;

  bool passed() const;
  void field(std::string key, Value v) { fields.emplace_back(std::move(key), std::move(v)); }
  void check(std::string name, bool ok, std::string detail = {}) {
    assertions.push_back({std::move(name), ok, std::move(detail)});
  }
};

enum class Format { csv, json, human };

std::optional<Format> parse_format(std::string_view name);

// 15 significant digits, shortest form, '.' separator regardless of locale.
std::string format_real(double v);
std::string format_scientific(double v);

Value optional_real(const std::optional<double>& v);

std::string render(const Document& doc, Format format);

}  // namespace tauratio::report
