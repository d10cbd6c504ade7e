#include "report/document.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <json.hpp>

namespace tauratio::report {
namespace {

using json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string text(const Value& v, bool scientific) {
  struct Visitor {
    bool scientific;
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(std::uint64_t u) const { return std::to_string(u); }
    std::string operator()(double d) const { return scientific ? format_scientific(d) : format_real(d); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{scientific}, v);
}

json to_json(const Value& v) {
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(bool b) const { return b; }
    json operator()(std::int64_t i) const { return i; }
    json operator()(std::uint64_t u) const { return u; }
    json operator()(double d) const {
      if (!std::isfinite(d)) return nullptr;
      // Round-trip through the 15-digit text so the JSON writer's shortest
      // representation carries the same digits as the other formats.
      const std::string s = format_real(d);
      double r = 0.0;
      std::from_chars(s.data(), s.data() + s.size(), r);
      return r;
    }
    json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

std::string render_csv(const Document& doc) {
  std::string out;
  for (std::size_t t = 0; t < doc.tables.size(); ++t) {
    const Table& table = doc.tables[t];
    if (t > 0) out += '\n';
    if (doc.tables.size() > 1) out += "# " + table.name + '\n';
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ',';
      out += csv_escape(table.columns[c].name);
    }
    out += '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        out += csv_escape(text(row[c], false));
      }
      out += '\n';
    }
  }
  if (doc.tables.empty()) {
    out += "key,value\n";
    for (const auto& [k, v] : doc.fields) out += csv_escape(k) + ',' + csv_escape(text(v, false)) + '\n';
  }
  return out;
}

std::string render_json(const Document& doc) {
  json root = json::object();
  root["command"] = doc.command;
  json results = json::object();
  for (const auto& [k, v] : doc.fields) results[k] = to_json(v);
  root["results"] = results;
  json tables = json::object();
  for (const auto& table : doc.tables) {
    json rows = json::array();
    for (const auto& row : table.rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c].name] = to_json(row[c]);
      rows.push_back(obj);
    }
    tables[table.name] = rows;
  }
  root["tables"] = tables;
  json assertions = json::array();
  for (const auto& a : doc.assertions) {
    assertions.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  }
  root["assertions"] = assertions;
  root["passed"] = doc.passed();
  return root.dump(2) + '\n';
}

std::string render_human(const Document& doc) {
  std::string out = "tau-ratio-lab " + doc.command + '\n';
  std::size_t width = 0;
  for (const auto& [k, v] : doc.fields) width = std::max(width, k.size());
  for (const auto& [k, v] : doc.fields) {
    out += "  " + k + std::string(width - k.size(), ' ') + "  " + text(v, false) + '\n';
  }
  for (const auto& table : doc.tables) {
    out += '\n' + table.name + '\n';
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> widths(table.columns.size());
    for (std::size_t c = 0; c < table.columns.size(); ++c) widths[c] = table.columns[c].name.size();
    for (const auto& row : table.rows) {
      auto& line = cells.emplace_back();
      for (std::size_t c = 0; c < row.size(); ++c) {
        line.push_back(text(row[c], table.columns[c].scientific));
        widths[c] = std::max(widths[c], line.back().size());
      }
    }
    auto emit = [&](auto cell_of) {
      out += ' ';
      for (std::size_t c = 0; c < widths.size(); ++c) {
        const std::string s = cell_of(c);
        out += ' ' + std::string(widths[c] - s.size(), ' ') + s;
      }
      out += '\n';
    };
    emit([&](std::size_t c) { return table.columns[c].name; });
    for (const auto& line : cells) emit([&](std::size_t c) { return line[c]; });
  }
  if (!doc.assertions.empty()) {
    out += '\n';
    for (const auto& a : doc.assertions) {
      out += std::string(a.passed ? "  PASS  " : "  FAIL  ") + a.name;
      if (!a.detail.empty()) out += " (" + a.detail + ')';
      out += '\n';
    }
  }
  out += std::string("\nresult: ") + (doc.passed() ? "pass" : "fail") + '\n';
  return out;
}

}  // namespace

bool Document::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "human") return Format::human;
  return std::nullopt;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
  return std::string(buf, r.ptr);
}

std::string format_scientific(double v) {
  if (!std::isfinite(v)) return format_real(v);
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 6);
  return std::string(buf, r.ptr);
}

Value optional_real(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::csv:
      return render_csv(doc);
    case Format::json:
      return render_json(doc);
    case Format::human:
      return render_human(doc);
  }
  return {};
}

}  // namespace tauratio::report
