#include "xmlift/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace xmlift {

namespace {

constexpr std::string_view kLabels = ".labels";

bool valid_key(std::string_view key) {
  if (key.empty()) return false;
  if (key.size() >= kLabels.size() && key.substr(key.size() - kLabels.size()) == kLabels)
    return false;
  return std::all_of(key.begin(), key.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '.' || c == '-';
  });
}

template <typename T>
std::string join(const std::vector<T>& items, std::string_view sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out << sep;
    out << items[i];
  }
  return out.str();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::size_t parse_index(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ReportParseError(line, "expected an index, got '" + std::string(s) + "'");
  return v;
}

std::vector<std::size_t> parse_indices(std::string_view s, std::size_t line) {
  std::vector<std::size_t> out;
  for (auto part : split(s, ',')) out.push_back(parse_index(part, line));
  return out;
}

}  // namespace

void Report::add(std::string key, ReportValue value) {
  if (!valid_key(key)) throw std::invalid_argument("invalid report key '" + key + "'");
  if (find(key)) throw std::invalid_argument("duplicate report key '" + key + "'");
  entries_.push_back({std::move(key), std::move(value)});
}

void Report::scalar(std::string key, std::string value) {
  if (value.find('\n') != std::string::npos)
    throw std::invalid_argument("scalar contains a newline");
  add(std::move(key), std::move(value));
}

void Report::count(std::string key, std::size_t value) { scalar(std::move(key), std::to_string(value)); }

void Report::flag(std::string key, bool value) { scalar(std::move(key), value ? "true" : "false"); }

void Report::list(std::string key, std::vector<std::size_t> items, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != items.size())
    throw std::invalid_argument("label count differs from item count");
  for (const auto& l : labels)
    if (l.find_first_of(",\n") != std::string::npos)
      throw std::invalid_argument("label contains ',' or a newline");
  add(std::move(key), ReportList{std::move(items), std::move(labels)});
}

void Report::table(std::string key, std::vector<std::vector<std::size_t>> rows) {
  add(std::move(key), ReportTable{std::move(rows)});
}

const ReportValue* Report::find(std::string_view key) const {
  for (const auto& e : entries_)
    if (e.key == key) return &e.value;
  return nullptr;
}

ReportParseError::ReportParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string render_machine(const Report& report) {
  std::ostringstream out;
  auto assign = [&](const std::string& lhs, const std::string& rhs) {
    out << lhs << " =";
    if (!rhs.empty()) out << ' ' << rhs;
    out << '\n';
  };
  for (const auto& e : report.entries()) {
    if (auto* s = std::get_if<std::string>(&e.value)) {
      assign(e.key, *s);
    } else if (auto* l = std::get_if<ReportList>(&e.value)) {
      assign(e.key + "[]", join(l->items, ","));
      if (!l->labels.empty()) assign(e.key + std::string(kLabels) + "[]", join(l->labels, ","));
    } else {
      const auto& t = std::get<ReportTable>(e.value);
      assign(e.key + "[" + std::to_string(t.rows.size()) + "]", "");
      for (const auto& row : t.rows) out << join(row, ",") << '\n';
    }
  }
  return out.str();
}

Report parse_machine(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (!text.empty() && text.back() != '\n') throw ReportParseError(lines.size(), "missing final newline");
  Report report;
  std::size_t i = 0;
  auto fail = [&](const std::string& message) -> void { throw ReportParseError(i + 1, message); };
  while (i < lines.size()) {
    std::string_view line = lines[i];
    std::size_t eq = line.find(" =");
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    std::string_view lhs = line.substr(0, eq);
    std::string_view rhs = line.substr(eq + 2);
    if (!rhs.empty()) {
      if (rhs.front() != ' ' || rhs.size() == 1) fail("malformed right-hand side");
      rhs.remove_prefix(1);
    }
    try {
      if (lhs.size() >= 2 && lhs.substr(lhs.size() - 2) == "[]") {
        std::string key(lhs.substr(0, lhs.size() - 2));
        std::vector<std::size_t> items = parse_indices(rhs, i + 1);
        std::vector<std::string> labels;
        std::string label_lhs = key + std::string(kLabels) + "[]";
        if (i + 1 < lines.size() && lines[i + 1].substr(0, label_lhs.size() + 2) == label_lhs + " =") {
          ++i;
          std::string_view lrhs = lines[i].substr(label_lhs.size() + 2);
          if (!lrhs.empty()) {
            if (lrhs.front() != ' ') fail("malformed labels");
            lrhs.remove_prefix(1);
          }
          for (auto part : split(lrhs, ',')) labels.emplace_back(part);
          if (labels.empty() && !items.empty()) labels.emplace_back();
          if (labels.size() != items.size()) fail("label count differs from item count");
          if (labels.empty()) fail("labels for an empty list");
        }
        report.list(std::move(key), std::move(items), std::move(labels));
        ++i;
      } else if (!lhs.empty() && lhs.back() == ']') {
        std::size_t open = lhs.rfind('[');
        if (open == std::string_view::npos) fail("unbalanced '['");
        if (!rhs.empty()) fail("table header has a value");
        std::size_t rows = parse_index(lhs.substr(open + 1, lhs.size() - open - 2), i + 1);
        std::string key(lhs.substr(0, open));
        std::vector<std::vector<std::size_t>> table;
        for (std::size_t r = 0; r < rows; ++r) {
          ++i;
          if (i >= lines.size()) fail("table ends early");
          table.push_back(parse_indices(lines[i], i + 1));
        }
        report.table(std::move(key), std::move(table));
        ++i;
      } else {
        report.scalar(std::string(lhs), std::string(rhs));
        ++i;
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  return report;
}

std::string render_human(const Report& report) {
  std::size_t width = 0;
  for (const auto& e : report.entries()) width = std::max(width, e.key.size());
  std::ostringstream out;
  for (const auto& e : report.entries()) {
    out << e.key << ':' << std::string(width - e.key.size() + 1, ' ');
    if (auto* s = std::get_if<std::string>(&e.value)) {
      out << *s << '\n';
    } else if (auto* l = std::get_if<ReportList>(&e.value)) {
      if (l->items.empty()) {
        out << "(none)\n";
        continue;
      }
      for (std::size_t k = 0; k < l->items.size(); ++k) {
        if (k) out << (l->labels.empty() ? " " : ", ");
        out << l->items[k];
        if (!l->labels.empty()) out << " (" << l->labels[k] << ')';
      }
      out << '\n';
    } else {
      const auto& t = std::get<ReportTable>(e.value);
      out << t.rows.size() << " row" << (t.rows.size() == 1 ? "" : "s") << '\n';
      std::size_t cell = 1;
      for (const auto& row : t.rows)
        for (auto v : row) cell = std::max(cell, std::to_string(v).size());
      for (const auto& row : t.rows) {
        out << "   ";
        for (auto v : row) {
          std::string s = std::to_string(v);
          out << ' ' << std::string(cell - s.size(), ' ') << s;
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace xmlift
