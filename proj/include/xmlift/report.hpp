#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace xmlift {

struct ReportList {
  std::vector<std::size_t> items;
  std::vector<std::string> labels;  // empty, or one per item
  bool operator==(const ReportList&) const = default;
};

struct ReportTable {
  std::vector<std::vector<std::size_t>> rows;
  bool operator==(const ReportTable&) const = default;
};

using ReportValue = std::variant<std::string, ReportList, ReportTable>;

struct ReportEntry {
  std::string key;
  ReportValue value;
  bool operator==(const ReportEntry&) const = default;
};

/// Ordered key/value report. Keys match [A-Za-z0-9_.-]+, are unique and may
/// not end in ".labels"; scalars and labels contain no newline, labels no
/// comma. Violations throw std::invalid_argument.
class Report {
 public:
  void scalar(std::string key, std::string value);
  void count(std::string key, std::size_t value);
  void flag(std::string key, bool value);
  void list(std::string key, std::vector<std::size_t> items, std::vector<std::string> labels = {});
  void table(std::string key, std::vector<std::vector<std::size_t>> rows);

  const std::vector<ReportEntry>& entries() const noexcept { return entries_; }
  const ReportValue* find(std::string_view key) const;
  bool operator==(const Report&) const = default;

 private:
  void add(std::string key, ReportValue value);
  std::vector<ReportEntry> entries_;
};

class ReportParseError : public std::runtime_error {
 public:
  ReportParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Line format:
///   key = value
///   key[] = 0,1,2
///   key.labels[] = a,b,c        (directly after its list)
///   key[N] =                    (followed by N comma-joined rows)
std::string render_machine(const Report& report);
Report parse_machine(std::string_view text);

/// Aligned, indented rendering for people; lists show "index (name)".
std::string render_human(const Report& report);

}  // namespace xmlift
