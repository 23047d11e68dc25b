#ifndef GODEL_REPORT_HPP
#define GODEL_REPORT_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace godel {

using json = nlohmann::json;

enum class Status { pass, fail, skipped };

const char* to_string(Status s);

/// Result tree of a check. A failing leaf carries the instance id and the data needed to
/// replay it; a passing leaf records what was searched.
struct Report {
  std::string name;
  Status status = Status::pass;
  json detail = json::object();
  std::vector<Report> children;

  Report() = default;
  explicit Report(std::string n) : name(std::move(n)) {}

  bool ok() const { return status != Status::fail; }

  /// Marks the report failed with a replayable instance.
  Report& fail(const std::string& instance, const std::string& message, json data = json::object());
  /// Appends a child; a failing child fails the parent.
  Report& add(Report child);

  /// First failing leaf in depth-first order, or nullptr.
  const Report* first_failure() const;

  json to_json() const;
  /// Indented one-line-per-node rendering.
  std::string to_text() const;
};

}  // namespace godel

#endif  // GODEL_REPORT_HPP
