#include "godel/report.hpp"

namespace godel {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

Report& Report::fail(const std::string& instance, const std::string& message, json data) {
  status = Status::fail;
  detail["instance"] = instance;
  detail["message"] = message;
  if (!data.is_null() && !(data.is_object() && data.empty())) detail["counterexample"] = std::move(data);
  return *this;
}

Report& Report::add(Report child) {
  if (child.status == Status::fail) status = Status::fail;
  children.push_back(std::move(child));
  return *this;
}

const Report* Report::first_failure() const {
  if (status != Status::fail) return nullptr;
  for (const Report& c : children)
    if (const Report* r = c.first_failure()) return r;
  return this;
}

json Report::to_json() const {
  json j;
  j["name"] = name;
  j["status"] = godel::to_string(status);
  if (!detail.empty()) j["detail"] = detail;
  if (!children.empty()) {
    json arr = json::array();
    for (const Report& c : children) arr.push_back(c.to_json());
    j["children"] = std::move(arr);
  }
  return j;
}

namespace {

void render(const Report& r, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += r.status == Status::pass ? "PASS " : r.status == Status::fail ? "FAIL " : "SKIP ";
  out += r.name;
  for (const char* key : {"instances", "window", "summary"})
    if (r.detail.contains(key)) out += std::string("  ") + key + "=" + r.detail[key].dump();
  out += "\n";
  if (r.status == Status::fail && r.detail.contains("message")) {
    out.append(static_cast<std::size_t>(depth) * 2 + 4, ' ');
    out += r.detail["instance"].get<std::string>() + ": " + r.detail["message"].get<std::string>();
    if (r.detail.contains("counterexample")) out += " " + r.detail["counterexample"].dump();
    out += "\n";
  }
  for (const Report& c : r.children) render(c, depth + 1, out);
}

}  // namespace

std::string Report::to_text() const {
  std::string out;
  render(*this, 0, out);
  return out;
}

}  // namespace godel
