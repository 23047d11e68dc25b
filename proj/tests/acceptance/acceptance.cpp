// Runs every acceptance criterion and prints one PASS/FAIL line for each. Criterion 10
// reruns 1-9 and requires byte-identical JSON reports.
//   godel_acceptance [--corpus FILE] [--json FILE] [--only K]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "godel/suites.hpp"

namespace {

struct Outcome {
  godel::Report report;
  std::string json;
  double seconds = 0;
};

Outcome run(int k, const std::string& corpus) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o.report = godel::run_criterion(k, corpus);
  } catch (const std::exception& e) {
    o.report = godel::Report("criterion-" + std::to_string(k));
    o.report.fail("criterion-" + std::to_string(k), std::string("exception: ") + e.what());
  }
  o.json = o.report.to_json().dump();
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

void line(int k, bool ok, const std::string& title, double seconds, const std::string& note = "") {
  std::printf("criterion %2d: %s  %s  (%.1f s)%s\n", k, ok ? "PASS" : "FAIL", title.c_str(), seconds,
              note.empty() ? "" : ("  " + note).c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  std::string corpus = std::string(GODEL_TEST_DATA) + "/corpus.txt";
  std::string json_out;
  int only = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--corpus") corpus = argv[i + 1];
    else if (flag == "--json") json_out = argv[i + 1];
    else if (flag == "--only") only = std::stoi(argv[i + 1]);
    else {
      std::cerr << "unknown flag " << flag << "\n";
      return 2;
    }
  }

  bool all = true;
  std::vector<Outcome> first;
  godel::json summary = godel::json::array();
  for (int k = 1; k <= godel::kCriteria; ++k) {
    if (only && k != only) {
      first.push_back({});
      continue;
    }
    Outcome o = run(k, corpus);
    std::string note;
    if (const godel::Report* f = o.report.first_failure())
      note = f->detail.value("instance", f->name) + ": " + f->detail.value("message", std::string());
    line(k, o.report.ok(), godel::criterion_title(k), o.seconds, note);
    all = all && o.report.ok();
    summary.push_back(o.report.to_json());
    first.push_back(std::move(o));
  }

  if (!only || only == 10) {
    const auto t0 = std::chrono::steady_clock::now();
    bool same = true;
    std::string note;
    for (int k = 1; k <= godel::kCriteria; ++k) {
      if (only && first[k - 1].json.empty()) first[k - 1] = run(k, corpus);
      if (run(k, corpus).json != first[k - 1].json) {
        same = false;
        note += " criterion-" + std::to_string(k) + " differs";
      }
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    line(10, same, "two runs of criteria 1-9 give byte-identical JSON reports", s, note);
    all = all && same;
  }

  if (!json_out.empty()) std::ofstream(json_out) << summary.dump(2) << "\n";
  return all ? 0 : 1;
}
