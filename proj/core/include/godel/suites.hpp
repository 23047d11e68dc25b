#ifndef GODEL_SUITES_HPP
#define GODEL_SUITES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "godel/doctrine.hpp"
#include "godel/errors.hpp"
#include "godel/principles.hpp"
#include "godel/report.hpp"

namespace godel {

/// A request that names an unknown suite or pairs a suite with a doctrine it cannot run on.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class BaseKind { subsets, trivial, table };
enum class CompletionKind { none, ex, un, dial };

/// Which doctrine a suite runs on: a base doctrine and optionally one completion of it.
struct DoctrineSpec {
  BaseKind base = BaseKind::subsets;
  CompletionKind completion = CompletionKind::none;
  /// Interchange text of the table doctrine when base is table.
  json table;

  /// subsets, ex-of-subsets, un-of-subsets, dial-of-subsets or trivial.
  static DoctrineSpec builtin(const std::string& name);
  static CompletionKind completion_kind(const std::string& name);
  std::string name() const;
};

struct SuiteConfig {
  DoctrineSpec doctrine;
  /// Window cap: largest sort and context size.
  std::size_t cap = 2;
  /// Largest exponential object the base category builds.
  std::size_t base_cap = 4;
  std::size_t budget = 1'000'000;
  bool empty_sorts = false;
  Scope scope = Scope::classes;
  Only only;
  /// Principles suite selection; empty means all of them.
  std::vector<std::string> which;
  /// Carrier sizes of the extraction sweep; empty means 0..cap.
  std::vector<std::size_t> sizes;
  /// Translation suite inputs.
  std::string corpus;
  std::size_t max_carrier = 3;
  std::size_t model_cap = 27;

  Window window() const { return Window{cap, empty_sorts, cap * cap * cap}; }
};

/// Suites: hyperdoctrine, iso, freeness, skolem, godel, principles, extraction, translation.
/// Throws UsageError for unknown names and for suites that need a base doctrine.
Report run_suite(const std::string& suite, const SuiteConfig& c);
std::vector<std::string> suite_names();
/// Names accepted by the principles suite's selection.
std::vector<std::string> principle_names();

/// Objects and arrow counts of T_P and Pred(P), with law and limit reports when asked.
Report run_tripos(const SuiteConfig& c, bool laws, bool count);

/// The fiber over the given object of the configured doctrine, in the interchange format.
json dump_fiber(const SuiteConfig& c, std::size_t fiber);

/// The acceptance criteria, numbered from 1. Criterion 10 compares two runs of the others
/// and is driven by the caller.
inline constexpr int kCriteria = 9;
std::string criterion_title(int k);
Report run_criterion(int k, const std::string& corpus_path);

}  // namespace godel

#endif  // GODEL_SUITES_HPP
