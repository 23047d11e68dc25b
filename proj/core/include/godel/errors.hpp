#ifndef GODEL_ERRORS_HPP
#define GODEL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace godel {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential object would exceed the base category's size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t requested, std::size_t cap)
      : Error("exponential of size " + std::to_string(requested) + " exceeds cap " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// A brute-force enumeration would visit more candidates than the budget allows.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t count, std::size_t budget)
      : Error("enumeration of " + std::to_string(count) + " candidates exceeds budget " +
              std::to_string(budget)),
        count_(count),
        budget_(budget) {}
  std::size_t count() const { return count_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t count_;
  std::size_t budget_;
};

class NoAdjoint : public Error {
 public:
  using Error::Error;
};

class NoSuchElement : public Error {
 public:
  using Error::Error;
};

class NotAPullback : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class SortError : public Error {
 public:
  using Error::Error;
};

class UnboundSymbol : public Error {
 public:
  using Error::Error;
};

class SideConditionFailed : public Error {
 public:
  using Error::Error;
};

class ClosureHypothesisFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace godel

#endif  // GODEL_ERRORS_HPP
