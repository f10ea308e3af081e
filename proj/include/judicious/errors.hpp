#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace judicious {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// The caller handed us data that violates a documented contract.
class input_error : public error {
public:
  explicit input_error(const std::string& what) : error(what) {}
};

// A stated precondition of an operation failed; the message names the
// violated inequality.
class precondition_error : public input_error {
public:
  explicit precondition_error(const std::string& what) : input_error(what) {}
};

// Instance text could not be parsed; carries the 1-based line number.
class parse_error : public input_error {
public:
  parse_error(const std::string& what, std::size_t line)
      : input_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// A bound the algorithms guarantee failed to hold at runtime.  Always a bug;
// the message embeds a reproducible dump of the offending state.
class internal_error : public error {
public:
  explicit internal_error(const std::string& what) : error(what) {}
};

// Exhaustive search would exceed the assignment budget.
class budget_error : public error {
public:
  budget_error(const std::string& what, std::uint64_t required)
      : error(what), required_(required) {}

  // Number of assignments the refused search would have to visit.
  std::uint64_t required() const { return required_; }

private:
  std::uint64_t required_;
};

}  // namespace judicious
