#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synlat {

/// Malformed regex or term text. `position()` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A construction grew past one of the configured caps in `Budgets`.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computations that must agree did not. Always a bug in this library.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Budgets {
  std::size_t states = 10000;         // canonical DFA states
  std::size_t profiles = 1u << 16;    // realized word profiles
  std::size_t elements = 100000;      // syntactic algebra elements / automaton states
  std::size_t table_cells = 1u << 24; // per operation table
  std::size_t quadruples = 100000000; // reversibility identity instances
};

}  // namespace synlat
