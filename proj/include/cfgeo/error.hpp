#pragma once

#include <stdexcept>
#include <string>

namespace cfgeo {

// Caller violated an operation's stated contract (bad ids, mismatched sizes, bad parameters).
class contract_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A geometric precondition (height bound, instance kind) does not hold.
class precondition_error : public contract_error {
public:
  using contract_error::contract_error;
};

// Malformed text input.
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// An internal certificate check failed. Always a bug.
class invariant_violation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace cfgeo
