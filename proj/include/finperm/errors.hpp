#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace finperm {

/// Violated precondition of a library operation.
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Input exceeds a hard enumeration bound (factorial blow-up guard).
struct bound_error : std::length_error {
  using std::length_error::length_error;
};

/// Structured input failed validation (bad cycle list, bad serialized form).
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error in a textual input, with byte offset and what was expected.
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t offset, std::string expected)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                           ": expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace finperm
