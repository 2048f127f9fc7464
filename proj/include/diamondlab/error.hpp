#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diamondlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `index()` is the offending character position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t index)
      : Error(message + " (at index " + std::to_string(index) + ")"), index_(index) {}

  [[nodiscard]] std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A closure or orbit grew past the configured element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A checked claim did not hold. `witnesses()` lists the counterexamples in
/// a printable form (codec strings, subsets, permutations).
class VerificationError : public Error {
 public:
  VerificationError(const std::string& message, std::vector<std::string> witnesses = {})
      : Error(message), witnesses_(std::move(witnesses)) {}

  [[nodiscard]] const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  std::vector<std::string> witnesses_;
};

}  // namespace diamondlab
