#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgda {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by operations that need a connected graph. Carries the component
// split so callers can report which parts were disconnected.
class DisconnectedGraphError : public Error {
 public:
  DisconnectedGraphError(std::string what, std::vector<std::vector<int>> components)
      : Error(std::move(what)), components_(std::move(components)) {}

  const std::vector<std::vector<int>>& components() const noexcept { return components_; }

 private:
  std::vector<std::vector<int>> components_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hgda
