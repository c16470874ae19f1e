#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cgedit {

// Thrown when an operation requires a cograph. Carries an induced P4 a-b-c-d.
class not_a_cograph : public std::runtime_error {
 public:
  explicit not_a_cograph(std::array<int, 4> witness)
      : std::runtime_error("graph is not a cograph: induced P4 " + std::to_string(witness[0]) + "-" +
                           std::to_string(witness[1]) + "-" + std::to_string(witness[2]) + "-" +
                           std::to_string(witness[3])),
        witness_(witness) {}

  const std::array<int, 4>& witness() const noexcept { return witness_; }

 private:
  std::array<int, 4> witness_;
};

// Thrown when an edit set destroys a module of the input graph.
class not_module_preserving : public std::runtime_error {
 public:
  explicit not_module_preserving(std::string broken_module)
      : std::runtime_error("edit set is not module-preserving: module {" + broken_module +
                           "} is broken"),
        module_(std::move(broken_module)) {}

  const std::string& broken_module() const noexcept { return module_; }

 private:
  std::string module_;
};

// A brute-force or exact search refused an instance above its size bound.
class search_limit_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cgedit
