#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcorner {

/// Base for every error raised by the library. The CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text; carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Unknown names, duplicate names, violated preconditions.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A lazily explored hereditary closure grew past its vertex cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cap)
      : Error("hereditary closure exceeds cap of " + std::to_string(cap) +
              " vertices; no row- and path-finite subtree can be built"),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace gcorner
