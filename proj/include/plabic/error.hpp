#pragma once

#include <stdexcept>
#include <string>

namespace plabic {

// Unreadable input: files or literals that do not parse at all.
// CLI exit code 1.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad files, broken structural invariants, out-of-range
// arguments. CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated mathematical precondition on well-formed input: no bridge at the
// requested site, asymmetric input to a symmetric routine, and so on.
// CLI exit code 3.
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace plabic
