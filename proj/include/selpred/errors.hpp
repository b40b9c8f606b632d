#pragma once

#include <stdexcept>
#include <string>

namespace selpred {

// Input text could not be parsed; message carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// The requested solution does not exist (disconnected terminals, target
// exceeding the total size, ...).
class InfeasibleError : public std::runtime_error {
public:
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact oracle was asked to solve an instance beyond its size guard.
class OracleLimitError : public std::runtime_error {
public:
  explicit OracleLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace selpred
