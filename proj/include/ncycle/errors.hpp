#pragma once

#include <stdexcept>
#include <string>

namespace ncycle {

class InvalidN : public std::invalid_argument {
 public:
  explicit InvalidN(const std::string& what) : std::invalid_argument(what) {}
};

/// The even construction's segment set did not close into one cycle.
/// Indicates a bug rather than bad input.
class ConstructionNotACycle : public std::logic_error {
 public:
  explicit ConstructionNotACycle(const std::string& what) : std::logic_error(what) {}
};

/// No polygon rotation produced the expected region count.
class ConstructionFailed : public std::logic_error {
 public:
  explicit ConstructionFailed(const std::string& what) : std::logic_error(what) {}
};

class PerturbationFailed : public std::runtime_error {
 public:
  explicit PerturbationFailed(const std::string& what) : std::runtime_error(what) {}
};

class DisconnectedArrangement : public std::logic_error {
 public:
  explicit DisconnectedArrangement(const std::string& what) : std::logic_error(what) {}
};

class NTooLarge : public std::invalid_argument {
 public:
  explicit NTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ncycle

namespace ncycle {

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ncycle
