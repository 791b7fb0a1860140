#pragma once

#include <stdexcept>
#include <string>

namespace ekfrac {

/// Bad arguments, bad configuration, or a spec file that does not validate.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A time-stepping run produced a non-finite state or could not advance.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// A truncated series hit its term cap while the terms were still growing.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem trouble while writing or reading experiment output.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ekfrac
