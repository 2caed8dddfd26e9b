#pragma once

#include <stdexcept>
#include <string>

namespace corrocal {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Root bracketing failed (no sign change on the given interval).
class BracketError : public std::runtime_error {
public:
  explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (CSV layout, unsorted timestamps, ...).
class FormatError : public std::runtime_error {
public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative fit failed to converge from all initializations.
class FitError : public std::runtime_error {
public:
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

// Kernel matrix not positive definite after maximum jitter escalation.
class LinAlgError : public std::runtime_error {
public:
  explicit LinAlgError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid run configuration.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Model output carries no variance; sensitivity indices undefined.
class DegenerateError : public std::runtime_error {
public:
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

// Input data set empty or unusable after filtering.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Training loss became non-finite.
class DivergenceError : public std::runtime_error {
public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// I/O failure (missing file, unwritable output).
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace corrocal
