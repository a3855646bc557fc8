#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace revrec {

// Base of every error raised by the library. The CLI maps IoError to exit
// code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "io"; }
};

// A record, argument or value that violates a documented invariant. When the
// problem comes from a file, line() is the 1-based line number (0 otherwise).
class ValidationError : public Error {
 public:
  ValidationError(const std::string& message, std::string field = {}, std::size_t line = 0)
      : Error(message), field_(std::move(field)), line_(line) {}

  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }
  const char* kind() const noexcept override { return "validation"; }

 private:
  std::string field_;
  std::size_t line_;
};

// Malformed embedding-table file.
class FormatError : public Error {
 public:
  FormatError(const std::string& message, std::size_t line)
      : Error(message), line_(line) {}

  std::size_t line() const noexcept { return line_; }
  const char* kind() const noexcept override { return "format"; }

 private:
  std::size_t line_;
};

class EmptyCorpusError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "empty-corpus"; }
};

class EmptyHistoryError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "empty-history"; }
};

// Inconsistent method selection or missing resource (e.g. RC_CS without an
// embedding table).
class ConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "config"; }
};

class CorpusTooSmallError : public Error {
 public:
  CorpusTooSmallError(const std::string& message, std::size_t minimum_size)
      : Error(message), minimum_size_(minimum_size) {}

  std::size_t minimum_size() const noexcept { return minimum_size_; }
  const char* kind() const noexcept override { return "corpus-too-small"; }

 private:
  std::size_t minimum_size_;
};

}  // namespace revrec
