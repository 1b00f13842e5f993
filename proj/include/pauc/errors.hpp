#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pauc {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the 1-based line number of the offending line.
class parse_error : public error {
  public:
    parse_error(std::size_t line, const std::string &what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// A dataset side (positives or negatives) is empty where both are required.
class empty_class_error : public error {
  public:
    using error::error;
};

/// Invalid parameter combination: degenerate intervals, bad algorithm settings.
class config_error : public error {
  public:
    using error::error;
};

/// Structural data problem: dimension overflow, mismatched vector sizes.
class data_error : public error {
  public:
    using error::error;
};

/// An exhaustive oracle was asked for an instance above its size guard.
class size_guard_error : public error {
  public:
    using error::error;
};

} // namespace pauc
