#pragma once

#include <stdexcept>
#include <string>

namespace primenf {

/// Bad user input: malformed class data, non-symplectic candidate, bad files.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction produced something that violates a proven invariant.
/// Carries the pipeline stage and a free-form diagnostic bundle.
class InvariantError : public std::logic_error {
 public:
  InvariantError(std::string stage, std::string details)
      : std::logic_error(stage + ": " + details),
        stage_(std::move(stage)),
        details_(std::move(details)) {}

  const std::string& stage() const noexcept { return stage_; }
  const std::string& details() const noexcept { return details_; }

 private:
  std::string stage_;
  std::string details_;
};

/// Raised by unimodular_inverse when |det| != 1.
class NotUnimodularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace primenf
