#pragma once

#include <stdexcept>
#include <string>

namespace k3bm {

// Precondition violated by the caller (composite modulus, zero input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A certificate leg could not be established. Not evidence of the opposite.
class Inconclusive : public std::runtime_error {
 public:
  Inconclusive(std::string leg, const std::string& what)
      : std::runtime_error(what), leg_(std::move(leg)) {}
  const std::string& leg() const noexcept { return leg_; }

 private:
  std::string leg_;
};

// A recomputed quantity disagrees with a shipped fixture, or a stated
// property failed to hold.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(std::string leg, const std::string& what)
      : std::runtime_error(leg + ": " + what), leg_(std::move(leg)) {}
  const std::string& leg() const noexcept { return leg_; }

 private:
  std::string leg_;
};

}  // namespace k3bm
