#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibcat {

enum class ErrorKind {
  MalformedInput,
  AxiomViolation,
  NotCartesian,
  NotAFibration,
  NoEnoughInjectives,
  ClassNotPreserved,
  NotNatural,
  PullbackMissing,
  TypeMismatch,
  ParseError,
  InternalConsistency,
};

std::string_view to_string(ErrorKind kind);

/// Diagnostic raised by every validator in the library.
///
/// `clause` names the violated law ("identity law", "Left 2-of-3", ...) and
/// `witnesses` lists the offending object/morphism names in the order the
/// check encountered them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string clause, std::vector<std::string> witnesses = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& clause() const noexcept { return clause_; }
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  ErrorKind kind_;
  std::string clause_;
  std::vector<std::string> witnesses_;
};

}  // namespace fibcat
