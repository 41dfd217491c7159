#include "fibcat/error.hpp"

namespace fibcat {
namespace {

std::string format_message(ErrorKind kind, const std::string& clause,
                           const std::vector<std::string>& witnesses) {
  std::string out{to_string(kind)};
  out += ": ";
  out += clause;
  if (!witnesses.empty()) {
    out += " [";
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      if (i) out += ", ";
      out += witnesses[i];
    }
    out += "]";
  }
  return out;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::NotCartesian: return "NotCartesian";
    case ErrorKind::NotAFibration: return "NotAFibration";
    case ErrorKind::NoEnoughInjectives: return "NoEnoughInjectives";
    case ErrorKind::ClassNotPreserved: return "ClassNotPreserved";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::PullbackMissing: return "PullbackMissing";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string clause, std::vector<std::string> witnesses)
    : std::runtime_error(format_message(kind, clause, witnesses)),
      kind_(kind),
      clause_(std::move(clause)),
      witnesses_(std::move(witnesses)) {}

}  // namespace fibcat
