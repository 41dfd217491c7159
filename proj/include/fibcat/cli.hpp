#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fibcat/report.hpp"

namespace fibcat::cli {

struct Options {
  std::string fixtures = "fixtures";  // check-all bundle directory
  std::string output;                 // file to emit (dual, phi, xi)
  std::string morphism;               // factorize: one morphism only
  bool span = false;                  // double: span double of a system file
  bool interchange = false;           // double --span: exhaustive interchange
};

struct CheckRequest {
  std::string command;
  std::vector<std::string> inputs;
  Options options;
};

/// Wrong command, missing inputs or a wrong input kind; exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& commands();

/// Dispatches one command. Module diagnostics become failed reports carrying
/// the diagnostic verbatim; ParseError and usage errors propagate.
Report run(const CheckRequest& req);

/// Runs every entry of `<dir>/bundle.json`; an entry passes when its verdict
/// matches the expected one.
Report check_all(const std::string& dir);

}  // namespace fibcat::cli
