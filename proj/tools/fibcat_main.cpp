#include <chrono>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibcat/cli.hpp"
#include "fibcat/error.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  // --seedless is a bare switch; CLI11 would otherwise accept --seedless=x.
  for (int i = 1; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seedless=", 11) == 0) {
      std::cerr << "error: --seedless takes no value\n";
      return kUsage;
    }
  }

  CLI::App app{"Checks for factorization systems, fibrations, lenses and spans"};
  app.set_help_flag("-h,--help", "Print this help and exit");

  fibcat::cli::CheckRequest req;
  std::string format = "text";
  bool seedless = false;

  app.add_option("command", req.command, "Check to run")
      ->required()
      ->check(CLI::IsMember(fibcat::cli::commands()));
  app.add_option("inputs", req.inputs, "Input files");
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--fixtures", req.options.fixtures, "Fixture bundle directory for check-all");
  app.add_option("-o,--output", req.options.output, "Write the constructed object to this file");
  app.add_option("--morphism", req.options.morphism, "factorize: only this morphism");
  app.add_flag("--span", req.options.span, "double: span double category of a system file");
  app.add_flag("--interchange", req.options.interchange,
               "double --span: check interchange on every grid");
  app.add_flag("--seedless", seedless, "Accepted for compatibility; runs are always deterministic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    fibcat::Report report = fibcat::cli::run(req);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (format == "structured")
      std::cout << report.to_json().dump(2) << '\n';
    else
      std::cout << report.to_text();
    return report.verdict ? kPass : kFail;
  } catch (const fibcat::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const fibcat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == fibcat::ErrorKind::ParseError ? kUsage : kFail;
  }
}
