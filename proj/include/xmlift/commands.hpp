#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xmlift/fixture.hpp"
#include "xmlift/report.hpp"

namespace xmlift {

/// Bad command line: unknown command, missing or ambiguous operand.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOptions {
  std::size_t size_bound = kDefaultSizeBound;
  /// Operand role -> declaration name. Roles: xmod, lifting, morphism,
  /// homotopy, derivation, other, hom, ggaction, ggmorphism. A missing role
  /// defaults to the only declaration of the required kind.
  std::map<std::string, std::string> operands;
  /// Which section of ω to use for `descend`.
  std::size_t section = 0;
};

const std::vector<std::string_view>& command_names();

/// Errors: UsageError, AlgebraError from the underlying computation.
Report run_command(std::string_view command, const FixtureDocument& doc,
                   const CommandOptions& options = {});

/// Built-in catalog groups, for --seed-catalog.
Report catalog_report();

/// Process exit categories.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitSyntax = 3,
  kExitUnresolved = 4,
  kExitValidation = 5,
  kExitSizeBound = 6,
  kExitPrecondition = 7,
  kExitIo = 8,
  kExitDefect = 9,
};

int exit_code_for(const FixtureError& e);
int exit_code_for(const AlgebraError& e);

}  // namespace xmlift
