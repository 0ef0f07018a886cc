#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "xmlift/commands.hpp"

namespace {

struct Args {
  std::string command;
  std::string fixture;
  std::string format = "human";
  std::size_t size_bound = xmlift::kDefaultSizeBound;
  bool seed_catalog = false;
  std::size_t section = 0;
  std::map<std::string, std::string> operands;
};

int emit(const xmlift::Report& report, const std::string& format) {
  std::cout << (format == "machine" ? xmlift::render_machine(report) : xmlift::render_human(report));
  return xmlift::kExitOk;
}

int fail(int code, std::string_view category, const std::string& message) {
  std::cerr << "xmlift: " << category << ": " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Args args;
  CLI::App app{"Finite crossed modules, liftings, homotopies and derivations"};
  app.set_version_flag("--version", "xmlift 1.0");
  std::string commands;
  for (auto c : xmlift::command_names()) commands += (commands.empty() ? "" : ", ") + std::string(c);
  app.add_option("command", args.command, "One of: " + commands);
  app.add_option("--fixture", args.fixture, "Fixture file");
  app.add_option("--format", args.format, "Report format")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--size-bound", args.size_bound, "Largest group order for enumerations")
      ->check(CLI::PositiveNumber);
  app.add_flag("--seed-catalog", args.seed_catalog, "List the built-in catalog groups");
  app.add_option("--section", args.section, "Section index for descend");
  for (const char* role : {"xmod", "lifting", "morphism", "homotopy", "derivation", "other", "hom",
                           "ggaction", "ggmorphism"}) {
    app.add_option_function<std::string>(
        std::string("--") + role, [&args, role](const std::string& v) { args.operands[role] = v; },
        std::string("Declaration to use as the ") + role + " operand");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return xmlift::kExitUsage;
  }

  if (args.seed_catalog) return emit(xmlift::catalog_report(), args.format);
  if (args.command.empty()) return fail(xmlift::kExitUsage, "usage", "missing command; try --help");
  bool known = false;
  for (auto c : xmlift::command_names()) known = known || c == args.command;
  if (!known) return fail(xmlift::kExitUsage, "usage", "unknown command '" + args.command + "'");
  if (args.fixture.empty()) return fail(xmlift::kExitUsage, "usage", "--fixture is required");

  std::ifstream in(args.fixture, std::ios::binary);
  if (!in) return fail(xmlift::kExitIo, "io", "cannot read '" + args.fixture + "'");
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) return fail(xmlift::kExitIo, "io", "error reading '" + args.fixture + "'");

  try {
    xmlift::FixtureDocument doc = xmlift::parse_fixture(text.str(), args.size_bound);
    xmlift::CommandOptions options;
    options.size_bound = args.size_bound;
    options.operands = args.operands;
    options.section = args.section;
    xmlift::Report report = xmlift::run_command(args.command, doc, options);
    return emit(report, args.format);
  } catch (const xmlift::FixtureError& e) {
    return fail(xmlift::exit_code_for(e), xmlift::to_string(e.kind()), args.fixture + ":" + e.what());
  } catch (const xmlift::UsageError& e) {
    return fail(xmlift::kExitUsage, "usage", e.what());
  } catch (const xmlift::AlgebraError& e) {
    const int code = xmlift::exit_code_for(e);
    return fail(code, code == xmlift::kExitDefect ? "defect" : "precondition", e.what());
  }
}
