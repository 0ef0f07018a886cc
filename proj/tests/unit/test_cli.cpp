#include <fstream>
#include <sstream>

#include "doctest.h"
#include "xmlift/commands.hpp"

using namespace xmlift;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open ", path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

FixtureError parse_error(std::string_view text) {
  try {
    parse_fixture(text);
  } catch (const FixtureError& e) {
    return e;
  }
  FAIL("fixture parsed unexpectedly");
  return FixtureError(FixtureErrorKind::Syntax, 0, "", "");
}

constexpr std::string_view kZ4Doc =
    "Z4 : group = cyclic 4\n"
    "Z2 : group = cyclic 2\n"
    "p : hom = Z4 -> Z2 : 0 1 0 1\n"
    "t : action = Z2 on Z4 : trivial\n"
    "xm : xmod = boundary p action t\n";

struct GoldenCase {
  std::string name;
  int exit = 0;
  std::string fixture;
  std::string command;
  CommandOptions options;
};

std::vector<GoldenCase> golden_cases() {
  std::istringstream in(read_file(std::string(XMLIFT_GOLDEN_DIR) + "/cases.txt"));
  std::vector<GoldenCase> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    GoldenCase c;
    fields >> c.name >> c.exit >> c.fixture >> c.command;
    std::string flag, value;
    while (fields >> flag >> value) {
      if (flag == "--section") c.options.section = std::stoul(value);
      else c.options.operands[flag.substr(2)] = value;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST_CASE("parse_fixture accepts the crossed-module document") {
  FixtureDocument doc = parse_fixture(kZ4Doc);
  CHECK(doc.declarations.size() == 5);
  REQUIRE(doc.xmods.count("xm") == 1);
  CHECK(classify(*doc.xmods.at("xm")) == TransitivityClass::Transitive);
  CHECK(doc.find("p")->line == 3);
  CHECK(doc.of_kind(DeclKind::Group).size() == 2);
}

TEST_CASE("parse_fixture errors carry kind and line") {
  FixtureError unresolved = parse_error("G : group = cyclic 4\n\nf : hom = G -> H : zero\n");
  CHECK(unresolved.kind() == FixtureErrorKind::Unresolved);
  CHECK(unresolved.line() == 3);
  CHECK(unresolved.name() == "f");

  FixtureError assoc = parse_error("# comment\nG : group = table 0 1 2 3; 1 2 0 0; 2 3 0 1; 3 0 1 2\n");
  CHECK(assoc.kind() == FixtureErrorKind::Validation);
  CHECK(assoc.code() == ErrorCode::NotAssociative);
  CHECK(assoc.line() == 2);

  CHECK(parse_error("G group cyclic 4\n").kind() == FixtureErrorKind::Syntax);
  CHECK(parse_error("G : grup = cyclic 4\n").kind() == FixtureErrorKind::Syntax);
  CHECK(parse_error("G : group = cyclic four\n").kind() == FixtureErrorKind::Syntax);
  CHECK(parse_error("G : group = cyclic 4 5\n").kind() == FixtureErrorKind::Syntax);
  CHECK(parse_error("G : group = cyclic 4\nG : group = klein\n").line() == 2);
  CHECK(parse_error("1G : group = klein\n").kind() == FixtureErrorKind::Syntax);
  CHECK(parse_error("G : group = table 0 1; 1 0 names a\n").kind() == FixtureErrorKind::Syntax);
  // Forward references are unresolved: declarations must come first.
  CHECK(parse_error("f : hom = G -> G : zero\nG : group = klein\n").kind() ==
        FixtureErrorKind::Unresolved);
  // A name of the wrong kind.
  CHECK(parse_error("G : group = klein\nH : subgroup = G : 0\nf : hom = H -> G : zero\n").kind() ==
        FixtureErrorKind::Unresolved);
  FixtureError cm2 = parse_error(std::string(kZ4Doc.substr(0, kZ4Doc.find("t :"))) +
                                 "n : action = Z2 on Z4 : 0 1 2 3; 0 3 2 1\n"
                                 "xm : xmod = boundary p action n\n");
  CHECK(cm2.code() == ErrorCode::CM2Violation);
  CHECK(cm2.line() == 5);
  FixtureError big = parse_error("G : group = cyclic 100000\n");
  CHECK(big.code() == ErrorCode::SizeBound);
  CHECK(exit_code_for(big) == kExitSizeBound);
}

TEST_CASE("parse_fixture handles every declaration kind") {
  std::string text = read_file(std::string(XMLIFT_FIXTURE_DIR) + "/homotopy.xfix");
  FixtureDocument doc = parse_fixture(text);
  CHECK(doc.homotopies.count("h") == 1);
  doc = parse_fixture(read_file(std::string(XMLIFT_FIXTURE_DIR) + "/groupoid.xfix"));
  CHECK(doc.gg_morphisms.size() == 2);
  doc = parse_fixture(read_file(std::string(XMLIFT_FIXTURE_DIR) + "/sections.xfix"));
  CHECK(doc.derivations.at("dt").xm()->B()->order() == 4);
  doc = parse_fixture("S : group = table 0 1; 1 0 names e s\nT : group = trivial\n"
                      "c : action = S on S : conjugation\n"
                      "D : groupgroupoid = discrete S\n"
                      "z : hom = S -> S : identity\n"
                      "a : ggaction = discrete D z\n"
                      "m : ggmorphism = discrete z\n");
  CHECK(doc.groups.at("S")->name(1) == "s");
}

TEST_CASE("report machine format round-trips") {
  Report r;
  r.scalar("name", "a value with spaces = and more");
  r.scalar("empty", "");
  r.scalar("padded", " x ");
  r.count("n", 42);
  r.flag("ok", true);
  r.list("plain", {0, 1, 2});
  r.list("none", {});
  r.list("named", {0, 3}, {"()", "(1 2 3)"});
  r.list("blank.label", {5}, {""});
  r.table("t", {{0, 1}, {1, 0}});
  r.table("empty.table", {});
  r.table("ragged", {{}, {7}});
  std::string text = render_machine(r);
  CHECK(parse_machine(text) == r);
  CHECK(render_machine(parse_machine(text)) == text);
  CHECK(render_human(parse_machine(text)) == render_human(r));
  CHECK(text.find("named.labels[] = (),(1 2 3)\n") != std::string::npos);
  CHECK(text.find("t[2] =\n0,1\n1,0\n") != std::string::npos);
}

TEST_CASE("report rejects invalid keys and malformed text") {
  Report r;
  CHECK_THROWS_AS(r.scalar("bad key", "x"), std::invalid_argument);
  CHECK_THROWS_AS(r.scalar("x.labels", "x"), std::invalid_argument);
  CHECK_THROWS_AS(r.scalar("x", "a\nb"), std::invalid_argument);
  CHECK_THROWS_AS(r.list("x", {1}, {"a,b"}), std::invalid_argument);
  CHECK_THROWS_AS(r.list("x", {1, 2}, {"a"}), std::invalid_argument);
  r.count("x", 1);
  CHECK_THROWS_AS(r.count("x", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_machine("no equals sign\n"), ReportParseError);
  CHECK_THROWS_AS(parse_machine("a[] = 1,x\n"), ReportParseError);
  CHECK_THROWS_AS(parse_machine("t[2] =\n1\n"), ReportParseError);
  CHECK_THROWS_AS(parse_machine("a = 1\na = 2\n"), ReportParseError);
  CHECK_THROWS_AS(parse_machine("a = 1"), ReportParseError);
  CHECK(parse_machine("") == Report{});
}

TEST_CASE("run_command examples") {
  FixtureDocument doc = parse_fixture(read_file(std::string(XMLIFT_FIXTURE_DIR) + "/z4_mod2.xfix"));
  CommandOptions opts;
  opts.operands["xmod"] = "base";
  Report d = run_command("derivations", doc, opts);
  CHECK(std::get<std::string>(*d.find("count")) == "2");
  CHECK(std::get<std::string>(*d.find("unit_count")) == "2");
  CHECK(std::get<ReportTable>(*d.find("product")).rows ==
        std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});
  Report l = run_command("liftings", doc, opts);
  CHECK(std::get<std::string>(*l.find("count")) == "2");
  CHECK(std::get<ReportList>(*l.find("lifting.1.C")).items == std::vector<std::size_t>{0, 2});
  Report c = run_command("check", doc);
  CHECK(std::get<std::string>(*c.find("status")) == "ok");

  CHECK_THROWS_AS(run_command("frobnicate", doc), UsageError);
  CHECK_THROWS_AS(run_command("lift-morphism", doc), UsageError);
  CommandOptions wrong;
  wrong.operands["xmod"] = "Z4";
  CHECK_THROWS_AS(run_command("classify", doc, wrong), UsageError);
  wrong.operands["xmod"] = "nothing";
  CHECK_THROWS_AS(run_command("classify", doc, wrong), UsageError);
  CommandOptions refused;
  refused.operands = {{"morphism", "id"}, {"lifting", "L0"}};
  try {
    run_command("lift-morphism", doc, refused);
    FAIL("expected KernelConditionFails");
  } catch (const AlgebraError& e) {
    CHECK(e.code() == ErrorCode::KernelConditionFails);
    CHECK(exit_code_for(e) == kExitPrecondition);
  }
  CHECK(command_names().size() == 15);
}

TEST_CASE("golden reports match the in-memory reports in both formats") {
  std::size_t checked = 0;
  for (const auto& c : golden_cases()) {
    if (c.exit != 0) continue;
    CAPTURE(c.name);
    FixtureDocument doc = parse_fixture(read_file(std::string(XMLIFT_FIXTURE_DIR) + "/" + c.fixture));
    Report report = run_command(c.command, doc, c.options);
    std::string machine = read_file(std::string(XMLIFT_GOLDEN_DIR) + "/" + c.name + ".machine.txt");
    std::string human = read_file(std::string(XMLIFT_GOLDEN_DIR) + "/" + c.name + ".human.txt");
    CHECK(render_machine(report) == machine);
    Report parsed = parse_machine(machine);
    CHECK(parsed == report);
    CHECK(render_human(parsed) == human);
    ++checked;
  }
  CHECK(checked >= 15);
}

TEST_CASE("exit code categories are distinct") {
  CHECK(exit_code_for(FixtureError(FixtureErrorKind::Syntax, 1, "", "")) == kExitSyntax);
  CHECK(exit_code_for(FixtureError(FixtureErrorKind::Unresolved, 1, "", "")) == kExitUnresolved);
  CHECK(exit_code_for(FixtureError(FixtureErrorKind::Validation, 1, "", "", ErrorCode::CM1Violation)) ==
        kExitValidation);
  CHECK(exit_code_for(AlgebraError(ErrorCode::SizeBound, "")) == kExitSizeBound);
  CHECK(exit_code_for(AlgebraError(ErrorCode::FormulaMismatch, "")) == kExitDefect);
  CHECK(exit_code_for(AlgebraError(ErrorCode::NotASection, "")) == kExitPrecondition);
}
