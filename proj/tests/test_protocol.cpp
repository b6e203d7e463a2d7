// Copyright 2026 The albertsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "albertsim/protocol.hpp"
#include "albertsim/report.hpp"
#include "doctest.h"

namespace protocol = albert::protocol;
using albert::ChainReport;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string demo_script_path() {
  return std::string(ALBERTSIM_SOURCE_DIR) + "/scripts/albert_demo.scn";
}

protocol::Scenario parse_ok(const std::string& text) {
  auto result = protocol::parse(text);
  if (auto* err = std::get_if<protocol::ParseError>(&result)) {
    FAIL("unexpected parse error: ", err->describe());
  }
  return std::get<protocol::Scenario>(result);
}

protocol::ParseError parse_fail(const std::string& text) {
  auto result = protocol::parse(text);
  REQUIRE(std::holds_alternative<protocol::ParseError>(result));
  return std::get<protocol::ParseError>(result);
}

const albert::AssertionRecord& assertion_named(const ChainReport& report,
                                               const std::string& name) {
  for (const auto& a : report.assertions) {
    if (a.name == name) return a;
  }
  FAIL("missing assertion: ", name);
  throw std::runtime_error("unreachable");
}

// A minimal valid prefix shared by several failure-path tests.
const char* const kPrefix =
    "seed 1\n"
    "system s dim=2\n"
    "register a1 dim=2\n"
    "godel R = numbers 5 9\n"
    "state psi = amplitudes 1 0\n"
    "observable P = godel_diag R\n";

}  // namespace

TEST_CASE("the shipped demo script parses to the documented statement counts") {
  protocol::Scenario scenario = parse_ok(read_file(demo_script_path()));
  CHECK(scenario.statements.size() == 13);

  std::set<protocol::StatementKind> kinds;
  for (const auto& st : scenario.statements) kinds.insert(st.kind);
  // 9 distinct statement keywords: seed, system, register, godel, state,
  // observable, measure, define, assert.
  std::set<protocol::StatementKind> expected = {
      protocol::StatementKind::kSeed,          protocol::StatementKind::kSystem,
      protocol::StatementKind::kRegister,      protocol::StatementKind::kGodelNumbers,
      protocol::StatementKind::kStateAmplitudes, protocol::StatementKind::kObservableGodelDiag,
      protocol::StatementKind::kMeasure,       protocol::StatementKind::kDefineEigenIncluding,
      protocol::StatementKind::kAssertAccurate, protocol::StatementKind::kAssertNoncommute,
  };
  CHECK(kinds == expected);
}

TEST_CASE("single statements parse with their fields") {
  protocol::Scenario s1 = parse_ok("system s dim=2\n");
  REQUIRE(s1.statements.size() == 1);
  CHECK(s1.statements[0].kind == protocol::StatementKind::kSystem);
  CHECK(s1.statements[0].name == "s");
  CHECK(s1.statements[0].dim == 2);
  CHECK(s1.statements[0].line == 1);

  protocol::Scenario s2 = parse_ok("seed 12345\n");
  CHECK(s2.statements[0].seed == 12345);

  // Comments, blank lines, and missing trailing newline are all fine.
  protocol::Scenario s3 = parse_ok("# comment\n\nseed 7\n  # indented comment\nsystem s dim=3");
  CHECK(s3.statements.size() == 2);
  CHECK(s3.statements[1].line == 5);

  // Complex amplitudes and the spread extension parse.
  protocol::Scenario s4 = parse_ok(std::string(kPrefix) +
                                   "measure P -> a1\n"
                                   "define U1 = eigen_including current on s a1 spread=0.5\n");
  const protocol::Statement& def = s4.statements.back();
  CHECK(def.kind == protocol::StatementKind::kDefineEigenIncluding);
  CHECK(def.registers == std::vector<std::string>{"s", "a1"});
  CHECK(def.spread == 0.5);

  protocol::Scenario s5 = parse_ok(
      "seed 1\nsystem s dim=2\nstate psi = amplitudes 0.6+0.8i -0.1-0.2i\n");
  CHECK(s5.statements[2].amplitudes[0] == albert::Complex(0.6, 0.8));
  CHECK(s5.statements[2].amplitudes[1] == albert::Complex(-0.1, -0.2));
}

TEST_CASE("an undeclared observable in measure is reported by name and line") {
  protocol::ParseError err = parse_fail(
      "system s dim=2\n"
      "state psi = amplitudes 1 0\n"
      "measure P -> a1\n");
  CHECK(err.line == 3);
  CHECK(err.token == "P");
  CHECK(err.message.find("P") != std::string::npos);
}

TEST_CASE("each mutated demo line fails at its own line number") {
  std::string text = read_file(demo_script_path());
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);

  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::string& original = lines[k];
    if (original.empty() || original[0] == '#') continue;
    std::vector<std::string> mutated = lines;
    mutated[k] = "frobnicate 1";
    std::string joined;
    for (const std::string& l : mutated) joined += l + "\n";
    protocol::ParseError err = parse_fail(joined);
    CHECK(err.line == static_cast<int>(k + 1));
  }
}

TEST_CASE("parse errors carry 1-based columns pointing at the bad token") {
  protocol::ParseError e1 = parse_fail("system s dim=x\n");
  CHECK(e1.line == 1);
  CHECK(e1.column == 10);  // "dim=x" starts at column 10

  protocol::ParseError e2 = parse_fail("seed\n");
  CHECK(e2.line == 1);
  CHECK(e2.column > 1);  // points past the keyword

  protocol::ParseError e3 = parse_fail(std::string(kPrefix) + "measure P ->\n");
  CHECK(e3.line == 7);
}

TEST_CASE("declaration and ordering rules are enforced at parse time") {
  // Two seeds.
  CHECK(parse_fail("seed 1\nseed 2\n").line == 2);
  // Two systems.
  CHECK(parse_fail("system s dim=2\nsystem t dim=2\n").line == 2);
  // State before system.
  CHECK(parse_fail("state psi = amplitudes 1 0\n").line == 1);
  // Second state.
  CHECK(parse_fail("system s dim=2\nstate a = amplitudes 1 0\nstate b = amplitudes 0 1\n")
            .line == 3);
  // Duplicate name across kinds.
  CHECK(parse_fail("system s dim=2\nregister s dim=2\n").line == 2);
  // define before any measure.
  CHECK(parse_fail(std::string(kPrefix) +
                   "define U1 = eigen_including current on s\n")
            .line == 7);
  // assert accurate before the name was measured.
  CHECK(parse_fail(std::string(kPrefix) + "assert accurate P tol=1e-9\n").line == 7);
  // Unknown assertion kind.
  CHECK(parse_fail(std::string(kPrefix) + "measure P -> a1\nassert wobbly P tol=1\n").line == 8);
  // godel with no numbers.
  CHECK(parse_fail("seed 1\nsystem s dim=2\ngodel R = numbers\n").line == 3);
  // spread below the floor.
  CHECK(parse_fail(std::string(kPrefix) +
                   "measure P -> a1\n"
                   "define U1 = eigen_including current on s a1 spread=1e-9\n")
            .line == 8);
  // Trailing junk after a complete statement.
  CHECK(parse_fail("seed 1 extra\n").line == 1);
}

TEST_CASE("render produces a canonical fixed point of parse") {
  std::string text = read_file(demo_script_path());
  protocol::Scenario once = parse_ok(text);
  std::string rendered = protocol::render(once);
  protocol::Scenario twice = parse_ok(rendered);
  CHECK(protocol::render(twice) == rendered);
  CHECK(twice.statements.size() == once.statements.size());

  // Round trip preserves numeric fields bit-exactly.
  for (std::size_t i = 0; i < once.statements.size(); ++i) {
    CHECK(twice.statements[i].kind == once.statements[i].kind);
    CHECK(twice.statements[i].threshold == once.statements[i].threshold);
    CHECK(twice.statements[i].amplitudes == once.statements[i].amplitudes);
  }
}

TEST_CASE("executing the demo script passes all three assertions") {
  ChainReport report = protocol::execute(parse_ok(read_file(demo_script_path())));
  CHECK(report.kind == "scenario");
  CHECK(report.all_passed());
  CHECK(report.assertions.size() == 3);
  CHECK(assertion_named(report, "accurate P").measured <= 1e-9);
  CHECK(assertion_named(report, "accurate U1").measured <= 1e-9);
  CHECK(assertion_named(report, "noncommute P U1").measured > 1e-6);

  // Deterministic: identical serialized reports across runs.
  ChainReport again = protocol::execute(parse_ok(read_file(demo_script_path())));
  albert::ReportDocument d1{albert::kReportVersion, report, 0.0};
  albert::ReportDocument d2{albert::kReportVersion, again, 0.0};
  CHECK(albert::to_json(d1) == albert::to_json(d2));
}

TEST_CASE("script execution matches the library pipeline bit for bit") {
  // The demo script encodes the same run as the uniform seed-42 chain; the
  // scripted path must land on the same numbers exactly.
  ChainReport scripted = protocol::execute(parse_ok(read_file(demo_script_path())));
  albert::ChainOutcome direct = albert::albert_chain(
      2, {albert::Complex(1.0, 0.0), albert::Complex(1.0, 0.0)}, {2, 4}, 42);
  REQUIRE(scripted.norms.size() >= 2);
  for (const auto& norm : scripted.norms) {
    for (const auto& ref : direct.report.norms) {
      if (norm.name == ref.name) CHECK(norm.value == ref.value);
    }
  }
}

TEST_CASE("a failing assertion is recorded and execution continues") {
  // A gait built to commute with P cannot satisfy a noncommute assertion.
  std::string text = std::string(kPrefix) +
                     "gait W = commuting P phases 1 1\n"
                     "measure P -> a1\n"
                     "assert noncommute P W min=1e-6\n"
                     "assert accurate P tol=1e-9\n";
  ChainReport report = protocol::execute(parse_ok(text));
  CHECK_FALSE(report.all_passed());
  CHECK_FALSE(assertion_named(report, "noncommute P W").pass);
  // The later assertion still ran.
  CHECK(assertion_named(report, "accurate P").pass);

  // And the commute assertion accepts the same pair.
  std::string text2 = std::string(kPrefix) +
                      "gait W = commuting P phases 1 1\n"
                      "measure P -> a1\n"
                      "assert commute P W tol=1e-9\n";
  CHECK(protocol::execute(parse_ok(text2)).all_passed());
}

TEST_CASE("runtime failures throw ExecutionError at the right line") {
  // Pointer too small to hold P's two levels: fails at the measure line (7).
  std::string text =
      "seed 1\n"
      "system s dim=2\n"
      "register a1 dim=1\n"
      "godel R = numbers 5 9\n"
      "state psi = amplitudes 1 0\n"
      "observable P = godel_diag R\n"
      "measure P -> a1\n";
  try {
    protocol::execute(parse_ok(text));
    FAIL("expected ExecutionError");
  } catch (const protocol::ExecutionError& e) {
    CHECK(e.line() == 7);
  }

  // Amplitude count mismatch: fails at the state line (3).
  std::string text2 =
      "seed 1\n"
      "system s dim=2\n"
      "state psi = amplitudes 1 0 0\n";
  try {
    protocol::execute(parse_ok(text2));
    FAIL("expected ExecutionError");
  } catch (const protocol::ExecutionError& e) {
    CHECK(e.line() == 3);
  }

  // More registry numbers than system levels: fails at the godel line (3).
  std::string text3 =
      "seed 1\n"
      "system s dim=2\n"
      "godel R = numbers 5 9 13\n";
  try {
    protocol::execute(parse_ok(text3));
    FAIL("expected ExecutionError");
  } catch (const protocol::ExecutionError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("a degenerate scripted run skips the noncommute assertion") {
  std::string text =
      "seed 42\n"
      "system s dim=2\n"
      "register a1 dim=2\n"
      "register a2 dim=4\n"
      "godel R = numbers 5 9\n"
      "state psi = amplitudes 1 0\n"
      "observable P = godel_diag R\n"
      "measure P -> a1\n"
      "define U1 = eigen_including current on s a1\n"
      "measure U1 -> a2\n"
      "assert accurate P tol=1e-9\n"
      "assert accurate U1 tol=1e-9\n"
      "assert noncommute P U1 min=1e-6\n";
  ChainReport report = protocol::execute(parse_ok(text));
  CHECK(report.degenerate);
  CHECK(assertion_named(report, "noncommute P U1").skipped);
  CHECK(assertion_named(report, "accurate P").pass);
  CHECK(assertion_named(report, "accurate U1").pass);
  CHECK(report.all_passed());
}

TEST_CASE("unnormalized amplitudes are normalized before the run") {
  std::string text =
      "seed 1\n"
      "system s dim=2\n"
      "register a1 dim=2\n"
      "godel R = numbers 5 9\n"
      "state psi = amplitudes 3 4\n"
      "observable P = godel_diag R\n"
      "measure P -> a1\n"
      "assert accurate P tol=1e-9\n";
  ChainReport report = protocol::execute(parse_ok(text));
  CHECK(report.all_passed());
}
