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

#ifndef ALBERTSIM_PROTOCOL_HPP
#define ALBERTSIM_PROTOCOL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "albertsim/automaton.hpp"
#include "albertsim/natural.hpp"

namespace albert::protocol {

enum class StatementKind {
  kSeed,              // seed <u64>
  kSystem,            // system <name> dim=<n>
  kRegister,          // register <name> dim=<n>
  kGodelNumbers,      // godel <name> = numbers <int list>
  kStateAmplitudes,   // state <name> = amplitudes <complex list>
  kObservableGodelDiag,  // observable <name> = godel_diag <registry>
  kGaitCommuting,     // gait <name> = commuting <obs> phases <list>
  kDefineEigenIncluding,  // define <name> = eigen_including current on <reg list> [spread=<f>]
  kMeasure,           // measure <name> -> <register>
  kAssertAccurate,    // assert accurate <name> tol=<float>
  kAssertNoncommute,  // assert noncommute <a> <b> min=<float>
  kAssertCommute,     // assert commute <a> <b> tol=<float>
};

/// One parsed line. Only the fields meaningful for `kind` are populated.
struct Statement {
  StatementKind kind{};
  int line = 0;  // 1-based source line
  std::string name;         // declared or asserted name
  std::string target;       // measure pointer / godel_diag registry / second assert name
  std::uint64_t seed = 0;
  Eigen::Index dim = 0;
  std::vector<Natural> numbers;
  std::vector<Complex> amplitudes;
  std::vector<Complex> phases;
  std::vector<std::string> registers;  // eigen_including scope
  double threshold = 0.0;              // tol= / min=
  double spread = 1.0;                 // eigen_including label spacing
};

struct Scenario {
  std::vector<Statement> statements;
  std::vector<std::string> source_lines;  // verbatim input, for the report echo
};

struct ParseError {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;
  std::string token;  // offending token, possibly empty

  std::string describe() const;  // "line L, column C: message ('token')"
};

/// Thrown by execute() when a statement fails at runtime (dimension or
/// capacity violations); carries the failing statement's source line.
class ExecutionError : public std::runtime_error {
 public:
  ExecutionError(int line, const std::string& message)
      : std::runtime_error(message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Deterministic line parser: '#' starts a comment, blank lines ignored,
/// every referenced name must be declared on an earlier line, exactly one
/// `system` register. Returns the first error with its 1-based position.
std::variant<Scenario, ParseError> parse(std::string_view text);

/// Canonical text form; parse(render(parse(text))) == parse(text).
std::string render(const Scenario& scenario);

/// Runs the statements in order against a fresh chain. Failed assertions are
/// recorded and execution continues; runtime errors throw ExecutionError.
ChainReport execute(const Scenario& scenario);

}  // namespace albert::protocol

#endif  // ALBERTSIM_PROTOCOL_HPP
