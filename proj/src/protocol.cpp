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

#include "albertsim/protocol.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

namespace albert::protocol {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back(Token{std::string(line.substr(start, i - start)),
                           static_cast<int>(start) + 1});
  }
  return tokens;
}

// Raised internally while parsing a line; converted to a ParseError with the
// line number attached.
struct LineError {
  int column;
  std::string message;
  std::string token;
};

[[noreturn]] void fail(const Token& t, const std::string& message) {
  throw LineError{t.column, message, t.text};
}

[[noreturn]] void fail_at_end(const std::vector<Token>& tokens, const std::string& message) {
  const int col = tokens.empty() ? 1 : tokens.back().column + static_cast<int>(tokens.back().text.size());
  throw LineError{col, message, ""};
}

const Token& expect(const std::vector<Token>& tokens, std::size_t index,
                    const std::string& what) {
  if (index >= tokens.size()) fail_at_end(tokens, "expected " + what);
  return tokens[index];
}

void expect_literal(const std::vector<Token>& tokens, std::size_t index,
                    std::string_view literal) {
  const Token& t = expect(tokens, index, "'" + std::string(literal) + "'");
  if (t.text != literal) fail(t, "expected '" + std::string(literal) + "'");
}

void expect_end(const std::vector<Token>& tokens, std::size_t index) {
  if (index < tokens.size()) fail(tokens[index], "unexpected trailing token");
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string parse_name(const Token& t) {
  if (!is_identifier(t.text)) fail(t, "expected a name");
  return t.text;
}

// Splits "key=value"; fails unless the key matches.
std::string keyed_value(const Token& t, std::string_view key) {
  const std::size_t eq = t.text.find('=');
  if (eq == std::string::npos || t.text.substr(0, eq) != key) {
    fail(t, "expected " + std::string(key) + "=<value>");
  }
  std::string value = t.text.substr(eq + 1);
  if (value.empty()) fail(t, "empty value after '='");
  return value;
}

Eigen::Index parse_dim(const Token& t) {
  const std::string value = keyed_value(t, "dim");
  char* end = nullptr;
  const long long v = std::strtoll(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0' || v < 1) {
    fail(t, "dimension must be a positive integer");
  }
  return static_cast<Eigen::Index>(v);
}

std::uint64_t parse_seed(const Token& t) {
  if (t.text.empty() || t.text[0] == '-' ||
      !std::all_of(t.text.begin(), t.text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    fail(t, "seed must be a non-negative integer");
  }
  char* end = nullptr;
  const std::uint64_t v = std::strtoull(t.text.c_str(), &end, 10);
  if (*end != '\0') fail(t, "seed must be a non-negative integer");
  return v;
}

double parse_threshold(const Token& t, std::string_view key) {
  const std::string value = keyed_value(t, key);
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0' || !(v >= 0.0)) {
    fail(t, "threshold must be a non-negative number");
  }
  return v;
}

Natural parse_code_number(const Token& t) {
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    fail(t, "code numbers are decimal naturals");
  }
  Natural n = Natural::from_decimal(t.text);
  if (n.is_zero()) fail(t, "code numbers start at 1");
  return n;
}

// `re` or `re+imi` / `re-imi` literal, e.g. 0.70710678 or 0.5-0.5i.
Complex parse_complex(const Token& t) {
  const char* s = t.text.c_str();
  char* end = nullptr;
  const double re = std::strtod(s, &end);
  if (end == s) fail(t, "expected a number");
  if (*end == '\0') return Complex(re, 0.0);
  if (*end != '+' && *end != '-') fail(t, "malformed complex literal");
  const char* imag_start = end;
  const double im = std::strtod(imag_start, &end);
  if (end == imag_start || *end != 'i' || *(end + 1) != '\0') {
    fail(t, "malformed complex literal (expected re+imi)");
  }
  return Complex(re, im);
}

// Parse-time declaration table: what each name is, to validate references.
enum class NameKind { kRegister, kSystem, kRegistry, kState, kObservable, kGait, kDefine };

struct ParseContext {
  std::map<std::string, NameKind> names;
  bool seen_seed = false;
  bool seen_system = false;
  bool seen_state = false;
  bool seen_measure = false;
  std::vector<std::string> measured;  // observable/define names measured so far

  void declare(const Token& t, NameKind kind) {
    const std::string name = parse_name(t);
    if (names.count(name) != 0) fail(t, "name '" + name + "' is already declared");
    names.emplace(name, kind);
  }

  NameKind lookup(const Token& t) const {
    const auto it = names.find(t.text);
    if (it == names.end()) fail(t, "name '" + t.text + "' is not declared");
    return it->second;
  }

  void require_kind(const Token& t, std::initializer_list<NameKind> kinds,
                    const std::string& what) const {
    const NameKind kind = lookup(t);
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
      fail(t, "'" + t.text + "' is not " + what);
    }
  }
};

Statement parse_statement(const std::vector<Token>& tokens, int line, ParseContext& ctx) {
  Statement st;
  st.line = line;
  const Token& head = tokens[0];
  const std::string& kw = head.text;

  if (kw == "seed") {
    if (ctx.seen_seed) fail(head, "seed is already set");
    st.kind = StatementKind::kSeed;
    st.seed = parse_seed(expect(tokens, 1, "seed value"));
    expect_end(tokens, 2);
    ctx.seen_seed = true;
  } else if (kw == "system") {
    if (ctx.seen_system) fail(head, "system register is already declared");
    st.kind = StatementKind::kSystem;
    st.name = parse_name(expect(tokens, 1, "register name"));
    st.dim = parse_dim(expect(tokens, 2, "dim=<n>"));
    expect_end(tokens, 3);
    ctx.declare(tokens[1], NameKind::kSystem);
    ctx.seen_system = true;
  } else if (kw == "register") {
    st.kind = StatementKind::kRegister;
    st.name = parse_name(expect(tokens, 1, "register name"));
    st.dim = parse_dim(expect(tokens, 2, "dim=<n>"));
    expect_end(tokens, 3);
    ctx.declare(tokens[1], NameKind::kRegister);
  } else if (kw == "godel") {
    st.kind = StatementKind::kGodelNumbers;
    st.name = parse_name(expect(tokens, 1, "registry name"));
    expect_literal(tokens, 2, "=");
    expect_literal(tokens, 3, "numbers");
    if (tokens.size() < 5) fail_at_end(tokens, "expected at least one code number");
    for (std::size_t i = 4; i < tokens.size(); ++i) {
      st.numbers.push_back(parse_code_number(tokens[i]));
    }
    ctx.declare(tokens[1], NameKind::kRegistry);
  } else if (kw == "state") {
    if (!ctx.seen_system) fail(head, "declare the system register before the state");
    if (ctx.seen_state) fail(head, "state is already prepared");
    st.kind = StatementKind::kStateAmplitudes;
    st.name = parse_name(expect(tokens, 1, "state name"));
    expect_literal(tokens, 2, "=");
    expect_literal(tokens, 3, "amplitudes");
    if (tokens.size() < 5) fail_at_end(tokens, "expected at least one amplitude");
    for (std::size_t i = 4; i < tokens.size(); ++i) {
      st.amplitudes.push_back(parse_complex(tokens[i]));
    }
    ctx.declare(tokens[1], NameKind::kState);
    ctx.seen_state = true;
  } else if (kw == "observable") {
    st.kind = StatementKind::kObservableGodelDiag;
    st.name = parse_name(expect(tokens, 1, "observable name"));
    expect_literal(tokens, 2, "=");
    expect_literal(tokens, 3, "godel_diag");
    const Token& reg = expect(tokens, 4, "registry name");
    ctx.require_kind(reg, {NameKind::kRegistry}, "a code-number registry");
    st.target = reg.text;
    expect_end(tokens, 5);
    ctx.declare(tokens[1], NameKind::kObservable);
  } else if (kw == "gait") {
    st.kind = StatementKind::kGaitCommuting;
    st.name = parse_name(expect(tokens, 1, "gait name"));
    expect_literal(tokens, 2, "=");
    expect_literal(tokens, 3, "commuting");
    const Token& obs = expect(tokens, 4, "observable name");
    ctx.require_kind(obs, {NameKind::kObservable}, "an observable");
    st.target = obs.text;
    expect_literal(tokens, 5, "phases");
    if (tokens.size() < 7) fail_at_end(tokens, "expected at least one phase");
    for (std::size_t i = 6; i < tokens.size(); ++i) {
      st.phases.push_back(parse_complex(tokens[i]));
    }
    ctx.declare(tokens[1], NameKind::kGait);
  } else if (kw == "define") {
    if (!ctx.seen_state) fail(head, "'current' needs a prepared state");
    if (!ctx.seen_measure) {
      fail(head, "eigen_including needs a preceding measurement as its non-commutation reference");
    }
    st.kind = StatementKind::kDefineEigenIncluding;
    st.name = parse_name(expect(tokens, 1, "name"));
    expect_literal(tokens, 2, "=");
    expect_literal(tokens, 3, "eigen_including");
    expect_literal(tokens, 4, "current");
    expect_literal(tokens, 5, "on");
    std::size_t i = 6;
    for (; i < tokens.size(); ++i) {
      if (tokens[i].text.find('=') != std::string::npos) break;  // spread=...
      ctx.require_kind(tokens[i], {NameKind::kSystem, NameKind::kRegister}, "a register");
      st.registers.push_back(tokens[i].text);
    }
    if (st.registers.empty()) fail_at_end(tokens, "expected at least one register");
    if (i < tokens.size()) {
      st.spread = parse_threshold(tokens[i], "spread");
      if (st.spread < 1e-4) fail(tokens[i], "spread below 1e-4 would blur measurement levels");
      expect_end(tokens, i + 1);
    }
    ctx.declare(tokens[1], NameKind::kDefine);
  } else if (kw == "measure") {
    st.kind = StatementKind::kMeasure;
    const Token& obs = expect(tokens, 1, "observable name");
    ctx.require_kind(obs, {NameKind::kObservable, NameKind::kDefine}, "a measurable observable");
    if (!ctx.seen_state) fail(head, "prepare a state before measuring");
    st.name = obs.text;
    expect_literal(tokens, 2, "->");
    const Token& reg = expect(tokens, 3, "pointer register");
    ctx.require_kind(reg, {NameKind::kRegister}, "a pointer register");
    st.target = reg.text;
    expect_end(tokens, 4);
    ctx.seen_measure = true;
    ctx.measured.push_back(st.name);
  } else if (kw == "assert") {
    const Token& mode = expect(tokens, 1, "assertion kind");
    if (mode.text == "accurate") {
      st.kind = StatementKind::kAssertAccurate;
      const Token& obs = expect(tokens, 2, "observable name");
      ctx.require_kind(obs, {NameKind::kObservable, NameKind::kDefine},
                       "a measurable observable");
      if (std::find(ctx.measured.begin(), ctx.measured.end(), obs.text) ==
          ctx.measured.end()) {
        fail(obs, "'" + obs.text + "' has no record yet: measure it first");
      }
      st.name = obs.text;
      st.threshold = parse_threshold(expect(tokens, 3, "tol=<float>"), "tol");
      expect_end(tokens, 4);
    } else if (mode.text == "noncommute" || mode.text == "commute") {
      st.kind = mode.text == "noncommute" ? StatementKind::kAssertNoncommute
                                          : StatementKind::kAssertCommute;
      const Token& a = expect(tokens, 2, "first operator name");
      const Token& b = expect(tokens, 3, "second operator name");
      for (const Token* t : {&a, &b}) {
        ctx.require_kind(*t, {NameKind::kObservable, NameKind::kGait, NameKind::kDefine},
                         "an operator");
      }
      st.name = a.text;
      st.target = b.text;
      st.threshold = parse_threshold(
          expect(tokens, 4, mode.text == "noncommute" ? "min=<float>" : "tol=<float>"),
          mode.text == "noncommute" ? "min" : "tol");
      expect_end(tokens, 5);
    } else {
      fail(mode, "unknown assertion kind (accurate, noncommute, commute)");
    }
  } else {
    fail(head, "unknown keyword");
  }
  return st;
}

}  // namespace

std::string ParseError::describe() const {
  std::ostringstream out;
  out << "line " << line << ", column " << column << ": " << message;
  if (!token.empty()) out << " ('" << token << "')";
  return out.str();
}

std::variant<Scenario, ParseError> parse(std::string_view text) {
  Scenario scenario;
  ParseContext ctx;
  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                          : eol - pos);
    if (!(eol == std::string_view::npos && raw.empty())) {
      ++line_number;
      std::string_view line = raw;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      scenario.source_lines.emplace_back(line);
      const std::size_t hash = line.find('#');
      if (hash != std::string_view::npos) line = line.substr(0, hash);
      const std::vector<Token> tokens = tokenize(line);
      if (!tokens.empty()) {
        try {
          scenario.statements.push_back(parse_statement(tokens, line_number, ctx));
        } catch (const LineError& e) {
          return ParseError{line_number, e.column, e.message, e.token};
        }
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return scenario;
}

namespace {

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex_literal(const Complex& c) {
  if (c.imag() == 0.0) return format_g17(c.real());
  std::string s = format_g17(c.real());
  s += (c.imag() < 0 ? "-" : "+");
  s += format_g17(std::abs(c.imag()));
  s += "i";
  return s;
}

}  // namespace

std::string render(const Scenario& scenario) {
  std::ostringstream out;
  for (const Statement& st : scenario.statements) {
    switch (st.kind) {
      case StatementKind::kSeed:
        out << "seed " << st.seed;
        break;
      case StatementKind::kSystem:
        out << "system " << st.name << " dim=" << st.dim;
        break;
      case StatementKind::kRegister:
        out << "register " << st.name << " dim=" << st.dim;
        break;
      case StatementKind::kGodelNumbers:
        out << "godel " << st.name << " = numbers";
        for (const Natural& n : st.numbers) out << ' ' << n.to_decimal();
        break;
      case StatementKind::kStateAmplitudes:
        out << "state " << st.name << " = amplitudes";
        for (const Complex& c : st.amplitudes) out << ' ' << format_complex_literal(c);
        break;
      case StatementKind::kObservableGodelDiag:
        out << "observable " << st.name << " = godel_diag " << st.target;
        break;
      case StatementKind::kGaitCommuting:
        out << "gait " << st.name << " = commuting " << st.target << " phases";
        for (const Complex& c : st.phases) out << ' ' << format_complex_literal(c);
        break;
      case StatementKind::kDefineEigenIncluding:
        out << "define " << st.name << " = eigen_including current on";
        for (const std::string& r : st.registers) out << ' ' << r;
        if (st.spread != 1.0) out << " spread=" << format_g17(st.spread);
        break;
      case StatementKind::kMeasure:
        out << "measure " << st.name << " -> " << st.target;
        break;
      case StatementKind::kAssertAccurate:
        out << "assert accurate " << st.name << " tol=" << format_g17(st.threshold);
        break;
      case StatementKind::kAssertNoncommute:
        out << "assert noncommute " << st.name << ' ' << st.target
            << " min=" << format_g17(st.threshold);
        break;
      case StatementKind::kAssertCommute:
        out << "assert commute " << st.name << ' ' << st.target
            << " tol=" << format_g17(st.threshold);
        break;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

// Everything execute() accumulates while walking the statements.
struct ExecState {
  std::uint64_t seed = 0;
  std::string system_name;
  RegisterLayout layout;
  std::optional<ChainState> chain;
  std::map<std::string, godel::NumberRegistry> registries;
  std::map<std::string, Observable> observables;  // godel_diag results
  std::map<std::string, Gait> gaits;              // commuting gaits
  std::map<std::string, U1Construction> defines;  // eigen_including results
  std::map<std::string, std::string> measured_into;  // obs/define name -> pointer
  std::vector<std::string> measure_order;            // names, for reference lookup
  int define_count = 0;
  bool any_degenerate = false;
};

// The Hermitian content of a name: observable matrix or companion of a
// define. Gaits contribute their unitary matrix (commutator asserts only).
struct NamedOperator {
  const ComplexMatrix* matrix;
  const std::vector<std::string>* scope;
};

NamedOperator operator_of(const ExecState& es, const std::string& name) {
  if (auto it = es.observables.find(name); it != es.observables.end()) {
    return {&it->second.matrix, &it->second.scope};
  }
  if (auto it = es.defines.find(name); it != es.defines.end()) {
    return {&it->second.companion.matrix, &it->second.companion.scope};
  }
  if (auto it = es.gaits.find(name); it != es.gaits.end()) {
    return {&it->second.matrix, &it->second.scope};
  }
  throw std::runtime_error("unknown operator '" + name + "'");
}

const Observable& measurable_of(const ExecState& es, const std::string& name) {
  if (auto it = es.observables.find(name); it != es.observables.end()) return it->second;
  if (auto it = es.defines.find(name); it != es.defines.end()) return it->second.companion;
  throw std::runtime_error("'" + name + "' is not measurable");
}

}  // namespace

ChainReport execute(const Scenario& scenario) {
  // Layout first: registers live in declaration order, system included.
  std::vector<Register> registers;
  for (const Statement& st : scenario.statements) {
    if (st.kind == StatementKind::kSystem || st.kind == StatementKind::kRegister) {
      registers.push_back(Register{st.name, st.dim});
    }
  }
  ExecState es;
  es.layout = RegisterLayout(registers);

  ChainReport report;
  report.kind = "scenario";
  report.layout_description = es.layout.describe();
  report.scenario_lines = scenario.source_lines;

  for (const Statement& st : scenario.statements) {
    try {
      switch (st.kind) {
        case StatementKind::kSeed:
          es.seed = st.seed;
          break;
        case StatementKind::kSystem:
          es.system_name = st.name;
          break;
        case StatementKind::kRegister:
          break;
        case StatementKind::kGodelNumbers: {
          godel::NumberRegistry registry(
              static_cast<std::size_t>(es.layout.dim_of(es.system_name)));
          for (const Natural& n : st.numbers) {
            registry.register_number(n);
            report.registry_numbers.push_back(n.to_decimal());
          }
          es.registries.emplace(st.name, std::move(registry));
          break;
        }
        case StatementKind::kStateAmplitudes: {
          const Eigen::Index d = es.layout.dim_of(es.system_name);
          if (static_cast<Eigen::Index>(st.amplitudes.size()) != d) {
            throw std::runtime_error("state has " + std::to_string(st.amplitudes.size()) +
                                     " amplitudes but the system dimension is " +
                                     std::to_string(d));
          }
          ComplexVector v(d);
          for (Eigen::Index i = 0; i < d; ++i) v(i) = st.amplitudes[static_cast<std::size_t>(i)];
          const double norm = v.norm();
          if (std::abs(norm - 1.0) > 1e-6) {
            std::fprintf(stderr,
                         "warning: line %d: amplitudes have norm %.17g, normalizing\n",
                         st.line, norm);
          }
          es.chain.emplace(ChainState::with_system_state(es.layout, es.system_name,
                                                         StateVector(std::move(v))));
          break;
        }
        case StatementKind::kObservableGodelDiag:
          es.observables.emplace(
              st.name, godel_observable(es.registries.at(st.target), es.layout, es.system_name));
          break;
        case StatementKind::kGaitCommuting:
          es.gaits.emplace(st.name, commuting_gait(es.observables.at(st.target), st.phases));
          break;
        case StatementKind::kDefineEigenIncluding: {
          // Non-commutation reference: the most recently measured observable.
          const Observable& reference = measurable_of(es, es.measure_order.back());
          U1Construction u1 =
              construct_u1(*es.chain, st.registers, reference,
                           es.seed + static_cast<std::uint64_t>(es.define_count), st.spread);
          ++es.define_count;
          es.any_degenerate = es.any_degenerate || u1.degenerate;
          es.chain->log_step("define", st.name + " (attempts " + std::to_string(u1.attempts) +
                                           (u1.degenerate ? ", degenerate" : "") + ")");
          es.defines.emplace(st.name, std::move(u1));
          break;
        }
        case StatementKind::kMeasure: {
          const Observable& obs = measurable_of(es, st.name);
          measure_observable(*es.chain, obs, st.target, st.name + " -> " + st.target);
          es.measured_into[st.name] = st.target;
          es.measure_order.push_back(st.name);
          break;
        }
        case StatementKind::kAssertAccurate: {
          const Observable& obs = measurable_of(es, st.name);
          const std::string& pointer = es.measured_into.at(st.name);
          Observable record = albert_record_observable(obs, pointer, es.layout);
          const double measured = error_norm(record, obs, es.layout, es.chain->vector());
          const bool pass = measured <= st.threshold;
          report.norms.push_back({"accurate " + st.name, measured});
          report.assertions.push_back(
              {"accurate " + st.name, measured, st.threshold, "<=", pass, false});
          break;
        }
        case StatementKind::kAssertNoncommute:
        case StatementKind::kAssertCommute: {
          const NamedOperator a = operator_of(es, st.name);
          const NamedOperator b = operator_of(es, st.target);
          const double measured =
              commutator_norm(*a.matrix, *a.scope, *b.matrix, *b.scope, es.layout);
          const bool noncommute = st.kind == StatementKind::kAssertNoncommute;
          const std::string label =
              (noncommute ? "noncommute " : "commute ") + st.name + " " + st.target;
          // A degenerate anchored define voids its own non-commutation demand.
          const bool involves_degenerate_define = [&] {
            for (const std::string* n : {&st.name, &st.target}) {
              auto it = es.defines.find(*n);
              if (it != es.defines.end() && it->second.degenerate) return true;
            }
            return false;
          }();
          const bool pass = noncommute ? measured > st.threshold : measured <= st.threshold;
          report.norms.push_back({label, measured});
          report.assertions.push_back({label, measured, st.threshold,
                                       noncommute ? ">" : "<=", pass,
                                       noncommute && involves_degenerate_define});
          break;
        }
      }
    } catch (const ExecutionError&) {
      throw;
    } catch (const std::exception& e) {
      throw ExecutionError(st.line, e.what());
    }
  }

  report.seed = es.seed;
  if (es.chain) {
    report.steps = es.chain->steps();
    report.norm_drift = es.chain->norm_drift();
  }
  report.degenerate = es.any_degenerate;
  return report;
}

}  // namespace albert::protocol
