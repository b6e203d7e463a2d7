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

// Command-line front end. Exit codes: 0 all assertions passed, 1 an
// assertion failed (report still complete), 2 parse/usage/runtime error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "albertsim/automaton.hpp"
#include "albertsim/godel.hpp"
#include "albertsim/protocol.hpp"
#include "albertsim/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitError = 2;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run_scenario_file(const std::string& path, bool json) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kExitError;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  const auto start = std::chrono::steady_clock::now();
  auto parsed = albert::protocol::parse(buffer.str());
  if (const auto* error = std::get_if<albert::protocol::ParseError>(&parsed)) {
    std::cerr << "error: " << error->describe() << '\n';
    return kExitError;
  }
  albert::ReportDocument doc;
  try {
    doc.chain = albert::protocol::execute(std::get<albert::protocol::Scenario>(parsed));
  } catch (const albert::protocol::ExecutionError& e) {
    std::cerr << "error: line " << e.line() << ": " << e.what() << '\n';
    return kExitError;
  }
  doc.elapsed_seconds = seconds_since(start);
  std::cout << (json ? albert::to_json(doc) : albert::to_text(doc));
  return doc.chain.all_passed() ? kExitPass : kExitAssertionFailure;
}

albert::ReportDocument run_demo_once(Eigen::Index dim, std::uint64_t seed, bool external) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<albert::Complex> coefficients(
      static_cast<std::size_t>(dim),
      albert::Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  albert::ChainOutcome outcome =
      albert::albert_chain(dim, coefficients, {dim, dim * dim}, seed);
  albert::ReportDocument doc;
  doc.chain = external ? albert::external_chain(outcome, {dim, dim * dim}, seed)
                       : std::move(outcome.report);
  doc.elapsed_seconds = seconds_since(start);
  return doc;
}

int run_demo(Eigen::Index dim, std::uint64_t seed, bool external, bool json, int repeat) {
  if (dim < 2 || dim > 6) {
    std::cerr << "error: --dim must be between 2 and 6\n";
    return kExitError;
  }
  if (repeat < 1) {
    std::cerr << "error: --repeat must be at least 1\n";
    return kExitError;
  }
  std::vector<albert::ReportDocument> docs(static_cast<std::size_t>(repeat));
  // Independent seeded runs; results land by index, so the output order is
  // seed order no matter how the workers are scheduled.
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= docs.size()) break;
      docs[i] = run_demo_once(dim, seed + i, external);
    }
  };
  const unsigned pool =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(repeat));
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (unsigned t = 0; t < pool; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (repeat == 1) {
    std::cout << (json ? albert::to_json(docs[0]) : albert::to_text(docs[0]));
  } else {
    std::cout << (json ? albert::to_json_batch(docs) : albert::to_text_batch(docs));
  }
  const bool all = std::all_of(docs.begin(), docs.end(), [](const albert::ReportDocument& d) {
    return d.chain.all_passed();
  });
  return all ? kExitPass : kExitAssertionFailure;
}

int run_godel(const std::string& mode, const std::string& value) {
  try {
    if (mode == "encode") {
      albert::godel::Proposition p;
      std::istringstream in(value);
      std::string token;
      while (in >> token) p.tokens.push_back(token);
      std::cout << albert::godel::encode(p).to_decimal() << '\n';
      return kExitPass;
    }
    if (mode == "decode") {
      albert::Natural n = albert::Natural::from_decimal(value);
      std::cout << albert::godel::decode(n).text() << '\n';
      return kExitPass;
    }
    std::cerr << "error: expected 'encode' or 'decode', got '" << mode << "'\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and verification harness for self-measuring automata"};
  app.require_subcommand(1);

  std::string scenario_path;
  bool run_json = false;
  bool run_text = false;
  CLI::App* run_cmd = app.add_subcommand("run", "Execute a scenario script and report");
  run_cmd->add_option("path", scenario_path, "Scenario file")->required();
  CLI::Option* run_json_opt = run_cmd->add_flag("--json", run_json, "Emit the JSON report");
  run_cmd->add_flag("--text", run_text, "Emit the text report (default)")
      ->excludes(run_json_opt);

  Eigen::Index dim = 2;
  std::uint64_t seed = 42;
  bool external = false;
  bool demo_json = false;
  bool demo_text = false;
  int repeat = 1;
  CLI::App* demo_cmd =
      app.add_subcommand("demo", "Run the built-in two-stage self-measurement chain");
  demo_cmd->add_option("--dim", dim, "System dimension (2..6)");
  demo_cmd->add_option("--seed", seed, "Base seed");
  demo_cmd->add_flag("--external", external,
                     "Append a second machine re-measuring both records");
  CLI::Option* demo_json_opt = demo_cmd->add_flag("--json", demo_json, "Emit the JSON report");
  demo_cmd->add_flag("--text", demo_text, "Emit the text report (default)")
      ->excludes(demo_json_opt);
  demo_cmd->add_option("--repeat", repeat, "Independent runs with seeds seed..seed+N-1");

  std::string godel_mode;
  std::string godel_value;
  CLI::App* godel_cmd =
      app.add_subcommand("godel", "Encode a token string or decode a code number");
  godel_cmd->add_option("mode", godel_mode, "'encode' or 'decode'")->required();
  godel_cmd->add_option("value", godel_value, "Token string or decimal number")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (run_cmd->parsed()) return run_scenario_file(scenario_path, run_json);
    if (demo_cmd->parsed()) return run_demo(dim, seed, external, demo_json, repeat);
    if (godel_cmd->parsed()) return run_godel(godel_mode, godel_value);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
