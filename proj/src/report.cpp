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

#include "albertsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace albert {

namespace {

// Hand-rolled emitter rather than a JSON library: the byte-identical-output
// contract needs a pinned key order and pinned float rendering, which is
// easier to guarantee by construction than by configuring a serializer.
void append_escaped(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_float(std::string& out, double v) {
  out += format_float(v);
}

void append_string_array(std::string& out, const std::vector<std::string>& items) {
  out += '[';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    append_escaped(out, items[i]);
  }
  out += ']';
}

void append_chain_fields(std::string& out, const ChainReport& r) {
  out += "\"kind\":";
  append_escaped(out, r.kind);
  out += ",\"seed\":" + std::to_string(r.seed);
  out += ",\"layout\":";
  append_escaped(out, r.layout_description);
  out += ",\"registry_numbers\":";
  append_string_array(out, r.registry_numbers);
  out += ",\"sentences\":";
  append_string_array(out, r.sentences);
  out += ",\"modeled_fixed_point\":";
  out += r.modeled_fixed_point ? "true" : "false";
  out += ",\"degenerate\":";
  out += r.degenerate ? "true" : "false";
  out += ",\"scenario\":";
  append_string_array(out, r.scenario_lines);
  out += ",\"steps\":[";
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    if (i > 0) out += ',';
    out += "{\"operation\":";
    append_escaped(out, r.steps[i].operation);
    out += ",\"operands\":";
    append_escaped(out, r.steps[i].operands);
    out += ",\"norm_after\":";
    append_float(out, r.steps[i].norm_after);
    out += '}';
  }
  out += "],\"norms\":[";
  for (std::size_t i = 0; i < r.norms.size(); ++i) {
    if (i > 0) out += ',';
    out += "{\"name\":";
    append_escaped(out, r.norms[i].name);
    out += ",\"value\":";
    append_float(out, r.norms[i].value);
    out += '}';
  }
  out += "],\"assertions\":[";
  for (std::size_t i = 0; i < r.assertions.size(); ++i) {
    const AssertionRecord& a = r.assertions[i];
    if (i > 0) out += ',';
    out += "{\"name\":";
    append_escaped(out, a.name);
    out += ",\"measured\":";
    append_float(out, a.measured);
    out += ",\"threshold\":";
    append_float(out, a.threshold);
    out += ",\"comparison\":";
    append_escaped(out, a.comparison);
    out += ",\"pass\":";
    out += a.pass ? "true" : "false";
    out += ",\"skipped\":";
    out += a.skipped ? "true" : "false";
    out += '}';
  }
  out += "],\"norm_drift\":";
  append_float(out, r.norm_drift);
  out += ",\"all_passed\":";
  out += r.all_passed() ? "true" : "false";
}

}  // namespace

std::string format_float(double value) {
  if (!std::isfinite(value)) {
    throw std::logic_error("non-finite value in a report");
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string to_json(const ReportDocument& doc) {
  std::string out = "{\"version\":";
  append_escaped(out, doc.version);
  out += ',';
  append_chain_fields(out, doc.chain);
  out += "}\n";
  return out;
}

std::string to_json_batch(const std::vector<ReportDocument>& docs) {
  std::string out = "{\"version\":";
  append_escaped(out, kReportVersion);
  out += ",\"kind\":\"demo-batch\",\"runs\":[";
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i > 0) out += ',';
    out += '{';
    append_chain_fields(out, docs[i].chain);
    out += '}';
  }
  out += "]}\n";
  return out;
}

std::string to_text(const ReportDocument& doc) {
  const ChainReport& r = doc.chain;
  std::ostringstream out;
  out << r.kind << " (report v" << doc.version << ") - seed " << r.seed << '\n';
  out << "layout: " << r.layout_description << '\n';
  if (!r.registry_numbers.empty()) {
    out << "code numbers:";
    for (const std::string& n : r.registry_numbers) out << ' ' << n;
    out << '\n';
  }
  if (!r.sentences.empty()) {
    out << "registered sentences (fixed point modeled by assignment):\n";
    for (const std::string& s : r.sentences) out << "  " << s << '\n';
  }
  if (r.degenerate) {
    out << "degenerate input: single-branch state, non-commutation checks skipped\n";
  }
  out << "steps:\n";
  for (const StepRecord& s : r.steps) {
    out << "  " << s.operation << ' ' << s.operands << "  (norm " << format_float(s.norm_after)
        << ")\n";
  }
  out << "norms:\n";
  for (const NormRecord& n : r.norms) {
    out << "  " << n.name << " = " << format_float(n.value) << '\n';
  }
  out << "assertions:\n";
  for (const AssertionRecord& a : r.assertions) {
    const char* verdict = a.skipped ? "SKIP" : (a.pass ? "PASS" : "FAIL");
    out << "  [" << verdict << "] " << a.name << ": " << format_float(a.measured) << ' '
        << a.comparison << ' ' << format_float(a.threshold) << '\n';
  }
  out << "norm drift: " << format_float(r.norm_drift) << '\n';
  char elapsed[64];
  std::snprintf(elapsed, sizeof(elapsed), "%.3f", doc.elapsed_seconds);
  out << "result: " << (r.all_passed() ? "ALL ASSERTIONS PASSED" : "ASSERTION FAILURES") << " ("
      << elapsed << " s)\n";
  return out.str();
}

std::string to_text_batch(const std::vector<ReportDocument>& docs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i > 0) out << "----------------------------------------\n";
    out << to_text(docs[i]);
  }
  return out.str();
}

}  // namespace albert
