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

#ifndef ALBERTSIM_REPORT_HPP
#define ALBERTSIM_REPORT_HPP

#include <string>
#include <vector>

#include "albertsim/automaton.hpp"

namespace albert {

inline constexpr const char* kReportVersion = "1.0";

/// A ChainReport plus presentation metadata. Timing appears only in the text
/// rendering: the JSON form is byte-identical across runs of the same
/// (input, seed), so it carries no clocks.
struct ReportDocument {
  std::string version = kReportVersion;
  ChainReport chain;
  double elapsed_seconds = 0.0;  // text output only
};

/// Canonical JSON: fixed key order, floats printed with 17 significant
/// digits, no whitespace dependence on the data. Ends with a newline.
std::string to_json(const ReportDocument& doc);

/// Several independent runs merged in order under kind "demo-batch".
std::string to_json_batch(const std::vector<ReportDocument>& docs);

/// Human-oriented rendering (non-normative; includes timing).
std::string to_text(const ReportDocument& doc);
std::string to_text_batch(const std::vector<ReportDocument>& docs);

/// "%.17g" rendering used for every float in the JSON form.
std::string format_float(double value);

}  // namespace albert

#endif  // ALBERTSIM_REPORT_HPP
