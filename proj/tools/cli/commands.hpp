// Copyright 2026 The cvsep Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cvsep/criteria.hpp"

namespace cvsep::cli {

inline constexpr int kExitSeparable = 0;
inline constexpr int kExitEntangled = 1;
inline constexpr int kExitNonphysical = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDegenerate = 65;
inline constexpr int kExitDomain = 66;
inline constexpr int kExitInternal = 70;
inline constexpr int kExitCantCreate = 73;

int exit_code(Classification c);

/// Doubles are printed with 17 significant digits so they round-trip.
std::string format_double(double x);

// CSV layout version 1.
inline constexpr std::string_view kScanHeader =
    "a,b,t,c1_prep,c1_simon,c1_duan,r1,r2,max_rel_disagreement";

struct ScanRow {
  double a;
  double b;
  double t;
  double c1_prep;
  double c1_simon;
  double c1_duan;
  double r1;
  double r2;
  double max_rel_disagreement;
};

ScanRow scan_point(double a, double b, double t);

/// Rows ordered a-major, then b, then t = k / t_steps for k = 0..t_steps.
std::vector<ScanRow> scan_grid(const std::vector<double>& as, const std::vector<double>& bs,
                               std::size_t t_steps);

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows);

/// "x1,x2,..." or "lo:hi:n" (n evenly spaced points, ends included).
/// Throws ParseError.
std::vector<double> parse_range(std::string_view spec);

inline const std::vector<double> kDefaultScanValues{0.5, 0.75, 1.0, 1.5, 2.0, 5.0};
inline constexpr std::size_t kDefaultTSteps = 10;

struct ScanOptions {
  std::vector<double> as = kDefaultScanValues;
  std::vector<double> bs = kDefaultScanValues;
  std::size_t t_steps = kDefaultTSteps;
  std::optional<std::string> out_path;  // stdout when absent or "-"
};

// Each command returns the process exit code. Data goes to `out`, warnings
// and errors to `err`.
int cmd_classify(const std::string& input_path, std::optional<double> tol, std::ostream& out,
                 std::ostream& err);
int cmd_standard_form(const std::string& input_path, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err);
int cmd_audit(std::size_t samples, std::uint64_t seed, double tol, std::ostream& out,
              std::ostream& err);
int cmd_squeeze(double a, double b, double t, std::ostream& out, std::ostream& err);

}  // namespace cvsep::cli
