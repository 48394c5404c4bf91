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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/input.hpp"

int main(int argc, char** argv) {
  using namespace cvsep::cli;

  CLI::App app{"Separability of two-mode Gaussian states from covariance matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::optional<std::string> out_path;
  app.add_option("--tol", tol, "Numerical tolerance (default 1e-10)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Random seed (audit)");
  app.add_option("--out", out_path, "Output file (scan); '-' for stdout");

  std::string input;
  auto* classify = app.add_subcommand("classify", "Classify a state");
  classify->add_option("input", input, "Input document (JSON)")->required();

  auto* standard = app.add_subcommand("standard-form", "Reduce to standard form");
  standard->add_option("input", input, "Input document (JSON)")->required();

  std::string a_range;
  std::string b_range;
  std::size_t t_steps = kDefaultTSteps;
  auto* scan = app.add_subcommand("scan", "Tabulate the three |c1| bounds over a grid");
  scan->add_option("--a", a_range, "a values: 'x1,x2,...' or 'lo:hi:n'");
  scan->add_option("--b", b_range, "b values: 'x1,x2,...' or 'lo:hi:n'");
  scan->add_option("--t-steps", t_steps, "t = k / t-steps for k = 0..t-steps")
      ->check(CLI::PositiveNumber);

  std::size_t samples = 1000;
  auto* audit = app.add_subcommand("audit", "Randomized check of the criterion hierarchy");
  audit->add_option("--samples", samples, "Number of random states")->check(CLI::PositiveNumber);

  double a = 0.0;
  double b = 0.0;
  double t = 0.0;
  auto* squeeze = app.add_subcommand("squeeze", "Optimal local squeezing for (a, b, t)");
  squeeze->add_option("a", a)->required();
  squeeze->add_option("b", b)->required();
  squeeze->add_option("t", t)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*classify) return cmd_classify(input, tol, std::cout, std::cerr);
  if (*standard) return cmd_standard_form(input, std::cout, std::cerr);
  if (*scan) {
    ScanOptions opts;
    opts.out_path = out_path;
    opts.t_steps = t_steps;
    try {
      if (!a_range.empty()) opts.as = parse_range(a_range);
      if (!b_range.empty()) opts.bs = parse_range(b_range);
    } catch (const ParseError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    return cmd_scan(opts, std::cout, std::cerr);
  }
  if (*audit) return cmd_audit(samples, seed, tol.value_or(cvsep::kDefaultTol), std::cout, std::cerr);
  if (*squeeze) return cmd_squeeze(a, b, t, std::cout, std::cerr);
  return kExitUsage;
}
