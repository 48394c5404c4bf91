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

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "cli/commands.hpp"
#include "cli/input.hpp"

using namespace cvsep;
using namespace cvsep::cli;

namespace {

std::string write_tmp(const std::string& name, const std::string& body) {
  const std::string path = std::string(CVSEP_TEST_TMPDIR) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

std::string tmsv_json() {
  const double a = std::cosh(1.0) / 2.0;
  const double c = std::sinh(1.0) / 2.0;
  std::ostringstream os;
  os.precision(17);
  os << R"({"version": 1, "matrix": [[)" << a << ",0," << c << ",0],[0," << a << ",0," << -c
     << "],[" << c << ",0," << a << ",0],[0," << -c << ",0," << a << "]]}";
  return os.str();
}

}  // namespace

TEST_CASE("input documents") {
  const auto flat = parse_input(R"({"matrix": [1,0,0,0, 0,1,0,0, 0,0,2,0, 0,0,0,2]})");
  CHECK(flat.covariance.matrix() == SymMat4::diagonal({1.0, 1.0, 2.0, 2.0}));
  CHECK_FALSE(flat.tol.has_value());
  CHECK(flat.warnings.empty());

  const auto sf = parse_input(R"({"version": 1, "standard_form": {"a": 1, "b": 2, "c1": 0.5, "c2": -0.1}, "tol": 1e-8})");
  CHECK(sf.from_standard_form);
  CHECK(sf.covariance.matrix() == CovMat4::standard(1.0, 2.0, 0.5, -0.1).matrix());
  CHECK(*sf.tol == 1e-8);

  const auto nearly = parse_input(R"({"matrix": [[1,0.3,0,0],[0.3000000001,1,0,0],[0,0,1,0],[0,0,0,1]]})");
  CHECK(nearly.warnings.size() == 1);
  CHECK(nearly.covariance.matrix()(0, 1) == nearly.covariance.matrix()(1, 0));
}

TEST_CASE("malformed input documents") {
  for (const char* bad : {
           R"({"matrix": [1,0,0,0]})",
           R"({"matrix": [[1,0.3,0,0],[0.31,1,0,0],[0,0,1,0],[0,0,0,1]]})",
           R"({})",
           R"({"matrix": [1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1], "standard_form": {"a": 1, "b": 1, "c1": 0, "c2": 0}})",
           R"({"standard_form": {"a": 1, "b": 1, "c1": 0}})",
           R"({"version": 2, "standard_form": {"a": 1, "b": 1, "c1": 0, "c2": 0}})",
           R"({"standard_form": {"a": 1, "b": 1, "c1": 0, "c2": 0}, "tol": -1})",
           R"({"standard_form": {"a": 1, "b": 1, "c1": 0, "c2": 0}, "extra": 1})",
           R"({"matrix": [1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,"x"]})",
           R"([1, 2])",
           R"({"matrix": )",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_input(bad), ParseError);
  }
  CHECK_THROWS_AS(load_input("/nonexistent/in.json"), ParseError);
}

TEST_CASE("ranges") {
  CHECK(parse_range("0.5,1,2") == std::vector<double>{0.5, 1.0, 2.0});
  CHECK(parse_range("1") == std::vector<double>{1.0});
  const auto lin = parse_range("0.5:1.5:5");
  REQUIRE(lin.size() == 5);
  CHECK(lin.front() == 0.5);
  CHECK(lin.back() == 1.5);
  CHECK(lin[2] == doctest::Approx(1.0));
  for (const char* bad : {"", "a", "1,,2", "0:1", "0:1:0", "0:1:2.5", "1:2:1"})
    CHECK_THROWS_AS(parse_range(bad), ParseError);
}

TEST_CASE("scan rows") {
  const ScanRow r0 = scan_point(1.0, 1.0, 0.0);
  CHECK(r0.c1_prep == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(r0.c1_simon == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(r0.c1_duan == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(r0.r1 == doctest::Approx(2.0));
  CHECK(r0.r2 == doctest::Approx(2.0));

  const ScanRow r1 = scan_point(1.0, 1.0, 1.0);
  CHECK(r1.c1_prep == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r1.r1 == doctest::Approx(1.0));

  const ScanRow z = scan_point(0.5, 0.5, 0.3);
  CHECK(z.c1_prep == 0.0);
  CHECK(z.c1_simon == 0.0);
  CHECK(z.c1_duan == 0.0);

  const auto rows = scan_grid(kDefaultScanValues, kDefaultScanValues, kDefaultTSteps);
  CHECK(rows.size() == 6 * 6 * 11);
  for (const auto& r : rows) CHECK(r.max_rel_disagreement < 1e-8);
  // a-major, then b, then t
  CHECK(rows[1].t == doctest::Approx(0.1));
  CHECK(rows[11].b == 0.75);
  CHECK(rows[66].a == 0.75);
}

TEST_CASE("scan CSV is byte-identical across runs") {
  ScanOptions opts;
  std::ostringstream a;
  std::ostringstream b;
  std::ostringstream err;
  CHECK(cmd_scan(opts, a, err) == 0);
  CHECK(cmd_scan(opts, b, err) == 0);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind(std::string(kScanHeader) + "\n", 0) == 0);

  opts.as = {1.0};
  opts.bs = {1.0};
  opts.t_steps = 1;
  std::ostringstream one;
  CHECK(cmd_scan(opts, one, err) == 0);
  CHECK(one.str() == std::string(kScanHeader) + "\n1,1,0,0.75,0.75,0.75,2,2,0\n1,1,1,0.5,0.5,0.5,1,1,0\n");

  opts.out_path = "/nonexistent-dir/x.csv";
  CHECK(cmd_scan(opts, one, err) == kExitCantCreate);
  opts.out_path.reset();
  opts.as = {0.4};
  CHECK(cmd_scan(opts, one, err) == kExitUsage);
}

TEST_CASE("scan writes files") {
  ScanOptions opts;
  opts.as = {1.0};
  opts.bs = {2.0};
  opts.out_path = std::string(CVSEP_TEST_TMPDIR) + "/scan.csv";
  std::ostringstream out;
  std::ostringstream err;
  REQUIRE(cmd_scan(opts, out, err) == 0);
  CHECK(out.str().empty());
  std::ifstream in(*opts.out_path);
  std::string header;
  std::getline(in, header);
  CHECK(header == kScanHeader);
}

TEST_CASE("classify exit codes and report") {
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_classify(write_tmp("vac.json", R"({"standard_form": {"a": 0.5, "b": 0.5, "c1": 0, "c2": 0}})"),
                     std::nullopt, out, err) == kExitSeparable);
  CHECK(out.str().find("verdict: Separable") != std::string::npos);

  out.str("");
  CHECK(cmd_classify(write_tmp("tmsv.json", tmsv_json()), std::nullopt, out, err) ==
        kExitEntangled);
  CHECK(out.str().find("simon: violated margin=-0.3160602794142") != std::string::npos);
  CHECK(out.str().find("witness:") != std::string::npos);

  CHECK(cmd_classify(write_tmp("bad.json", R"({"matrix": [0.4,0,0,0, 0,0.4,0,0, 0,0,0.4,0, 0,0,0,0.4]})"),
                     std::nullopt, out, err) == kExitNonphysical);
  CHECK(cmd_classify(write_tmp("junk.json", "{"), std::nullopt, out, err) == kExitUsage);
  CHECK(cmd_classify("/nonexistent/x.json", std::nullopt, out, err) == kExitUsage);
}

TEST_CASE("tolerance precedence: flag, then document, then default") {
  const std::string path =
      write_tmp("tol.json", R"({"standard_form": {"a": 0.5, "b": 0.5, "c1": 0, "c2": 0}, "tol": 1e-6})");
  std::ostringstream out;
  std::ostringstream err;
  cmd_classify(path, std::nullopt, out, err);
  CHECK(out.str().find("tol: 9.9999999999999995e-07") != std::string::npos);
  out.str("");
  cmd_classify(path, 1e-3, out, err);
  CHECK(out.str().find("tol: 0.001") != std::string::npos);
}

TEST_CASE("exit codes are a function of the verdict") {
  CHECK(exit_code(Classification::Separable) == 0);
  CHECK(exit_code(Classification::Entangled) == 1);
  CHECK(exit_code(Classification::Nonphysical) == 2);
}

TEST_CASE("standard-form command") {
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_standard_form(write_tmp("th.json", R"({"matrix": [1,0,0,0, 0,1,0,0, 0,0,2,0, 0,0,0,2]})"),
                          out, err) == 0);
  CHECK(out.str().find("a: 1\nb: 2\nc1: 0\nc2: 0\n") == 0);
  CHECK(out.str().find("invariants_after: det_A=1 det_B=4 det_C=0 det_V=4") != std::string::npos);
  CHECK(cmd_standard_form(write_tmp("deg.json", R"({"matrix": [1,0,0,0, 0,0,0,0, 0,0,1,0, 0,0,0,1]})"),
                          out, err) == kExitDegenerate);
}

TEST_CASE("squeeze command") {
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_squeeze(1.0, 1.0, 0.0, out, err) == 0);
  CHECK(out.str().find("r1: 2\nr2: 2\n") == 0);
  CHECK(out.str().find("c1_bound: 0.75\n") != std::string::npos);
  CHECK(cmd_squeeze(0.4, 1.0, 0.0, out, err) == kExitDomain);
  CHECK(cmd_squeeze(1.0, 1.0, 2.0, out, err) == kExitDomain);
}

TEST_CASE("audit command is deterministic") {
  std::ostringstream a;
  std::ostringstream b;
  std::ostringstream err;
  CHECK(cmd_audit(300, 11, kDefaultTol, a, err) == 0);
  CHECK(cmd_audit(300, 11, kDefaultTol, b, err) == 0);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("counterexamples: 0\n") != std::string::npos);
  CHECK(cmd_audit(0, 1, kDefaultTol, a, err) == kExitUsage);
}
