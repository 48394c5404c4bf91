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

#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "cli/input.hpp"
#include "cvsep/audit.hpp"
#include "cvsep/error.hpp"
#include "cvsep/squeezing.hpp"

namespace cvsep::cli {
namespace {

// Maps library and parse errors onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::InvalidInput:
        return kExitUsage;
      case ErrorCode::DegenerateBlock:
        return kExitDegenerate;
      case ErrorCode::OutOfDomain:
        return kExitDomain;
      default:
        return kExitInternal;
    }
  }
}

std::string vec2(const Vec2& v) {
  return "(" + format_double(v[0] + 0.0) + ", " + format_double(v[1] + 0.0) + ")";
}

std::string mat2(const Mat2& m) {
  return "[[" + format_double(m(0, 0)) + ", " + format_double(m(0, 1)) + "], [" +
         format_double(m(1, 0)) + ", " + format_double(m(1, 1)) + "]]";
}

void print_report(std::ostream& out, const std::string& name, const CriterionReport& r) {
  out << name << ": " << (r.satisfied ? "satisfied" : "violated")
      << " margin=" << format_double(r.margin) << " threshold=" << format_double(r.threshold)
      << " branch=" << to_string(r.branch) << '\n';
  if (r.witness)
    out << "  witness: d=" << vec2(r.witness->d) << " f=" << vec2(r.witness->f)
        << " g=" << vec2(r.witness->g) << " h=" << vec2(r.witness->h) << '\n';
}

void print_invariants(std::ostream& out, const char* label, const CovMat4& v) {
  out << label << ": det_A=" << format_double(det2(v.a_block().mat()))
      << " det_B=" << format_double(det2(v.b_block().mat()))
      << " det_C=" << format_double(det2(v.c_block()))
      << " det_V=" << format_double(determinant(v.matrix().mat())) << '\n';
}

InputDocument load(const std::string& path, std::ostream& err) {
  InputDocument doc = load_input(path);
  for (const auto& w : doc.warnings) err << "warning: " << w << '\n';
  return doc;
}

double rel_diff(double x, double y) {
  return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-12});
}

}  // namespace

int exit_code(Classification c) {
  switch (c) {
    case Classification::Separable:
      return kExitSeparable;
    case Classification::Entangled:
      return kExitEntangled;
    case Classification::Nonphysical:
      return kExitNonphysical;
  }
  return kExitInternal;
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

ScanRow scan_point(double a, double b, double t) {
  const SqueezeSolution sol = optimal_squeeze(a, b, t);
  ScanRow row{};
  row.a = a;
  row.b = b;
  row.t = t;
  row.c1_prep = sol.c1_bound;
  row.c1_simon = simon_c1_bound(a, b, t);
  row.c1_duan = duan_bound_at(a, b, t, sol.params);
  row.r1 = sol.params.r1();
  row.r2 = sol.params.r2();
  row.max_rel_disagreement =
      std::max({rel_diff(row.c1_prep, row.c1_simon), rel_diff(row.c1_prep, row.c1_duan),
                rel_diff(row.c1_simon, row.c1_duan)});
  return row;
}

std::vector<ScanRow> scan_grid(const std::vector<double>& as, const std::vector<double>& bs,
                               std::size_t t_steps) {
  if (t_steps == 0) throw ParseError("t-steps must be at least 1");
  std::vector<ScanRow> rows;
  rows.reserve(as.size() * bs.size() * (t_steps + 1));
  for (double a : as)
    for (double b : bs)
      for (std::size_t k = 0; k <= t_steps; ++k)
        rows.push_back(scan_point(a, b, static_cast<double>(k) / static_cast<double>(t_steps)));
  return rows;
}

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << kScanHeader << '\n';
  for (const auto& r : rows) {
    os << format_double(r.a) << ',' << format_double(r.b) << ',' << format_double(r.t) << ','
       << format_double(r.c1_prep) << ',' << format_double(r.c1_simon) << ','
       << format_double(r.c1_duan) << ',' << format_double(r.r1) << ',' << format_double(r.r2)
       << ',' << format_double(r.max_rel_disagreement) << '\n';
  }
}

std::vector<double> parse_range(std::string_view spec) {
  auto to_double = [spec](std::string_view s) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(x))
      throw ParseError("bad number in range '" + std::string(spec) + "'");
    return x;
  };

  std::vector<double> out;
  if (spec.find(':') != std::string_view::npos) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string_view::npos || spec.find(':', c2 + 1) != std::string_view::npos)
      throw ParseError("range must be 'lo:hi:n', got '" + std::string(spec) + "'");
    const double lo = to_double(spec.substr(0, c1));
    const double hi = to_double(spec.substr(c1 + 1, c2 - c1 - 1));
    const double nd = to_double(spec.substr(c2 + 1));
    if (nd < 1.0 || nd != std::floor(nd) || nd > 1e6)
      throw ParseError("range count must be a positive integer");
    const auto n = static_cast<std::size_t>(nd);
    if (n == 1) {
      if (lo != hi) throw ParseError("range with n = 1 needs lo == hi");
      return {lo};
    }
    for (std::size_t k = 0; k < n; ++k)
      out.push_back(k + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(k) / (n - 1.0));
    return out;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto comma = spec.find(',', start);
    const auto end = comma == std::string_view::npos ? spec.size() : comma;
    out.push_back(to_double(spec.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int cmd_classify(const std::string& input_path, std::optional<double> tol, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const InputDocument doc = load(input_path, err);
    const double eff_tol = tol ? *tol : doc.tol ? *doc.tol : kDefaultTol;
    const Verdict v = classify(doc.covariance, eff_tol);

    out << "verdict: " << to_string(v.kind) << '\n';
    out << "tol: " << format_double(eff_tol) << '\n';
    if (v.standard_form) {
      const auto& sf = *v.standard_form;
      out << "standard_form: a=" << format_double(sf.a) << " b=" << format_double(sf.b)
          << " c1=" << format_double(sf.c1) << " c2=" << format_double(sf.c2) << '\n';
    }
    if (v.squeeze) {
      const auto& sq = *v.squeeze;
      out << "optimal_squeeze: t=" << format_double(sq.t)
          << " r1=" << format_double(sq.params.r1()) << " r2=" << format_double(sq.params.r2())
          << " c1_bound=" << format_double(sq.c1_bound)
          << " c2_bound=" << format_double(sq.c2_bound) << '\n';
      out << "simon_agrees: " << (v.simon_agrees ? "true" : "false") << '\n';
    }
    for (const auto& [name, report] : v.reports) print_report(out, name, report);
    return exit_code(v.kind);
  });
}

int cmd_standard_form(const std::string& input_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const InputDocument doc = load(input_path, err);
    const StandardForm sf = to_standard_form(doc.covariance);
    out << "a: " << format_double(sf.a) << '\n';
    out << "b: " << format_double(sf.b) << '\n';
    out << "c1: " << format_double(sf.c1) << '\n';
    out << "c2: " << format_double(sf.c2) << '\n';
    out << "S1: " << mat2(sf.s1.mat()) << '\n';
    out << "S2: " << mat2(sf.s2.mat()) << '\n';
    print_invariants(out, "invariants_before", doc.covariance);
    print_invariants(out, "invariants_after", sf.matrix());
    return 0;
  });
}

int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    for (double x : opts.as)
      if (!(x >= 0.5)) throw ParseError("a values must be >= 0.5");
    for (double x : opts.bs)
      if (!(x >= 0.5)) throw ParseError("b values must be >= 0.5");
    const auto rows = scan_grid(opts.as, opts.bs, opts.t_steps);

    if (!opts.out_path || *opts.out_path == "-") {
      write_csv(out, rows);
      return 0;
    }
    std::ofstream file(*opts.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write '" << *opts.out_path << "'\n";
      return kExitCantCreate;
    }
    write_csv(file, rows);
    file.flush();
    if (!file) {
      err << "error: failed writing '" << *opts.out_path << "'\n";
      return kExitCantCreate;
    }
    return 0;
  });
}

int cmd_audit(std::size_t samples, std::uint64_t seed, double tol, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    if (samples == 0) throw ParseError("samples must be at least 1");
    const AuditReport r = run_hierarchy_audit(AuditOptions{samples, seed, tol});
    out << "samples: " << r.samples << '\n';
    out << "seed: " << seed << '\n';
    out << "implications_checked: " << r.implications_checked << '\n';
    out << "counterexamples: " << r.counterexamples << '\n';
    out << "p_representable: " << r.p_representable << '\n';
    out << "entangled: " << r.entangled << '\n';
    out << "stringent_strict: " << r.stringent_strict << " of " << r.stringent_trials << '\n';
    out << "simon_strict: " << r.simon_strict << '\n';
    out << "bound_disagreements: " << r.bound_disagreements << '\n';
    for (const auto& line : r.counterexample_log) err << "counterexample: " << line << '\n';
    return r.counterexamples == 0 ? 0 : 1;
  });
}

int cmd_squeeze(double a, double b, double t, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SqueezeSolution sol = optimal_squeeze(a, b, t);
    const ExtremalityResidual res = extremality_residual(a, b, sol.params);
    out << "r1: " << format_double(sol.params.r1()) << '\n';
    out << "r2: " << format_double(sol.params.r2()) << '\n';
    out << "D: " << format_double(sol.D) << '\n';
    out << "c1_bound: " << format_double(sol.c1_bound) << '\n';
    out << "c2_bound: " << format_double(sol.c2_bound) << '\n';
    out << "extremality_residual: " << format_double(res.value)
        << (res.endpoint ? " (endpoint)" : "") << '\n';
    return 0;
  });
}

}  // namespace cvsep::cli
