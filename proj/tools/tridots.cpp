// Copyright 2026 The tridots Authors
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

// tridots: reproduce the dots-in-triangles numbers and emit proofs.
//
// Exit codes: 0 success (for `certify`: bounds meet), 1 user error,
// 2 internal invariant violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tridots/tridots.hpp"

namespace {

using namespace tridots;

constexpr int kExitUser = 1;
constexpr int kExitInternal = 2;

struct Caps {
  int search = kDefaultSearchCap;
  int lp = kDefaultLpCap;
};

std::optional<int> EnvCap() {
  const char* raw = std::getenv("TRIDOTS_SOLVER_CAP");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const int value = std::stoi(raw, &used);
    if (used != std::string(raw).size() || value < 1) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw DomainError(std::string("TRIDOTS_SOLVER_CAP must be a positive integer, got '") + raw + "'");
  }
}

std::string MixedAndFraction(const Rational& r) {
  return r.is_integer() ? r.str() : r.mixed() + " (" + r.str() + ")";
}

int CmdTable(int n_max, const std::string& format, const Caps& caps) {
  if (n_max < 3) throw DomainError("--max must be at least 3");
  if (n_max > caps.search) {
    throw RefusalError("--max " + std::to_string(n_max) + " exceeds the exhaustive search cap " +
                       std::to_string(caps.search));
  }
  if (n_max > caps.lp) {
    throw RefusalError("--max " + std::to_string(n_max) + " exceeds the simplex cap " + std::to_string(caps.lp));
  }
  std::vector<std::future<TableRow>> pending;
  for (int n = 3; n <= n_max; ++n) {
    pending.push_back(std::async(std::launch::async, [n, caps] {
      return compute_table_row(TriangleSize(n), caps.search, caps.lp);
    }));
  }
  std::vector<TableRow> rows;
  for (auto& f : pending) rows.push_back(f.get());
  if (format == "csv") {
    std::cout << render_table_csv(rows);
  } else if (format == "json") {
    std::cout << render_table_json(rows);
  } else {
    std::cout << render_table_ascii(rows);
  }
  return 0;
}

int CmdConstruct(int n, const std::string& format) {
  const Placement p = build_placement(TriangleSize(n));
  if (!validate_placement(p).ok()) throw InvariantError("construction produced an invalid placement");
  if (format == "json") {
    std::cout << placement_to_json(p).dump() << '\n';
  } else if (format == "csv") {
    std::cout << "row,pos\n";
    for (const Cell& c : p.dots) std::cout << c.row << ',' << c.pos << '\n';
  } else {
    std::cout << "n = " << n << ", " << p.dots.size() << " dots\n" << render_placement(p);
  }
  return 0;
}

int CmdCertify(int n, const std::string& format, const std::string& cert_out) {
  const TriangleSize size(n);
  const DualCertificate cert = build_certificate(size);
  const CertificateReport report = verify_feasible(cert);
  if (!report.ok()) {
    std::cerr << "internal error: certificate infeasible at " << report.violated.size() << " cell(s)\n";
    return kExitInternal;
  }
  const Rational objective = certificate_objective(cert);
  const std::int64_t upper = objective.floor().convert_to<std::int64_t>();
  const Placement placement = build_placement(size);
  if (!validate_placement(placement).ok()) throw InvariantError("construction produced an invalid placement");
  const auto lower = static_cast<std::int64_t>(placement.dots.size());
  const bool proved = lower == upper;
  const std::string verdict = "N(" + std::to_string(n) + ") = " + std::to_string(lower) + " proved";

  nlohmann::json cert_json = certificate_to_json(cert);
  if (!cert_out.empty()) {
    std::ofstream file(cert_out, std::ios::binary);
    if (!(file << cert_json.dump(2) << '\n')) throw std::runtime_error("cannot write " + cert_out);
  }
  if (format == "json") {
    nlohmann::json out = cert_json;
    out["upper_bound"] = upper;
    out["lower_bound"] = lower;
    out["proved"] = proved;
    if (proved) out["verdict"] = verdict;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "n = " << n << '\n'
              << "dual objective: " << MixedAndFraction(objective) << '\n'
              << "upper bound: N(" << n << ") <= " << upper << "  (weak duality, floor of dual objective)\n"
              << "lower bound: N(" << n << ") >= " << lower << "  (construction, validated)\n"
              << (proved ? verdict : "bounds do not meet") << '\n'
              << "certificate: " << cert_json.dump() << '\n';
  }
  if (!proved) {
    std::cerr << "internal error: lower bound " << lower << " != upper bound " << upper << '\n';
    return kExitInternal;
  }
  return 0;
}

int CmdSolve(int n, const std::string& which, const std::string& format, const Caps& caps) {
  const TriangleSize size(n);
  if (which == "ilp") {
    const MaxDotsResult r = max_dots(size, caps.search);
    if (format == "json") {
      std::cout << nlohmann::json{{"n", n}, {"objective", r.count}, {"witness", placement_to_json(r.witness)}}.dump()
                << '\n';
    } else {
      std::cout << "N(" << n << ") = " << r.count << '\n' << render_placement(r.witness);
    }
    return 0;
  }
  if (n > caps.lp) {
    throw RefusalError("exact simplex refused for n = " + std::to_string(n) + " (cap " + std::to_string(caps.lp) + ")");
  }
  const LpProblem problem = which == "dual" ? build_dual(size) : build_primal(size);
  const LpSolution s = solve(problem);
  if (s.status != LpStatus::kOptimal) throw InvariantError(problem.name + " is " + to_string(s.status));
  if (format == "json") {
    nlohmann::json values = nlohmann::json::object();
    for (std::size_t v = 0; v < problem.num_vars(); ++v) values[problem.var_names[v]] = s.values[v].str();
    std::cout << nlohmann::json{{"n", n}, {"problem", which}, {"status", to_string(s.status)},
                                {"objective", s.objective.str()}, {"values", values}}
                     .dump()
              << '\n';
    return 0;
  }
  std::cout << which << " LP, n = " << n << ": " << to_string(s.status) << ", objective "
            << MixedAndFraction(s.objective) << '\n';
  if (which == "dual") {
    for (const char* family : {"r", "c", "d"}) {
      std::cout << family << ':';
      const std::size_t base = family[0] == 'r' ? 0 : family[0] == 'c' ? n : 2 * static_cast<std::size_t>(n);
      for (int i = 0; i < n; ++i) std::cout << ' ' << s.values[base + i].str();
      std::cout << '\n';
    }
  } else {
    std::cout << render_triangle(size, [&](const Cell& c) { return s.values[cell_ordinal(c)].str(); });
  }
  return 0;
}

int CmdExport(int n, const std::string& which, const std::string& out) {
  const TriangleSize size(n);
  const LpProblem problem = which == "dual" ? build_dual(size) : build_primal(size);
  const std::string file_name = "triangle_" + which + "_" + std::to_string(n) + ".lp";
  std::filesystem::path path = out.empty() ? std::filesystem::path(file_name) : std::filesystem::path(out);
  if (std::filesystem::is_directory(path)) path /= file_name;
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << export_lp_text(problem)) || !file.flush()) {
    throw std::runtime_error("cannot write " + path.string());
  }
  std::cout << "wrote " << path.string() << " (" << problem.num_vars() << " variables, "
            << problem.constraints.size() << " constraints)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dots in triangles: exact N(n), LP(n) and dual-certificate proofs"};
  app.require_subcommand(1);

  std::optional<int> search_cap, lp_cap;
  app.add_option("--search-cap", search_cap, "Largest n for exhaustive search (default 25)")->check(CLI::PositiveNumber);
  app.add_option("--lp-cap", lp_cap, "Largest n for the exact simplex (default 60)")->check(CLI::PositiveNumber);

  const auto formats = CLI::IsMember({"ascii", "json", "csv"});
  const auto problems = CLI::IsMember({"primal", "dual"});

  int n_max = 12;
  int n = 0;
  std::string format = "ascii";
  std::string which;
  std::string path;
  std::string cert_out;

  auto* table = app.add_subcommand("table", "Reproduce the N(n) / LP(n) table for n = 3..max");
  table->add_option("--max", n_max, "Largest n")->capture_default_str();
  table->add_option("--format", format, "ascii, json or csv")->check(formats);

  auto* construct = app.add_subcommand("construct", "Print the explicit placement of floor((2n+1)/3) dots");
  construct->add_option("n", n, "Triangle size")->required();
  construct->add_option("--format", format, "ascii, json or csv")->check(formats);

  auto* certify = app.add_subcommand("certify", "Build and check the dual certificate; prove N(n)");
  certify->add_option("n", n, "Triangle size")->required();
  certify->add_option("--format", format, "ascii or json")->check(formats);
  certify->add_option("--cert-out", cert_out, "Also write the certificate JSON to this file");

  auto* solve_cmd = app.add_subcommand("solve", "Solve the primal LP, dual LP or integer problem exactly");
  solve_cmd->add_option("n", n, "Triangle size")->required();
  solve_cmd->add_option("--which", which, "primal, dual or ilp")->required()->check(CLI::IsMember({"primal", "dual", "ilp"}));
  solve_cmd->add_option("--format", format, "ascii or json")->check(formats);

  auto* export_cmd = app.add_subcommand("export", "Write the primal or dual LP in LP text format");
  export_cmd->add_option("n", n, "Triangle size")->required();
  export_cmd->add_option("--which", which, "primal or dual")->required()->check(problems);
  export_cmd->add_option("--out", path, "Output file or directory (default triangle_<which>_<n>.lp)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUser;
  }

  try {
    Caps caps;
    if (auto env = EnvCap()) caps.search = caps.lp = *env;
    if (search_cap) caps.search = *search_cap;
    if (lp_cap) caps.lp = *lp_cap;

    if (*table) return CmdTable(n_max, format, caps);
    if (*construct) return CmdConstruct(n, format);
    if (*certify) return CmdCertify(n, format, cert_out);
    if (*solve_cmd) return CmdSolve(n, which, format, caps);
    if (*export_cmd) return CmdExport(n, which, path);
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const ResourceError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUser;
  }
  return kExitUser;
}
