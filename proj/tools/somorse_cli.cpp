// somorse: command-line front end for the SO(n) Morse toolkit.
//
// Exit codes: 0 success / perfect, 2 argument validation, 3 perfectness check
// failed, 4 numeric suite failed.

#include "somorse/json_io.hpp"
#include "somorse/somorse.hpp"
#include "verify_suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace somorse;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotPerfect = 3;
constexpr int kExitSuiteFailed = 4;

constexpr int kMaxCliDim = 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 3;
  std::string c = "default";
  std::uint64_t seed = 0;
  double tol = 1e-8;
  int samples = 100;
  int max_iter = 100000;
  std::string format = "table";
  std::string out;
  std::string start;
};

CostVector parse_costs(const RunConfig& cfg) {
  if (cfg.c == "default")
    return CostVector::linear(cfg.n);
  std::vector<double> w;
  std::stringstream ss(cfg.c);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stod(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cost vector entry is not a number: '" + item + "'");
    }
  }
  if (static_cast<int>(w.size()) != cfg.n)
    throw UsageError("cost vector has " + std::to_string(w.size()) + " entries, expected n = " +
                     std::to_string(cfg.n));
  try {
    return CostVector(std::move(w));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxCliDim)
    throw UsageError("n must be between 1 and " + std::to_string(kMaxCliDim));
  if (cfg.samples < 1)
    throw UsageError("samples must be at least 1");
  if (!(cfg.tol > 0.0))
    throw UsageError("tol must be positive");
  if (cfg.max_iter < 0)
    throw UsageError("max-iter must be nonnegative");
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

std::string pattern_label(const SignPattern& p) { return p.to_string(); }

// critical-points ------------------------------------------------------------

int cmd_critical_points(const RunConfig& cfg, std::ostream& out) {
  const auto costs = parse_costs(cfg);
  auto recs = enumerate_critical_points(costs);
  std::stable_sort(recs.begin(), recs.end(), [](const auto& a, const auto& b) {
    return a.index != b.index ? a.index < b.index : a.value < b.value;
  });

  if (cfg.format == "json") {
    Json j;
    j["n"] = cfg.n;
    j["c"] = std::vector<double>(costs.weights().begin(), costs.weights().end());
    j["critical_points"] = Json::array();
    for (const auto& r : recs)
      j["critical_points"].push_back(to_json(r));
    out << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "eps,index,value\n";
    for (const auto& r : recs)
      out << "\"" << pattern_label(r.pattern) << "\"," << r.index << "," << fmt_double(r.value) << "\n";
  } else {
    out << "critical points of f_C on SO(" << cfg.n << "): " << recs.size() << "\n";
    out << std::left << std::setw(std::max(8, 2 * cfg.n + 3)) << "eps" << std::setw(8) << "index"
        << "value\n";
    for (const auto& r : recs)
      out << std::left << std::setw(std::max(8, 2 * cfg.n + 3)) << pattern_label(r.pattern)
          << std::setw(8) << r.index << fmt_double(r.value) << "\n";
  }
  return kExitOk;
}

// polynomials ----------------------------------------------------------------

int cmd_polynomials(const RunConfig& cfg, std::ostream& out) {
  const auto costs = parse_costs(cfg);
  const auto report = is_perfect(costs);
  const std::string verdict = report.perfect ? "PERFECT" : "NOT PERFECT";
  const std::string remainder = report.remainder ? report.remainder->to_string() : "infeasible";

  if (cfg.format == "json") {
    Json j;
    j["n"] = cfg.n;
    j.update(to_json(report));
    j["value_at_one"] = report.morse.value_at_one();
    j["verdict"] = verdict;
    out << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "quantity,polynomial\n";
    out << "morse,\"" << report.morse.to_string() << "\"\n";
    out << "poincare_basis,\"" << report.poincare_basis.to_string() << "\"\n";
    out << "poincare_product,\"" << report.poincare_product.to_string() << "\"\n";
    out << "remainder,\"" << remainder << "\"\n";
    out << "verdict," << verdict << "\n";
  } else {
    out << "Morse polynomial:               " << report.morse.to_string() << "\n";
    out << "Poincare polynomial (Z2 basis): " << report.poincare_basis.to_string() << "\n";
    out << "Poincare polynomial (product):  " << report.poincare_product.to_string() << "\n";
    out << "Remainder R(t):                 " << remainder << "\n";
    out << "P(1) = " << report.morse.value_at_one() << "\n";
    out << verdict << "\n";
  }
  return report.perfect ? kExitOk : kExitNotPerfect;
}

// verify ---------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto costs = parse_costs(cfg);
  std::mt19937_64 rng(cfg.seed);
  FlowConfig flow;
  flow.gradient_tolerance = cfg.tol;
  flow.max_iterations = cfg.max_iter;

  std::vector<tools::SuiteResult> suites;
  suites.push_back(tools::gradient_suite(costs, cfg.samples, rng));
  suites.push_back(tools::hessian_suite(costs, std::min(cfg.samples, 20), rng));
  suites.push_back(tools::index_suite(costs));
  suites.push_back(tools::criticality_suite(costs));
  suites.push_back(tools::flow_suite(costs, cfg.samples, flow, rng));

  const bool all_passed =
      std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed; });

  if (cfg.format == "json") {
    Json j;
    j["n"] = cfg.n;
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    j["suites"] = Json::array();
    for (const auto& s : suites)
      j["suites"].push_back({{"name", s.name},
                             {"passed", s.passed},
                             {"max_residual", s.max_residual},
                             {"threshold", s.threshold},
                             {"detail", s.detail}});
    j["passed"] = all_passed;
    out << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "suite,passed,max_residual,threshold,detail\n";
    for (const auto& s : suites)
      out << s.name << "," << (s.passed ? "true" : "false") << "," << s.max_residual << ","
          << s.threshold << ",\"" << s.detail << "\"\n";
  } else {
    for (const auto& s : suites)
      out << (s.passed ? "PASS " : "FAIL ") << std::left << std::setw(26) << s.name
          << "max residual " << std::setw(14) << s.max_residual << s.detail << "\n";
    out << (all_passed ? "all suites passed" : "some suites FAILED") << "\n";
  }
  return all_passed ? kExitOk : kExitSuiteFailed;
}

// flow -----------------------------------------------------------------------

int cmd_flow(const RunConfig& cfg, std::ostream& out) {
  const auto costs = parse_costs(cfg);
  FlowConfig flow;
  flow.gradient_tolerance = cfg.tol;
  flow.max_iterations = cfg.max_iter;

  std::vector<RotationMatrix> starts;
  if (!cfg.start.empty()) {
    std::ifstream in(cfg.start);
    if (!in)
      throw UsageError("cannot open start file " + cfg.start);
    Eigen::MatrixXd m;
    try {
      m = matrix_from_json(Json::parse(in));
    } catch (const std::exception& e) {
      throw UsageError(std::string("invalid start file: ") + e.what());
    }
    if (m.rows() != cfg.n || m.cols() != cfg.n)
      throw UsageError("start matrix must be " + std::to_string(cfg.n) + "x" + std::to_string(cfg.n));
    if (!is_rotation(m))
      throw UsageError("start matrix is not in SO(n)");
    starts.push_back(RotationMatrix::unchecked(m));
  } else {
    std::mt19937_64 rng(cfg.seed);
    for (int s = 0; s < cfg.samples; ++s)
      starts.push_back(haar_sample(cfg.n, rng));
  }

  std::vector<FlowResult> results;
  results.reserve(starts.size());
  for (const auto& a0 : starts)
    results.push_back(gradient_flow(a0, costs, flow));

  std::map<std::vector<int>, int> counts;
  int converged = 0, unclassified = 0;
  double max_grad = 0.0;
  long total_iter = 0;
  int min_iter = results.front().iterations, max_iter = results.front().iterations;
  for (const auto& r : results) {
    converged += r.converged;
    max_grad = std::max(max_grad, r.final_gradient_norm);
    total_iter += r.iterations;
    min_iter = std::min(min_iter, r.iterations);
    max_iter = std::max(max_iter, r.iterations);
    if (r.converged && r.classified_pattern)
      ++counts[r.classified_pattern->signs()];
    else
      ++unclassified;
  }
  // Summary lists every enumerated pattern in enumeration order.
  const auto recs = enumerate_critical_points(costs);

  if (cfg.format == "json") {
    for (std::size_t k = 0; k < results.size(); ++k) {
      Json j;
      j["sample"] = k;
      j.update(to_json(results[k]));
      if (results[k].classified_pattern)
        j["index"] = index_by_formula(*results[k].classified_pattern);
      out << j.dump() << "\n";
    }
    Json summary;
    summary["samples"] = results.size();
    summary["converged"] = converged;
    summary["unclassified"] = unclassified;
    summary["max_gradient_norm"] = max_grad;
    summary["iterations"] = {{"min", min_iter},
                             {"max", max_iter},
                             {"mean", static_cast<double>(total_iter) / static_cast<double>(results.size())}};
    Json by_pattern = Json::array();
    for (const auto& r : recs) {
      const auto it = counts.find(r.pattern.signs());
      by_pattern.push_back({{"eps", r.pattern.signs()},
                            {"index", r.index},
                            {"count", it == counts.end() ? 0 : it->second}});
    }
    summary["limits"] = by_pattern;
    out << Json{{"summary", summary}}.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "sample,converged,iterations,final_gradient_norm,pattern\n";
    for (std::size_t k = 0; k < results.size(); ++k) {
      const auto& r = results[k];
      out << k << "," << (r.converged ? "true" : "false") << "," << r.iterations << ","
          << r.final_gradient_norm << ",\""
          << (r.classified_pattern ? pattern_label(*r.classified_pattern) : "unclassified") << "\"\n";
    }
  } else {
    out << "gradient flow on SO(" << cfg.n << "), " << results.size() << " starts\n";
    out << "converged: " << converged << "   unclassified: " << unclassified
        << "   max |grad|: " << max_grad << "\n";
    out << "iterations: min " << min_iter << ", max " << max_iter << ", mean "
        << static_cast<double>(total_iter) / static_cast<double>(results.size()) << "\n";
    for (const auto& r : recs) {
      const auto it = counts.find(r.pattern.signs());
      out << "  " << std::left << std::setw(2 * cfg.n + 3) << pattern_label(r.pattern) << " index "
          << std::setw(4) << r.index << (it == counts.end() ? 0 : it->second) << "\n";
    }
  }
  return kExitOk;
}

void add_common_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--n", cfg.n, "Dimension n of SO(n)")->capture_default_str();
  cmd.add_option("--c", cfg.c, "Comma-separated strictly increasing weights, or 'default' (c_i = i)")
      ->capture_default_str();
  cmd.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  cmd.add_option("--samples", cfg.samples, "Number of random samples")->capture_default_str();
  cmd.add_option("--tol", cfg.tol, "Gradient-norm tolerance for the flow")->capture_default_str();
  cmd.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd.add_option("--out", cfg.out, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morse theory of f_C(A) = sum c_i A_ii on SO(n)"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* critical = app.add_subcommand("critical-points", "List all critical points with index and value");
  auto* polys = app.add_subcommand("polynomials", "Morse and Poincare polynomials and the perfectness verdict");
  auto* verify = app.add_subcommand("verify", "Run the numeric oracle suites");
  auto* flow = app.add_subcommand("flow", "Gradient flow from Haar-random starts");
  for (auto* cmd : {critical, polys, verify, flow})
    add_common_options(*cmd, cfg);
  for (auto* cmd : {verify, flow})
    cmd->add_option("--max-iter", cfg.max_iter, "Iteration cap per flow run")->capture_default_str();
  flow->add_option("--start", cfg.start, "JSON file holding a start matrix (row-major arrays)");

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

  try {
    validate(cfg);
    std::ostringstream buffer;
    int code = kExitOk;
    if (critical->parsed())
      code = cmd_critical_points(cfg, buffer);
    else if (polys->parsed())
      code = cmd_polynomials(cfg, buffer);
    else if (verify->parsed())
      code = cmd_verify(cfg, buffer);
    else
      code = cmd_flow(cfg, buffer);

    if (cfg.out.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file)
        throw UsageError("cannot open output file " + cfg.out);
      file << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
