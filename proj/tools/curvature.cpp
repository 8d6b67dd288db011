// curvature: Bakry-Emery and Ollivier curvature of graphs, with theorem cross-checks.
//
//   curvature <source> [--all | --vertex V | --edge A,B] [--format table|csv|json] [--out PATH]
//   curvature verify [default | <source>...]
//   curvature diameter-bound <source>
//   curvature gen <source> --out PATH
//
// Exit status: 0 all checks pass, 1 a theorem check failed, 2 usage or input error.

#include "graphcurv/graph_io.hpp"
#include "graphcurv/harness.hpp"
#include "graphcurv/spectral.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace graphcurv;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kPass;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kUsage;
  }
  out << text;
  return kPass;
}

std::string render(const CurvatureReport& report, const std::string& format) {
  if (format == "csv") return format_csv(report);
  if (format == "json") return format_json(report);
  return format_table(report);
}

}  // namespace

int main(int argc, char** argv) {
  // `curvature <source> ...` is shorthand for `curvature curvature <source> ...`.
  std::vector<std::string> args(argv + 1, argv + argc);
  static const std::set<std::string> commands{"curvature", "verify", "diameter-bound", "gen"};
  if (!args.empty() && !commands.count(args.front()) && args.front().rfind("-", 0) != 0) {
    args.insert(args.begin(), "curvature");
  }
  std::reverse(args.begin(), args.end());

  CLI::App app{"Bakry-Emery and Ollivier curvature of graphs"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string out_path;
  double tolerance = 1e-9;
  std::size_t jobs = 1;
  bool inject_fault = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--out", out_path, "Write the report to a file instead of stdout");
  };
  auto add_compute = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", tolerance, "Acceptance tolerance for eigenvalue comparisons")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
    cmd->add_flag("--inject-fault", inject_fault, "Perturb one kappa value to exercise the failure path");
  };

  std::string source;
  bool probe_all = false;
  std::string vertex_token;
  std::string edge_token;
  auto* curvature = app.add_subcommand("curvature", "Curvature report for one graph");
  curvature->add_option("source", source, "gen:<name>[:<params>] or file:<path>")->required();
  auto* all_opt = curvature->add_flag("--all", probe_all, "Every vertex and edge (default)");
  auto* vertex_opt = curvature->add_option("--vertex", vertex_token, "One vertex by label or id");
  auto* edge_opt = curvature->add_option("--edge", edge_token, "One edge written 'a,b'");
  all_opt->excludes(vertex_opt)->excludes(edge_opt);
  vertex_opt->excludes(edge_opt);
  add_common(curvature);
  add_compute(curvature);

  std::vector<std::string> corpus;
  auto* verify = app.add_subcommand("verify", "Run every applicable theorem check over a corpus");
  verify->add_option("corpus", corpus, "Sources; 'default' is the built-in corpus; 'a..b' expands integer ranges");
  add_common(verify);
  add_compute(verify);

  std::string diameter_source;
  auto* diameter_cmd = app.add_subcommand("diameter-bound", "Diameter against the curvature bounds");
  diameter_cmd->add_option("source", diameter_source)->required();
  add_common(diameter_cmd);

  std::string gen_source;
  auto* gen = app.add_subcommand("gen", "Write a generated graph as JSON");
  gen->add_option("source", gen_source)->required();
  add_common(gen);

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (curvature->parsed()) {
      const Graph g = resolve_graph_source(source);
      ReportOptions options;
      options.tolerance = tolerance;
      options.jobs = jobs;
      options.inject_fault = inject_fault;
      if (!vertex_token.empty()) {
        options.probe = ReportOptions::Probe::vertex;
        options.vertex = resolve_vertex(g, vertex_token);
      } else if (!edge_token.empty()) {
        options.probe = ReportOptions::Probe::edge;
        options.edge = resolve_edge(g, edge_token);
      }
      const CurvatureReport report = compute_report(source, g, options);
      if (const int rc = emit(render(report, format), out_path); rc != kPass) return rc;
      return report.passed() ? kPass : kViolation;
    }
    if (verify->parsed()) {
      ReportOptions options;
      options.tolerance = tolerance;
      options.jobs = jobs;
      options.inject_fault = inject_fault;
      if (corpus.empty()) corpus.push_back("default");
      const VerifyOutcome outcome = verify_corpus(corpus, options);
      std::string text;
      for (const auto& report : outcome.reports) {
        if (format == "table") {
          text += (report.passed() ? "pass  " : "FAIL  ") + report.source + "\n";
          for (const auto& flag : report.flags) {
            for (const auto& failure : flag.failures) text += "      " + flag.name + ": " + failure + "\n";
          }
        } else {
          text += render(report, format);
        }
      }
      if (format == "table") {
        text += outcome.passed ? "all checks passed\n" : "theorem violations found\n";
      }
      if (const int rc = emit(text, out_path); rc != kPass) return rc;
      return outcome.passed ? kPass : kViolation;
    }
    if (diameter_cmd->parsed()) {
      const DiameterReport report = diameter_bound(resolve_graph_source(diameter_source));
      if (const int rc = emit(format_diameter(report, format), out_path); rc != kPass) return rc;
      const bool ok = report.curvature_bound_holds.value_or(true) && report.degree_bound_holds.value_or(true);
      return ok ? kPass : kViolation;
    }
    if (gen->parsed()) {
      return emit(write_graph_json(resolve_graph_source(gen_source)), out_path);
    }
  } catch (const graphcurv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const IncompleteBallError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
