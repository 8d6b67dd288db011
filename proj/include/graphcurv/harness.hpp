#pragma once

// Report assembly behind the `curvature` command line tool: graph addressing, per-vertex and
// per-edge curvature rows, theorem consistency flags, corpus verification, and serialization.

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"
#include "graphcurv/structure.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace graphcurv {

/// `gen:<name>[:<params>]` or `file:<path>`. Throws std::invalid_argument for a bad spec.
Graph resolve_graph_source(const std::string& spec);

/// Generator by name; `params` is everything after the first ':' of the generator part.
Graph generate(const std::string& name, const std::string& params);

/// Vertex by label, falling back to a decimal id. Throws std::invalid_argument.
VertexId resolve_vertex(const Graph& g, const std::string& token);

/// "a,b" split at the top-level comma (commas inside (), {} or [] do not count).
std::pair<VertexId, VertexId> resolve_edge(const Graph& g, const std::string& text);

/// nullopt: not applicable; otherwise passed / failed.
using Check = std::optional<bool>;

struct VertexRow {
  VertexId vertex = 0;
  std::string label;
  double rho = 0.0;
  std::string method;
  HypothesisClass hypothesis_class = HypothesisClass::inapplicable;
  std::size_t max_nonlink = 0;
  /// Smallest pairwise linkage at the vertex (nullopt with fewer than two neighbors).
  std::optional<Rational> min_linkage;
  bool triangle_free = false;
  /// 2 Gamma_2 f(x) of the matching test function (class_ii: flat, class_iii: negative).
  std::optional<Rational> certificate_value;
  std::size_t degree = 0;
  Check rho_sign;
  Check rho_sign_certificate;
  Check kappa_sign;
  Check linkage_rho;
  Check sign_implications;
};

struct EdgeRow {
  VertexId x = 0;
  VertexId y = 0;
  std::string label_x;
  std::string label_y;
  Rational kappa;
  std::size_t degree_x = 0;
  std::size_t degree_y = 0;
  bool decomposable = false;
  bool dual_gap_zero = false;
  Check quantized;
  Check biclique_kappa;
};

struct TheoremFlag {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;

  bool applicable() const { return checked > 0; }
  bool passed() const { return failed == 0; }
};

struct DiameterReport {
  std::size_t diameter = 0;
  std::optional<std::size_t> degree;
  std::size_t max_degree = 0;
  Rational kappa_star;
  /// 1/kappa* when kappa* > 0.
  std::optional<Rational> curvature_bound;
  /// 2d for regular graphs, max(2d, 2d^2 - 2d) with d the maximum degree otherwise.
  std::size_t degree_bound = 0;
  Check curvature_bound_holds;
  Check degree_bound_holds;
};

struct CurvatureReport {
  std::string source;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::optional<std::size_t> degree;
  bool has_k3 = false;
  bool has_k23 = false;
  std::vector<VertexRow> vertices;
  std::vector<EdgeRow> edges;
  std::optional<DiameterReport> diameter;
  std::vector<TheoremFlag> flags;
  double seconds = 0.0;

  bool passed() const;
};

struct ReportOptions {
  enum class Probe { all, vertex, edge };
  Probe probe = Probe::all;
  std::optional<VertexId> vertex;
  std::optional<std::pair<VertexId, VertexId>> edge;
  double tolerance = 1e-9;
  std::size_t jobs = 1;
  /// Shifts the first computed kappa off the 1/(2d) grid (for exercising failure paths).
  bool inject_fault = false;
};

/// Throws IncompleteBallError / std::domain_error when a requested probe is not computable.
CurvatureReport compute_report(const std::string& source, const Graph& g, const ReportOptions& options);

/// Throws std::domain_error for a disconnected or truncated graph.
DiameterReport diameter_bound(const Graph& g);

/// Recomputes every theorem flag from the row data.
std::vector<TheoremFlag> summarize_flags(const CurvatureReport& report, double tolerance);

std::string format_table(const CurvatureReport& report);
std::string format_csv(const CurvatureReport& report);
std::string format_json(const CurvatureReport& report, bool include_timing = true);
std::string format_diameter(const DiameterReport& report, const std::string& format);

/// Edge kappas read back from a serialized report.
std::map<std::pair<VertexId, VertexId>, Rational> read_report_csv_kappas(const std::string& text);
std::map<std::pair<VertexId, VertexId>, Rational> read_report_json_kappas(const std::string& text);

/// Generator specs of the built-in verification corpus.
std::vector<std::string> default_corpus();

struct VerifyOutcome {
  std::vector<CurvatureReport> reports;
  bool passed = true;
};

/// Expands "default" into default_corpus(); everything else is a graph source spec.
VerifyOutcome verify_corpus(const std::vector<std::string>& specs, const ReportOptions& options);

}  // namespace graphcurv
