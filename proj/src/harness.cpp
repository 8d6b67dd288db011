#include "graphcurv/harness.hpp"

#include "graphcurv/generators.hpp"
#include "graphcurv/graph_io.hpp"
#include "graphcurv/spectral.hpp"
#include "graphcurv/transport.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace graphcurv {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (text.empty() || pos != text.size() || text[0] == '-') {
    throw std::invalid_argument("expected a nonnegative integer for " + what + ", got '" + text + "'");
  }
  return value;
}

std::vector<std::size_t> parse_counts(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_count(part, what));
  return out;
}

// "a-b,c-d" on vertices 0..n-1
Graph parse_small_graph(std::size_t n, const std::string& edges_text) {
  std::vector<Edge> edges;
  if (!edges_text.empty()) {
    for (const auto& pair : split(edges_text, ',')) {
      const auto ends = split(pair, '-');
      if (ends.size() != 2) throw std::invalid_argument("expected an edge 'a-b', got '" + pair + "'");
      edges.emplace_back(parse_count(ends[0], "edge endpoint"), parse_count(ends[1], "edge endpoint"));
    }
  }
  return Graph(n, edges);
}

template <typename Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          fn(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

Check all_of_checks(std::initializer_list<bool> parts) {
  return std::all_of(parts.begin(), parts.end(), [](bool b) { return b; });
}

// --- per-row theorem checks; the report and summarize_flags share these ---

Check check_rho_sign(const VertexRow& row, double tol) {
  switch (row.hypothesis_class) {
    case HypothesisClass::class_i: return std::abs(row.rho - 2.0) <= tol;
    case HypothesisClass::class_ii: return std::abs(row.rho) <= tol;
    case HypothesisClass::class_iii: return row.rho < -tol;
    case HypothesisClass::inapplicable: return std::nullopt;
  }
  return std::nullopt;
}

Check check_rho_sign_certificate(const VertexRow& row) {
  if (!row.certificate_value) return std::nullopt;
  if (row.hypothesis_class == HypothesisClass::class_ii) return *row.certificate_value == 0;
  if (row.hypothesis_class == HypothesisClass::class_iii) {
    return *row.certificate_value <= Rational(-2 * static_cast<long>(row.degree));
  }
  return std::nullopt;
}

Check check_linkage_rho(const VertexRow& row, const std::optional<std::size_t>& degree, double tol) {
  if (!degree || !row.triangle_free) return std::nullopt;
  if (row.min_linkage && *row.min_linkage < Rational(1, 2)) return std::nullopt;
  return std::abs(row.rho - 2.0) <= tol;
}

Check check_kappa_sign(const VertexRow& row, const std::vector<Rational>& kappas) {
  if (row.hypothesis_class == HypothesisClass::inapplicable || kappas.size() != row.degree) return std::nullopt;
  const Rational lowest = *std::min_element(kappas.begin(), kappas.end());
  switch (row.hypothesis_class) {
    case HypothesisClass::class_i: return lowest > 0;
    case HypothesisClass::class_ii: return lowest >= 0;
    case HypothesisClass::class_iii: return lowest <= 0;
    case HypothesisClass::inapplicable: break;
  }
  return std::nullopt;
}

Check check_sign_implications(const VertexRow& row, const std::vector<Rational>& kappas, double tol) {
  if (row.hypothesis_class == HypothesisClass::inapplicable || kappas.size() != row.degree) return std::nullopt;
  GraphHypotheses h;
  h.degree = row.degree;
  CdResult cd;
  cd.rho = row.rho;
  std::map<VertexId, Rational> by_neighbor;
  for (std::size_t k = 0; k < kappas.size(); ++k) by_neighbor[k] = kappas[k];
  return sign_implications_check(h, cd, by_neighbor, tol);
}

Check check_quantized(const EdgeRow& row) {
  if (row.degree_x != row.degree_y) return std::nullopt;
  const Rational scaled = row.kappa * Rational(2 * static_cast<long>(row.degree_x));
  return boost::multiprecision::denominator(scaled) == 1;
}

Check check_biclique_kappa(const EdgeRow& row) {
  if (!row.decomposable) return std::nullopt;
  return row.kappa == Rational(1, static_cast<long>(row.degree_x));
}

std::map<VertexId, std::vector<Rational>> incident_kappas(const CurvatureReport& report) {
  std::map<VertexId, std::vector<Rational>> out;
  for (const EdgeRow& e : report.edges) {
    out[e.x].push_back(e.kappa);
    out[e.y].push_back(e.kappa);
  }
  return out;
}

std::string check_text(const Check& c) {
  if (!c) return "n/a";
  return *c ? "pass" : "fail";
}

json check_json(const Check& c) {
  if (!c) return nullptr;
  return *c ? "pass" : "fail";
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(15) << v;
  return out.str();
}

std::string method_name(CdResult::Method m) {
  return m == CdResult::Method::eigensolve ? "eigensolve" : "exact-special-case";
}

DiameterReport diameter_from_kappas(const Graph& g, const std::vector<Rational>& kappas) {
  DiameterReport out;
  out.diameter = diameter(g);
  out.degree = is_regular(g);
  for (VertexId v = 0; v < g.size(); ++v) out.max_degree = std::max(out.max_degree, g.degree(v));
  if (kappas.empty()) return out;
  out.kappa_star = *std::min_element(kappas.begin(), kappas.end());
  const std::size_t d = out.max_degree;
  out.degree_bound = out.degree ? 2 * d : std::max(2 * d, 2 * d * d - 2 * d);
  if (out.kappa_star > 0) {
    out.curvature_bound = Rational(1) / out.kappa_star;
    out.curvature_bound_holds = Rational(static_cast<long>(out.diameter)) <= *out.curvature_bound;
    out.degree_bound_holds = out.diameter <= out.degree_bound;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "gen:hypercube:2..6" -> gen:hypercube:2 ... gen:hypercube:6; several ranges multiply out.
std::vector<std::string> expand_ranges(const std::string& spec) {
  static const std::regex range(R"((\d+)\.\.(\d+))");
  std::smatch m;
  if (!std::regex_search(spec, m, range)) return {spec};
  const std::size_t lo = std::stoul(m[1].str());
  const std::size_t hi = std::stoul(m[2].str());
  if (lo > hi) throw std::invalid_argument("empty range in '" + spec + "'");
  std::vector<std::string> out;
  for (std::size_t k = lo; k <= hi; ++k) {
    for (auto& s : expand_ranges(m.prefix().str() + std::to_string(k) + m.suffix().str())) out.push_back(std::move(s));
  }
  return out;
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.') ? c : '_';
  return out;
}

}  // namespace

// ---------------------------------------------------------------- sources

Graph generate(const std::string& name, const std::string& params) {
  const auto parts = params.empty() ? std::vector<std::string>{} : split(params, ':');
  auto arg = [&](std::size_t k) -> const std::string& {
    if (k >= parts.size()) throw std::invalid_argument("generator '" + name + "' needs more parameters");
    return parts[k];
  };
  if (name == "hypercube") return hypercube(parse_count(arg(0), "dimension"));
  if (name == "cycle") return cycle(parse_count(arg(0), "length"));
  if (name == "complete-bipartite") return complete_bipartite(parse_count(arg(0), "side"));
  if (name == "star") return star(parse_count(arg(0), "leaves"));
  if (name == "transposition-cayley") return transposition_cayley(parse_count(arg(0), "n"));
  if (name == "adjacent-transposition-cayley") return adjacent_transposition_cayley(parse_count(arg(0), "n"));
  if (name == "flip") return flip_graph(parse_count(arg(0), "polygon size"));
  if (name == "lattice" || name == "tree") {
    const auto values = parse_counts(arg(0), name);
    if (values.empty() || values.size() > 2) throw std::invalid_argument(name + " takes one or two parameters");
    const std::size_t radius = values.size() == 2 ? values[1] : 4;
    return name == "lattice" ? lattice_ball(values[0], radius) : regular_tree(values[0], radius);
  }
  if (name == "incidence") return cyclic_incidence_graph(parse_count(arg(0), "n"), parse_counts(arg(1), "difference set"));
  if (name == "interchange") {
    return interchange_graph(parse_small_graph(parse_count(arg(0), "vertex count"), parts.size() > 1 ? parts[1] : ""));
  }
  if (name == "zigzag") {
    // zigzag:hypercube:<d>,<name>[:<params>]
    const auto comma = params.find(',');
    if (comma == std::string::npos || params.rfind("hypercube:", 0) != 0) {
      throw std::invalid_argument("zigzag expects 'hypercube:<d>,<generator>'");
    }
    const auto d = parse_count(params.substr(10, comma - 10), "dimension");
    const std::string second = params.substr(comma + 1);
    const auto colon = second.find(':');
    const Graph g2 = colon == std::string::npos ? generate(second, "")
                                                : generate(second.substr(0, colon), second.substr(colon + 1));
    return zigzag(labelled_hypercube(d), g2);
  }
  return named_graph(name);
}

Graph resolve_graph_source(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return load_graph_file(spec.substr(5));
  if (spec.rfind("gen:", 0) == 0) {
    const std::string rest = spec.substr(4);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) return generate(rest, "");
    return generate(rest.substr(0, colon), rest.substr(colon + 1));
  }
  throw std::invalid_argument("graph source must start with 'gen:' or 'file:', got '" + spec + "'");
}

VertexId resolve_vertex(const Graph& g, const std::string& token) {
  if (const auto v = g.find_label(token)) return *v;
  if (!token.empty() && std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const VertexId v = std::stoul(token);
    if (g.contains(v)) return v;
  }
  throw std::invalid_argument("no vertex '" + token + "'");
}

std::pair<VertexId, VertexId> resolve_edge(const Graph& g, const std::string& text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      return {resolve_vertex(g, text.substr(0, i)), resolve_vertex(g, text.substr(i + 1))};
    }
  }
  throw std::invalid_argument("edge must be written 'a,b', got '" + text + "'");
}

// ---------------------------------------------------------------- reports

bool CurvatureReport::passed() const {
  return std::all_of(flags.begin(), flags.end(), [](const TheoremFlag& f) { return f.passed(); });
}

CurvatureReport compute_report(const std::string& source, const Graph& g, const ReportOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CurvatureReport report;
  report.source = source;
  report.vertex_count = g.size();
  report.edge_count = g.edge_count();
  const GraphHypotheses hyp = analyze_hypotheses(g);
  report.degree = hyp.degree;
  report.has_k3 = hyp.has_k3;
  report.has_k23 = hyp.has_k23;

  std::vector<VertexId> probe_vertices;
  std::vector<Edge> probe_edges;
  switch (options.probe) {
    case ReportOptions::Probe::all:
      for (VertexId v = 0; v < g.size(); ++v) {
        if (g.degree(v) > 0 && g.vertex_probe_safe(v)) probe_vertices.push_back(v);
      }
      for (const Edge& e : g.edges()) {
        if (g.edge_probe_safe(e.u, e.v)) probe_edges.push_back(e);
      }
      break;
    case ReportOptions::Probe::vertex: {
      if (!options.vertex) throw std::invalid_argument("vertex probe without a vertex");
      const VertexId v = *options.vertex;
      if (!g.contains(v)) throw std::domain_error("unknown vertex " + std::to_string(v));
      probe_vertices.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (g.edge_probe_safe(v, w)) probe_edges.emplace_back(v, w);
      }
      break;
    }
    case ReportOptions::Probe::edge:
      if (!options.edge) throw std::invalid_argument("edge probe without an edge");
      probe_edges.emplace_back(options.edge->first, options.edge->second);
      break;
  }

  report.edges.resize(probe_edges.size());
  parallel_for(probe_edges.size(), options.jobs, [&](std::size_t k) {
    const Edge& e = probe_edges[k];
    EdgeRow& row = report.edges[k];
    row.x = e.u;
    row.y = e.v;
    row.label_x = g.label(e.u);
    row.label_y = g.label(e.v);
    row.degree_x = g.degree(e.u);
    row.degree_y = g.degree(e.v);
    const OllivierResult result = ollivier_curvature(g, e.u, e.v);
    row.kappa = result.kappa;
    const auto extended = extend_certificate(g, result.transport.certificate, e.u, e.v);
    row.dual_gap_zero = result.transport.certificate.gap == 0 && is_one_lipschitz(g, extended.values) &&
                        result.transport.plan.total_cost == result.transport.distance &&
                        plan_is_feasible(result.transport.plan, lazy_measure(g, e.u), lazy_measure(g, e.v));
    if (!hyp.has_k3) {
      try {
        row.decomposable = bipartite_decomposition(g, e.u, e.v).has_value();
      } catch (const std::domain_error&) {
        row.decomposable = false;
      }
    }
  });
  if (options.inject_fault && !report.edges.empty()) {
    EdgeRow& row = report.edges.front();
    row.kappa += Rational(1, 4 * static_cast<long>(row.degree_x * row.degree_y));
  }
  for (EdgeRow& row : report.edges) {
    row.quantized = check_quantized(row);
    row.biclique_kappa = check_biclique_kappa(row);
  }

  report.vertices.resize(probe_vertices.size());
  parallel_for(probe_vertices.size(), options.jobs, [&](std::size_t k) {
    const VertexId v = probe_vertices[k];
    VertexRow& row = report.vertices[k];
    row.vertex = v;
    row.label = g.label(v);
    row.degree = g.degree(v);
    const LocalBall ball = extract_ball(g, v);
    const CdResult cd = cd_curvature(ball);
    row.rho = cd.rho;
    row.method = method_name(cd.method);
    const ClassVerdict verdict = classify_vertex(g, v, hyp);
    row.hypothesis_class = verdict.hypothesis_class;
    const LinkProfile profile = link_profile(ball);
    row.max_nonlink = profile.max_nonlink;
    row.triangle_free = !hyp.has_k3;
    if (profile.neighbors.size() >= 2) {
      Rational lowest = profile.linkage(0, 1);
      for (Eigen::Index i = 0; i < profile.linkage.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < profile.linkage.cols(); ++j) lowest = std::min(lowest, Rational(profile.linkage(i, j)));
      }
      row.min_linkage = lowest;
    }
    std::optional<Vector<Rational>> test;
    if (verdict.hypothesis_class == HypothesisClass::class_ii) test = flat_test_function(ball, profile);
    if (verdict.hypothesis_class == HypothesisClass::class_iii) test = negative_test_function(ball, profile);
    if (test) row.certificate_value = gamma2_form<Rational>(ball)(*test);
  });

  const auto kappas = incident_kappas(report);
  for (VertexRow& row : report.vertices) {
    const auto it = kappas.find(row.vertex);
    const std::vector<Rational> empty;
    const auto& ks = it == kappas.end() ? empty : it->second;
    row.rho_sign = check_rho_sign(row, options.tolerance);
    row.rho_sign_certificate = check_rho_sign_certificate(row);
    row.linkage_rho = check_linkage_rho(row, report.degree, options.tolerance);
    row.kappa_sign = check_kappa_sign(row, ks);
    row.sign_implications = check_sign_implications(row, ks, options.tolerance);
  }

  if (options.probe == ReportOptions::Probe::all && !g.truncation() && is_connected(g) && g.edge_count() > 0) {
    std::vector<Rational> all;
    for (const EdgeRow& row : report.edges) all.push_back(row.kappa);
    report.diameter = diameter_from_kappas(g, all);
  }

  report.flags = summarize_flags(report, options.tolerance);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<TheoremFlag> summarize_flags(const CurvatureReport& report, double tolerance) {
  auto flag = [](const char* name) {
    TheoremFlag f;
    f.name = name;
    return f;
  };
  TheoremFlag rho_sign = flag("rho-sign"), rho_cert = flag("rho-sign-certificate"), kappa_sign = flag("kappa-sign"),
              linkage_rho = flag("linkage-rho"), biclique_kappa = flag("biclique-kappa"), sign_implications = flag("sign-implications"),
              quant = flag("kappa-quantization"), dual = flag("strong-duality"), diameter_flag = flag("diameter-bound");
  auto record = [](TheoremFlag& flag, const Check& c, const std::string& where) {
    if (!c) return;
    ++flag.checked;
    if (!*c) {
      ++flag.failed;
      flag.failures.push_back(where);
    }
  };
  const auto kappas = incident_kappas(report);
  for (const VertexRow& row : report.vertices) {
    const auto it = kappas.find(row.vertex);
    const std::vector<Rational> empty;
    const auto& ks = it == kappas.end() ? empty : it->second;
    const std::string where = "vertex " + row.label + " (rho=" + format_double(row.rho) + ", " +
                              to_string(row.hypothesis_class) + ")";
    record(rho_sign, check_rho_sign(row, tolerance), where);
    record(rho_cert, check_rho_sign_certificate(row),
           where + " test function 2*Gamma2=" + (row.certificate_value ? to_fraction_string(*row.certificate_value) : "-"));
    record(kappa_sign, check_kappa_sign(row, ks), where);
    record(linkage_rho, check_linkage_rho(row, report.degree, tolerance), where);
    record(sign_implications, check_sign_implications(row, ks, tolerance), where);
  }
  for (const EdgeRow& row : report.edges) {
    const std::string where = "edge " + row.label_x + " - " + row.label_y + " (kappa=" + to_fraction_string(row.kappa) + ")";
    record(quant, check_quantized(row), where);
    record(biclique_kappa, check_biclique_kappa(row), where);
    record(dual, Check(row.dual_gap_zero), where);
  }
  if (report.diameter) {
    const DiameterReport& d = *report.diameter;
    const std::string where = "diameter " + std::to_string(d.diameter) + ", kappa*=" + to_fraction_string(d.kappa_star);
    if (d.curvature_bound_holds) {
      record(diameter_flag, all_of_checks({*d.curvature_bound_holds, d.degree_bound_holds.value_or(true)}), where);
    }
  }
  return {rho_sign, rho_cert, kappa_sign, linkage_rho, biclique_kappa, sign_implications, quant, dual, diameter_flag};
}

DiameterReport diameter_bound(const Graph& g) {
  if (g.truncation()) throw std::domain_error("diameter of a truncated infinite graph is meaningless");
  if (!is_connected(g)) throw std::domain_error("graph is disconnected");
  std::vector<Rational> kappas;
  for (const Edge& e : g.edges()) kappas.push_back(ollivier_kappa(g, e.u, e.v));
  return diameter_from_kappas(g, kappas);
}

// ---------------------------------------------------------------- formatting

std::string format_table(const CurvatureReport& report) {
  std::ostringstream out;
  out << "source: " << report.source << "\n"
      << "vertices: " << report.vertex_count << "  edges: " << report.edge_count
      << "  degree: " << (report.degree ? std::to_string(*report.degree) : "irregular")
      << "  K3: " << (report.has_k3 ? "yes" : "no") << "  K23: " << (report.has_k23 ? "yes" : "no") << "\n";
  if (!report.vertices.empty()) {
    out << "\n" << std::left << std::setw(16) << "vertex" << std::setw(20) << "rho" << std::setw(14) << "class"
        << std::setw(4) << "N" << "min l\n";
    for (const VertexRow& row : report.vertices) {
      out << std::setw(16) << row.label << std::setw(20) << format_double(row.rho) << std::setw(14)
          << to_string(row.hypothesis_class) << std::setw(4) << row.max_nonlink
          << (row.min_linkage ? to_fraction_string(*row.min_linkage) : "-") << "\n";
    }
  }
  if (!report.edges.empty()) {
    out << "\n" << std::left << std::setw(34) << "edge" << std::setw(10) << "kappa" << "decimal\n";
    for (const EdgeRow& row : report.edges) {
      out << std::setw(34) << (row.label_x + " - " + row.label_y) << std::setw(10) << to_fraction_string(row.kappa)
          << to_decimal_string(row.kappa) << "\n";
    }
  }
  if (report.diameter) {
    out << "\n" << format_diameter(*report.diameter, "table");
  }
  out << "\n";
  for (const TheoremFlag& flag : report.flags) {
    out << std::setw(22) << flag.name
        << (flag.applicable() ? (flag.passed() ? "pass" : "FAIL") : "n/a") << "  (" << flag.checked << " checked)\n";
    for (const auto& f : flag.failures) out << "    " << f << "\n";
  }
  out << "time: " << std::fixed << std::setprecision(3) << report.seconds << " s\n";
  return out.str();
}

std::string format_csv(const CurvatureReport& report) {
  std::ostringstream out;
  out << "kind,x,y,label_x,label_y,rho,class,max_nonlink,min_linkage,certificate,kappa,kappa_decimal,checks\n";
  for (const VertexRow& row : report.vertices) {
    const std::string checks = "rho-sign=" + check_text(row.rho_sign) + ";rho-sign-certificate=" +
                               check_text(row.rho_sign_certificate) + ";kappa-sign=" + check_text(row.kappa_sign) +
                               ";linkage-rho=" + check_text(row.linkage_rho) + ";sign-implications=" + check_text(row.sign_implications);
    out << "vertex," << row.vertex << ",," << csv_field(row.label) << ",," << format_double(row.rho) << ","
        << to_string(row.hypothesis_class) << "," << row.max_nonlink << ","
        << (row.min_linkage ? to_fraction_string(*row.min_linkage) : "") << ","
        << (row.certificate_value ? to_fraction_string(*row.certificate_value) : "") << ",,," << checks << "\n";
  }
  for (const EdgeRow& row : report.edges) {
    const std::string checks = "quantization=" + check_text(row.quantized) + ";biclique-kappa=" + check_text(row.biclique_kappa) +
                               ";strong-duality=" + (row.dual_gap_zero ? "pass" : "fail");
    out << "edge," << row.x << "," << row.y << "," << csv_field(row.label_x) << "," << csv_field(row.label_y)
        << ",,,,,," << to_fraction_string(row.kappa) << "," << to_decimal_string(row.kappa) << "," << checks << "\n";
  }
  return out.str();
}

std::string format_json(const CurvatureReport& report, bool include_timing) {
  json doc;
  doc["source"] = report.source;
  doc["vertices"] = report.vertex_count;
  doc["edges"] = report.edge_count;
  doc["degree"] = report.degree ? json(*report.degree) : json(nullptr);
  doc["has_k3"] = report.has_k3;
  doc["has_k23"] = report.has_k23;
  doc["vertex_rows"] = json::array();
  for (const VertexRow& row : report.vertices) {
    doc["vertex_rows"].push_back({
        {"vertex", row.vertex},
        {"label", row.label},
        {"rho", row.rho},
        {"method", row.method},
        {"class", to_string(row.hypothesis_class)},
        {"max_nonlink", row.max_nonlink},
        {"min_linkage", row.min_linkage ? json(to_fraction_string(*row.min_linkage)) : json(nullptr)},
        {"certificate", row.certificate_value ? json(to_fraction_string(*row.certificate_value)) : json(nullptr)},
        {"degree", row.degree},
        {"checks",
         {{"rho-sign", check_json(row.rho_sign)},
          {"rho-sign-certificate", check_json(row.rho_sign_certificate)},
          {"kappa-sign", check_json(row.kappa_sign)},
          {"linkage-rho", check_json(row.linkage_rho)},
          {"sign-implications", check_json(row.sign_implications)}}},
    });
  }
  doc["edge_rows"] = json::array();
  for (const EdgeRow& row : report.edges) {
    doc["edge_rows"].push_back({
        {"x", row.x},
        {"y", row.y},
        {"label_x", row.label_x},
        {"label_y", row.label_y},
        {"kappa", to_fraction_string(row.kappa)},
        {"kappa_decimal", to_decimal_string(row.kappa)},
        {"decomposable", row.decomposable},
        {"checks",
         {{"quantization", check_json(row.quantized)},
          {"biclique-kappa", check_json(row.biclique_kappa)},
          {"strong-duality", row.dual_gap_zero ? "pass" : "fail"}}},
    });
  }
  doc["diameter"] = report.diameter ? json::parse(format_diameter(*report.diameter, "json")) : json(nullptr);
  doc["flags"] = json::array();
  for (const TheoremFlag& flag : report.flags) {
    doc["flags"].push_back({{"name", flag.name},
                            {"checked", flag.checked},
                            {"failed", flag.failed},
                            {"failures", flag.failures}});
  }
  doc["passed"] = report.passed();
  if (include_timing) doc["seconds"] = report.seconds;
  return doc.dump(2) + "\n";
}

std::string format_diameter(const DiameterReport& d, const std::string& format) {
  if (format == "json") {
    json doc{{"diameter", d.diameter},
             {"degree", d.degree ? json(*d.degree) : json(nullptr)},
             {"max_degree", d.max_degree},
             {"kappa_star", to_fraction_string(d.kappa_star)},
             {"curvature_bound", d.curvature_bound ? json(to_fraction_string(*d.curvature_bound)) : json(nullptr)},
             {"degree_bound", d.degree_bound},
             {"curvature_bound_holds", check_json(d.curvature_bound_holds)},
             {"degree_bound_holds", check_json(d.degree_bound_holds)}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == "csv") {
    out << "diameter,degree,max_degree,kappa_star,curvature_bound,degree_bound,curvature_bound_holds,degree_bound_holds\n"
        << d.diameter << "," << (d.degree ? std::to_string(*d.degree) : "") << "," << d.max_degree << ","
        << to_fraction_string(d.kappa_star) << "," << (d.curvature_bound ? to_fraction_string(*d.curvature_bound) : "")
        << "," << d.degree_bound << "," << check_text(d.curvature_bound_holds) << ","
        << check_text(d.degree_bound_holds) << "\n";
    return out.str();
  }
  out << "diameter: " << d.diameter << "\n"
      << "kappa*: " << to_fraction_string(d.kappa_star) << "\n";
  if (d.curvature_bound) {
    out << "D <= 1/kappa* = " << to_fraction_string(*d.curvature_bound) << ": " << check_text(d.curvature_bound_holds) << "\n"
        << (d.degree ? "D <= 2d = " : "D <= 2d^2 - 2d = ") << d.degree_bound << ": " << check_text(d.degree_bound_holds) << "\n";
  } else {
    out << "kappa* <= 0: no curvature bound\n";
  }
  return out.str();
}

std::map<std::pair<VertexId, VertexId>, Rational> read_report_csv_kappas(const std::string& text) {
  std::map<std::pair<VertexId, VertexId>, Rational> out;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = parse_csv_line(line);
    if (fields.size() != 13) throw ParseError(line_no, "expected 13 fields");
    if (fields[0] != "edge") continue;
    out[{std::stoul(fields[1]), std::stoul(fields[2])}] = parse_fraction(fields[10]);
  }
  return out;
}

std::map<std::pair<VertexId, VertexId>, Rational> read_report_json_kappas(const std::string& text) {
  std::map<std::pair<VertexId, VertexId>, Rational> out;
  const json doc = json::parse(text);
  for (const json& row : doc.at("edge_rows")) {
    out[{row.at("x").get<VertexId>(), row.at("y").get<VertexId>()}] = parse_fraction(row.at("kappa").get<std::string>());
  }
  return out;
}

// ---------------------------------------------------------------- verification

std::vector<std::string> default_corpus() {
  std::vector<std::string> corpus;
  for (int d = 1; d <= 6; ++d) corpus.push_back("gen:hypercube:" + std::to_string(d));
  for (int n = 2; n <= 6; ++n) corpus.push_back("gen:complete-bipartite:" + std::to_string(n));
  for (int k = 4; k <= 8; ++k) corpus.push_back("gen:cycle:" + std::to_string(k));
  for (int n = 1; n <= 3; ++n) corpus.push_back("gen:lattice:" + std::to_string(n) + ",4");
  for (int d = 3; d <= 5; ++d) corpus.push_back("gen:tree:" + std::to_string(d) + ",4");
  for (const char* name : {"petersen", "dodecahedron", "heawood", "fano-complement", "biplane-11"}) {
    corpus.push_back(std::string("gen:") + name);
  }
  corpus.push_back("gen:flip:5");
  corpus.push_back("gen:flip:6");
  corpus.push_back("gen:adjacent-transposition-cayley:3");
  corpus.push_back("gen:adjacent-transposition-cayley:4");
  for (int n = 3; n <= 5; ++n) corpus.push_back("gen:transposition-cayley:" + std::to_string(n));
  for (const char* h : {"4:0-1,2-3", "6:0-1,2-3,4-5", "3:0-1,1-2", "5:0-1,1-2,3-4", "6:0-1,1-2,3-4,4-5",
                        "4:0-1,0-2,0-3", "4:0-1,1-2,2-3", "3:0-1,1-2,0-2"}) {
    corpus.push_back(std::string("gen:interchange:") + h);
  }
  for (int n = 3; n <= 8; ++n) corpus.push_back("gen:star:" + std::to_string(n));
  corpus.push_back("gen:zigzag:hypercube:6,cycle:6");
  corpus.push_back("gen:zigzag:hypercube:8,cycle:8");
  return corpus;
}

VerifyOutcome verify_corpus(const std::vector<std::string>& specs, const ReportOptions& options) {
  std::vector<std::string> expanded;
  for (const auto& spec : specs) {
    if (spec == "default") {
      const auto corpus = default_corpus();
      expanded.insert(expanded.end(), corpus.begin(), corpus.end());
    } else {
      for (auto& s : expand_ranges(spec)) expanded.push_back(std::move(s));
    }
  }
  ReportOptions all = options;
  all.probe = ReportOptions::Probe::all;

  VerifyOutcome outcome;
  const char* replay_dir = std::getenv("CURVATURE_CORPUS_DIR");
  for (const auto& spec : expanded) {
    const Graph g = resolve_graph_source(spec);
    CurvatureReport report = compute_report(spec, g, all);
    if (!report.passed()) {
      outcome.passed = false;
      if (replay_dir && *replay_dir) {
        const std::filesystem::path dir(replay_dir);
        std::filesystem::create_directories(dir);
        std::ofstream(dir / (sanitize(spec) + ".graph.json")) << write_graph_json(g);
        std::ofstream(dir / (sanitize(spec) + ".report.json")) << format_json(report);
      }
    }
    outcome.reports.push_back(std::move(report));
  }
  return outcome;
}

}  // namespace graphcurv
