#include "graphcurv/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace graphcurv {

namespace {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Line of the k-th element of the array stored under a top-level key, found by scanning the
// raw text (the DOM keeps no positions). Falls back to line 1.
std::size_t element_line(std::string_view text, const std::string& key, std::size_t k) {
  const std::string quoted = "\"" + key + "\"";
  int depth = 0;
  bool in_string = false;
  std::size_t array_depth = 0;
  std::size_t seen = 0;
  bool expect_element = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    if (expect_element && !std::isspace(static_cast<unsigned char>(c))) {
      expect_element = false;
      if (c == ']' && depth == static_cast<int>(array_depth)) return 1;
      if (seen++ == k) return line_of_offset(text, i);
    }
    if (c == '"') {
      if (depth == 1 && array_depth == 0 && text.compare(i, quoted.size(), quoted) == 0) {
        const auto open = text.find('[', i + quoted.size());
        if (open == std::string_view::npos) return 1;
        i = open;
        depth = 2;
        array_depth = 2;
        expect_element = true;
        continue;
      }
      in_string = true;
    } else if (c == '{' || c == '[') {
      ++depth;
    } else if (c == '}' || c == ']') {
      if (array_depth != 0 && depth == static_cast<int>(array_depth)) return 1;
      --depth;
    } else if (c == ',' && array_depth != 0 && depth == static_cast<int>(array_depth)) {
      expect_element = true;
    }
  }
  return 1;
}

std::string id_key(const json& id) {
  if (id.is_number_integer()) return std::to_string(id.get<long long>());
  if (id.is_string()) return id.get<std::string>();
  throw std::invalid_argument("vertex id must be an integer or string");
}

}  // namespace

Graph read_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte), e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw ParseError(1, "expected an object with \"vertices\" and \"edges\"");
  }
  try {
    std::map<std::string, VertexId> index;
    std::vector<std::string> labels;
    const json& vertices = doc.at("vertices");
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      try {
        const std::string key = id_key(vertices[k]);
        if (!index.emplace(key, labels.size()).second) {
          throw std::invalid_argument("duplicate vertex id " + key);
        }
        labels.push_back(key);
      } catch (const std::invalid_argument& e) {
        throw ParseError(element_line(text, "vertices", k), e.what());
      }
    }
    auto lookup = [&](const json& id) {
      const auto it = index.find(id_key(id));
      if (it == index.end()) throw std::invalid_argument("edge references unknown vertex " + id_key(id));
      return it->second;
    };
    std::vector<Edge> edges;
    std::set<Edge> seen;
    const json& edge_list = doc.at("edges");
    for (std::size_t k = 0; k < edge_list.size(); ++k) {
      const json& e = edge_list[k];
      try {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        const VertexId a = lookup(e[0]);
        const VertexId b = lookup(e[1]);
        if (a == b) throw std::invalid_argument("self-loop at " + id_key(e[0]));
        if (!seen.emplace(a, b).second) throw std::invalid_argument("repeated edge " + e.dump());
        edges.emplace_back(a, b);
      } catch (const std::invalid_argument& err) {
        throw ParseError(element_line(text, "edges", k), err.what());
      }
    }
    if (doc.contains("labels")) {
      for (const auto& [key, value] : doc.at("labels").items()) {
        const auto it = index.find(key);
        if (it == index.end()) throw std::invalid_argument("label for unknown vertex " + key);
        labels[it->second] = value.get<std::string>();
      }
    }
    std::optional<Truncation> truncation;
    if (doc.contains("truncation")) {
      const json& t = doc.at("truncation");
      truncation = Truncation{lookup(t.at("center")), t.at("radius").get<std::size_t>()};
    }
    const std::size_t n = labels.size();
    return Graph(n, edges, std::move(labels), truncation);
  } catch (const json::exception& e) {
    throw ParseError(1, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
}

std::string write_graph_json(const Graph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (VertexId v = 0; v < g.size(); ++v) doc["vertices"].push_back(v);
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
  if (g.has_labels()) {
    json labels = json::object();
    for (VertexId v = 0; v < g.size(); ++v) labels[std::to_string(v)] = g.label(v);
    doc["labels"] = std::move(labels);
  }
  if (g.truncation()) {
    doc["truncation"] = {{"center", g.truncation()->center}, {"radius", g.truncation()->radius}};
  }
  return doc.dump(1) + "\n";
}

Graph read_edge_list(std::string_view text) {
  std::map<std::string, VertexId> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  auto intern = [&](const std::string& token) {
    auto [it, inserted] = index.emplace(token, labels.size());
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b)) throw ParseError(line_no, "expected two vertex tokens");
    if (fields >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
    if (a == b) throw ParseError(line_no, "self-loop at '" + a + "'");
    const VertexId u = intern(a);
    const VertexId v = intern(b);
    if (!seen.emplace(u, v).second) throw ParseError(line_no, "repeated edge " + a + " " + b);
    edges.emplace_back(u, v);
  }
  const std::size_t n = labels.size();
  return Graph(n, edges, std::move(labels));
}

Graph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (path.extension() == ".json") return read_graph_json(buffer.str());
  return read_edge_list(buffer.str());
}

}  // namespace graphcurv
