#include "sccg/export.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "sccg/errors.hpp"

namespace sccg {

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string graph_name(const ClassGraph& g) { return g.title() + " " + g.group; }

Json class_names(const ClassGraph& g, const std::vector<std::size_t>& ids) {
  std::set<std::string> names;
  for (std::size_t v : ids) names.insert(g.vertices[v].class_name);
  Json out = Json::array();
  for (const auto& n : names) out.push_back(n);
  return out;
}

std::string join_names(const ClassGraph& g, const std::vector<std::size_t>& ids) {
  std::string out;
  for (const auto& n : class_names(g, ids)) {
    if (!out.empty()) out += ' ';
    out += n.get<std::string>();
  }
  return out.empty() ? "-" : out;
}

}  // namespace

std::string export_dot(const ClassGraph& g) {
  std::ostringstream out;
  out << "graph \"" << dot_escape(graph_name(g)) << "\" {\n";
  for (std::size_t v = 0; v < g.size(); ++v) out << "  v" << v << " [label=\"" << g.vertices[v].label() << "\"];\n";
  for (const auto& [u, v] : g.adjacency.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_graphml(const ClassGraph& g) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"element\" for=\"node\" attr.name=\"element\" attr.type=\"int\"/>\n"
      << "  <key id=\"class\" for=\"node\" attr.name=\"class\" attr.type=\"int\"/>\n"
      << "  <key id=\"class_name\" for=\"node\" attr.name=\"class_name\" attr.type=\"string\"/>\n"
      << "  <key id=\"order\" for=\"node\" attr.name=\"order\" attr.type=\"int\"/>\n"
      << "  <key id=\"class_size\" for=\"node\" attr.name=\"class_size\" attr.type=\"int\"/>\n"
      << "  <graph id=\"" << xml_escape(graph_name(g)) << "\" edgedefault=\"undirected\">\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    const Vertex& x = g.vertices[v];
    out << "    <node id=\"v" << v << "\">"
        << "<data key=\"label\">" << x.label() << "</data>"
        << "<data key=\"element\">" << x.element << "</data>"
        << "<data key=\"class\">" << x.class_id << "</data>"
        << "<data key=\"class_name\">" << xml_escape(x.class_name) << "</data>"
        << "<data key=\"order\">" << x.element_order << "</data>"
        << "<data key=\"class_size\">" << x.class_size << "</data>"
        << "</node>\n";
  }
  for (const auto& [u, v] : g.adjacency.edges()) out << "    <edge source=\"v" << u << "\" target=\"v" << v << "\"/>\n";
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

Json graph_json(const ClassGraph& g) {
  Json j;
  j["group"] = g.group;
  j["graph"] = g.title();
  j["relation"] = std::string(relation_name(g.relation));
  j["mode"] = std::string(mode_name(g.mode));
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    const Vertex& x = g.vertices[v];
    Json o;
    o["id"] = v;
    o["label"] = x.label();
    o["element"] = x.element;
    o["class"] = x.class_id;
    o["class_name"] = x.class_name;
    o["order"] = x.element_order;
    o["class_size"] = x.class_size;
    vertices.push_back(std::move(o));
  }
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& [u, v] : g.adjacency.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

Json length_json(const std::optional<Length>& len) {
  if (!len) return nullptr;
  if (!len->is_finite()) return "inf";
  return len->value();
}

Json metrics_json(const ClassGraph& g, const MetricsReport& r) {
  Json j;
  j["group"] = g.group;
  j["graph"] = g.title();
  j["relation"] = std::string(relation_name(g.relation));
  j["mode"] = std::string(mode_name(g.mode));
  j["vertex_count"] = r.vertex_count;
  j["edge_count"] = r.edge_count;
  j["connected"] = r.connected;
  j["component_count"] = r.component_count;
  j["diameter"] = length_json(r.diameter);
  j["girth"] = length_json(r.girth);
  j["clique_number"] = r.clique_number;
  j["domination_number"] = r.domination_number;
  j["dominant_vertices"] = r.dominant_vertices;
  j["dominant_classes"] = class_names(g, r.dominant_vertices);
  j["isolated_vertices"] = r.isolated_vertices;
  j["isolated_classes"] = class_names(g, r.isolated_vertices);
  j["is_complete"] = r.is_complete;
  return j;
}

std::string metrics_text(const ClassGraph& g, const MetricsReport& r) {
  std::ostringstream out;
  out << "graph              " << graph_name(g) << "\n"
      << "vertices           " << r.vertex_count << "\n"
      << "edges              " << r.edge_count << "\n"
      << "complete           " << (r.is_complete ? "yes" : "no") << "\n"
      << "connected          " << (r.connected ? "yes" : "no") << " (" << r.component_count << " components)\n"
      << "diameter           " << (r.diameter ? r.diameter->str() : "-") << "\n"
      << "girth              " << r.girth.str() << "\n"
      << "clique number      " << r.clique_number << "\n"
      << "domination number  " << r.domination_number << "\n"
      << "dominant classes   " << join_names(g, r.dominant_vertices) << "\n"
      << "isolated classes   " << join_names(g, r.isolated_vertices) << "\n";
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f.flush()) throw IoError("write to " + path + " failed");
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace sccg
