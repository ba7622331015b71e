#pragma once

#include <string>

#include "json.hpp"
#include "sccg/class_graph.hpp"
#include "sccg/metrics.hpp"

namespace sccg {

using Json = nlohmann::ordered_json;

// Vertices then edges, both in increasing id order. Labels follow
// Vertex::label(). Output is byte-stable.
std::string export_dot(const ClassGraph& g);
std::string export_graphml(const ClassGraph& g);
Json graph_json(const ClassGraph& g);

// Lengths serialize as integers, infinity as "inf", a missing value as null.
Json length_json(const std::optional<Length>& len);
Json metrics_json(const ClassGraph& g, const MetricsReport& r);
std::string metrics_text(const ClassGraph& g, const MetricsReport& r);

// Pretty-printed JSON with a trailing newline.
std::string dump(const Json& j);

// Throws IoError when the file cannot be written; "-" writes to stdout.
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace sccg
