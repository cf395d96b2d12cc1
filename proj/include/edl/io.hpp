#pragma once

#include <edl/digraph.hpp>

#include <json.hpp>

namespace edl {
using Json = nlohmann::ordered_json;
}

#include <string>
#include <string_view>

namespace edl {

enum class GraphFormat { adm, json, dot };

GraphFormat parse_graph_format(std::string_view name);
std::string_view format_name(GraphFormat f);

/// ".adm" text: first line n, then n lines of n '0'/'1' characters, each
/// newline-terminated, nothing else.
DenseDigraph parse_adm(std::string_view text);
std::string to_adm(const DenseDigraph & d);

/// {"n": int, "arcs": [[i, j], ...]} with arcs sorted lexicographically.
/// Duplicate arcs on input are accepted and collapse.
Json to_json(const DenseDigraph & d);
DenseDigraph digraph_from_json(const Json & j);
DenseDigraph parse_json_digraph(std::string_view text);

std::string to_dot(const DenseDigraph & d);

std::string serialize(const DenseDigraph & d, GraphFormat f);
DenseDigraph parse(std::string_view text, GraphFormat f);

std::string read_file(const std::string & path);
void write_file(const std::string & path, std::string_view contents);

} // namespace edl
