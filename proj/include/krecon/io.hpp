#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "krecon/graph.hpp"
#include "krecon/kset.hpp"

namespace krecon {

// Graph file:
//   graph v1
//   n <int>
//   label <id> <text>      (optional, any number)
//   e <u> <v>
//
// Instance file:
//   kset v1
//   n <int>
//   k <int>
//   mode complete|partial
//   C <v1> ... <vk>        (connected)
//   D <v1> ... <vk>        (disconnected, partial mode only)
//
// '#' starts a comment anywhere on a line. Serializers emit sorted ids and lexicographically
// sorted set lines, so serialize(parse(s)) is the canonical form of s.

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

KSetInstance parse_instance(std::string_view text);
std::string serialize_instance(const KSetInstance& inst);

/// Graph blocks separated by `---` lines.
std::vector<Graph> parse_graph_stream(std::string_view text);
std::string serialize_graph_stream(const std::vector<Graph>& graphs);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace krecon
