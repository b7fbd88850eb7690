#pragma once

/**
 * DIMACS edge format with named vertex sets.
 *
 *   c <comment>
 *   c set <name> <id> ...     named vertex set (T, Z1, Z2, R, v)
 *   c meta <text>             free-form generator parameters
 *   p edge <n> <m>
 *   e <u> <v>                 m lines, 1-based ids
 */

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tconn/graph.hpp"

namespace tconn {

struct Instance {
  Graph graph;
  std::map<std::string, std::vector<int>> sets;  ///< external ids as written
  std::vector<std::string> meta;

  bool has_set(const std::string& name) const { return sets.contains(name); }
  /// Throws InputError when the set is missing.
  VertexSet set(const std::string& name) const;
  /// The single member of a one-element set.
  Vertex vertex(const std::string& name) const;
};

/// Throws ParseError on malformed lines, self-loops, duplicate edges, ids
/// out of range, or an edge count that disagrees with the `p` line.
Instance parse_instance(std::string_view text);

Instance read_instance(const std::filesystem::path& path);

std::string serialize_instance(const Instance& inst);

/// Parse a list of 1-based ids separated by spaces or commas.
std::vector<int> parse_id_list(std::string_view text);

}  // namespace tconn
