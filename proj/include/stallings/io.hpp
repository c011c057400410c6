#pragma once

#include <string>
#include <vector>

#include "stallings/graph.hpp"
#include "stallings/subgroup.hpp"
#include "stallings/word.hpp"

namespace stallings {

// Graph text format, one graph per file:
//   optional leading '#' comment lines
//   rank n basepoint
//   a v w        (one line per edge, sorted by (a, v))
//
// Subgroup text format:
//   optional leading '#' comment lines
//   rank
//   one generator word per line, letters as signed integers ("1 -2 1")
//
// Both serializers emit exactly what the parsers accept, byte for byte.

struct GraphFile {
  std::vector<std::string> comments;  // without the leading "# "
  StallingsGraph graph;
};

struct SubgroupFile {
  std::vector<std::string> comments;
  int rank = 1;
  std::vector<Word> generators;
};

std::string write_graph(const StallingsGraph& g,
                        const std::vector<std::string>& comments = {});
GraphFile parse_graph(const std::string& text);

std::string write_subgroup(int rank, const std::vector<Word>& generators,
                           const std::vector<std::string>& comments = {});
SubgroupFile parse_subgroup(const std::string& text);

enum class FileKind { graph, subgroup };

// Graph headers have three fields, subgroup headers one.
FileKind detect_kind(const std::string& text);

// Reads either format and produces the subgroup it denotes: subgroup files
// are folded; graph files are restricted to the basepoint component and
// trimmed to core (neither changes the fundamental group).
Subgroup load_subgroup(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace stallings
