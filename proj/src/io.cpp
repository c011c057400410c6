#include "stallings/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "stallings/errors.hpp"

namespace stallings {

namespace {

struct Line {
  int number;  // 1-based
  std::string text;
};

// Content lines with comments and blanks stripped out; comments are returned
// separately so serializing preserves them.
std::pair<std::vector<Line>, std::vector<std::string>> split_content(const std::string& text) {
  std::vector<Line> lines;
  std::vector<std::string> comments;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++number;
    if (line.empty()) continue;
    if (line[0] == '#') {
      comments.push_back(line.size() > 1 && line[1] == ' ' ? line.substr(2) : line.substr(1));
      continue;
    }
    lines.push_back({number, std::move(line)});
  }
  return {std::move(lines), std::move(comments)};
}

std::vector<long> parse_ints(const Line& line) {
  std::istringstream in(line.text);
  std::vector<long> out;
  std::string tok;
  while (in >> tok) {
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0') {
      throw FormatError(line.number, "expected an integer, got '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string write_graph(const StallingsGraph& g, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += std::to_string(g.rank()) + " " + std::to_string(g.vertex_count()) + " " +
         std::to_string(g.basepoint()) + "\n";
  for (int a = 1; a <= g.rank(); ++a) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (int w = g.map(a).apply(v); w >= 0) {
        out += std::to_string(a) + " " + std::to_string(v) + " " + std::to_string(w) + "\n";
      }
    }
  }
  return out;
}

GraphFile parse_graph(const std::string& text) {
  auto [lines, comments] = split_content(text);
  if (lines.empty()) throw FormatError(1, "empty graph file");

  auto header = parse_ints(lines[0]);
  if (header.size() != 3) {
    throw FormatError(lines[0].number, "graph header needs three fields: rank n basepoint");
  }
  long rank = header[0], n = header[1], basepoint = header[2];
  if (rank < 1) throw FormatError(lines[0].number, "rank must be >= 1");
  if (n < 1) throw FormatError(lines[0].number, "vertex count must be >= 1");
  if (basepoint < 0 || basepoint >= n) throw FormatError(lines[0].number, "basepoint out of range");

  std::vector<PartialInjection> maps(rank, PartialInjection(static_cast<int>(n)));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto edge = parse_ints(lines[i]);
    if (edge.size() != 3) throw FormatError(lines[i].number, "edge line needs three fields: a v w");
    long a = edge[0], v = edge[1], w = edge[2];
    if (a < 1 || a > rank) throw FormatError(lines[i].number, "edge label out of range");
    if (v < 0 || v >= n || w < 0 || w >= n) {
      throw FormatError(lines[i].number, "edge endpoint out of range");
    }
    if (maps[a - 1].maps(static_cast<int>(v)) || maps[a - 1].hits(static_cast<int>(w))) {
      throw FormatError(lines[i].number, "edge violates determinism (duplicate slot)");
    }
    maps[a - 1].link(static_cast<int>(v), static_cast<int>(w));
  }
  return GraphFile{std::move(comments),
                   StallingsGraph(static_cast<int>(rank), std::move(maps),
                                  static_cast<int>(basepoint))};
}

std::string write_subgroup(int rank, const std::vector<Word>& generators,
                           const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += std::to_string(rank) + "\n";
  for (const Word& g : generators) {
    if (!g.empty()) out += g.str() + "\n";
  }
  return out;
}

SubgroupFile parse_subgroup(const std::string& text) {
  auto [lines, comments] = split_content(text);
  if (lines.empty()) throw FormatError(1, "empty subgroup file");

  auto header = parse_ints(lines[0]);
  if (header.size() != 1) {
    throw FormatError(lines[0].number, "subgroup header needs one field: rank");
  }
  long rank = header[0];
  if (rank < 1) throw FormatError(lines[0].number, "rank must be >= 1");

  std::vector<Word> generators;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto ints = parse_ints(lines[i]);
    std::vector<Letter> letters;
    for (long v : ints) {
      if (v == 0) throw FormatError(lines[i].number, "0 is not a letter");
      if (v > rank || v < -rank) {
        throw FormatError(lines[i].number,
                          "letter outside alphabet of rank " + std::to_string(rank));
      }
      letters.push_back(static_cast<Letter>(v));
    }
    generators.push_back(Word(std::move(letters)));
  }
  return SubgroupFile{std::move(comments), static_cast<int>(rank), std::move(generators)};
}

FileKind detect_kind(const std::string& text) {
  auto [lines, comments] = split_content(text);
  if (lines.empty()) throw FormatError(1, "empty file");
  auto header = parse_ints(lines[0]);
  if (header.size() == 3) return FileKind::graph;
  if (header.size() == 1) return FileKind::subgroup;
  throw FormatError(lines[0].number, "header is neither a graph nor a subgroup header");
}

Subgroup load_subgroup(const std::string& text) {
  if (detect_kind(text) == FileKind::subgroup) {
    SubgroupFile f = parse_subgroup(text);
    return Subgroup::generated_by(f.rank, f.generators);
  }
  GraphFile f = parse_graph(text);
  return Subgroup(f.graph.component_of(f.graph.basepoint()).trimmed_to_core());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw Error("failed writing " + path);
}

}  // namespace stallings
