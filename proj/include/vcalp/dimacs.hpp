#pragma once

#include <filesystem>
#include <iosfwd>

#include "vcalp/graph.hpp"

namespace vcalp::dimacs {

// Reads the DIMACS edge format:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        (1-based, u != v)
// External vertex i becomes VertexId{i - 1}. Duplicate edges collapse; the
// edge count in the header is not enforced. Throws ParseError.
Graph read(std::istream& in);
Graph load(const std::filesystem::path& path);

// Writes vertices renumbered 1..n in ascending id order, edges sorted.
void write(std::ostream& out, const Graph& g);
void save(const std::filesystem::path& path, const Graph& g);

// 1-based external label of v when g is written with write().
std::size_t external_label(const Graph& g, VertexId v);

}  // namespace vcalp::dimacs
