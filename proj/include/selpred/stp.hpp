#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "selpred/graph.hpp"

namespace selpred {

// A Steiner tree instance: a weighted graph plus the set of terminal
// vertices that a solution has to connect.
struct SteinerInstance {
  Graph graph;
  std::vector<VertexId> terminals;  // sorted, distinct, nonempty
  std::string name;
};

// Parses the SteinLib/PACE .stp text format. Recognized, case-insensitively:
// an optional magic line starting with "33D32945", "SECTION Graph" with
// "Nodes n" / "Edges m" / m lines "E u v w" (1-based vertex ids), "SECTION
// Terminals" with "Terminals k" / k lines "T v", and "EOF". Unknown sections
// are skipped up to their END. Throws ParseError with a line number on
// malformed input, out-of-range ids, or count mismatches.
SteinerInstance parse_stp(std::istream& in);
SteinerInstance parse_stp_text(const std::string& text);
SteinerInstance parse_stp_file(const std::string& path);

std::string write_stp(const SteinerInstance& inst);

// Edge-set files (predictions and solutions): one "u v" line per edge with
// 1-based vertex ids. Parsing resolves each pair to the minimum-weight edge
// between the endpoints (ties by edge id) and throws ParseError if a pair
// matches no edge.
std::string write_edge_set(const Graph& g, std::span<const EdgeId> edges);
std::vector<EdgeId> parse_edge_set(const Graph& g, std::istream& in);
std::vector<EdgeId> parse_edge_set_text(const Graph& g, const std::string& text);
std::vector<EdgeId> parse_edge_set_file(const Graph& g, const std::string& path);

// Id-set files (vertex or item sets): one 1-based id per line.
std::string write_id_set(std::span<const int> ids);
std::vector<int> parse_id_set(std::istream& in, int max_count);
std::vector<int> parse_id_set_text(const std::string& text, int max_count);
std::vector<int> parse_id_set_file(const std::string& path, int max_count);

// Newline-delimited reals, one per vertex; used for vertex weight files.
std::vector<double> parse_real_list(std::istream& in);
std::vector<double> parse_real_list_file(const std::string& path);

// Shortest decimal representation that parses back to the same double;
// integral values print without a decimal point.
std::string format_number(double value);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace selpred
