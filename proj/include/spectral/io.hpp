#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "spectral/graph.hpp"
#include "spectral/sociometry.hpp"

namespace spectral::io {

/// Parses a TAB-separated edge list: `src dst [weight]` per line, `#`
/// comments, a single field declares an isolated node. Errors carry the
/// 1-based line number.
std::vector<EdgeRecord> parse_edge_list(std::istream& in);

SparseGraph read_graph(std::istream& in);
SparseGraph read_graph(const std::filesystem::path& path);

/// Writes `g` in the edge-list format; isolated nodes become declaration
/// lines so that reading the output back reproduces labels and edges.
void write_graph(std::ostream& out, const SparseGraph& g);

/// `label value` pairs, TAB-separated, `#` comments.
std::vector<std::pair<std::string, double>> parse_label_values(std::istream& in);
std::vector<std::pair<std::string, double>> read_label_values(const std::filesystem::path& path);

/// Aligns label/value pairs with the nodes of `g`. Labels unknown to `g`
/// are an InputError; repeated labels accumulate. When `require_all` is
/// set every node must be covered, otherwise missing nodes get zero.
ScoreVector align_to_graph(const SparseGraph& g, const std::vector<std::pair<std::string, double>>& entries,
                           bool require_all);

/// `team_i team_j outcome` per line, outcome in {0, 0.5, 1} credited to team_j.
MatchList parse_matches(std::istream& in);
MatchList read_matches(const std::filesystem::path& path);

}  // namespace spectral::io
