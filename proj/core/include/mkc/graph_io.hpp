#ifndef MKC_GRAPH_IO_HPP
#define MKC_GRAPH_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "mkc/graph.hpp"

namespace mkc {

/// Edge-list text:
///
///     # comment
///     n=5
///     0 1          # weight defaults to 1
///     1 2 2.5
///     3 3 1.0      # loop
///
/// Throws ParseError (with a 1-based line number) on malformed lines,
/// duplicate edges and out-of-range vertices.
WeightedGraph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list; weights are written in shortest round-trip
/// form and omitted when equal to 1.
std::string emit_edge_list(const WeightedGraph& g);

/// `{"n": 3, "edges": [[0, 1, 1.0], [1, 2, 2.5]]}`; a two-element edge has
/// weight 1.
WeightedGraph parse_graph_json(std::string_view text);
std::string emit_graph_json(const WeightedGraph& g);

/// Dispatches on the first non-blank character ('{' means JSON).
WeightedGraph parse_graph(std::string_view text);

/// Undirected DOT. With a partition, each block gets its own fill colour
/// and a `block` attribute.
std::string emit_dot(const WeightedGraph& g, const std::optional<VertexPartition>& partition = std::nullopt);

/// Partition spec: blocks separated by ';', vertices by ',', e.g. "0,1;2,3;4".
/// Throws ParseError for bad tokens; VertexPartition's own checks for
/// overlap or missing vertices (ContractError / IndexError).
VertexPartition parse_partition_spec(std::string_view spec, std::size_t n);
std::string format_partition_spec(const VertexPartition& p);

}  // namespace mkc

#endif  // MKC_GRAPH_IO_HPP
