#ifndef MKC_GRAPH_HPP
#define MKC_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mkc {

using Vertex = std::size_t;

/// An undirected weighted edge. `u == v` denotes a loop.
/// Graphs store every edge with `u <= v`.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    double w = 1.0;

    bool is_loop() const noexcept { return u == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
    Vertex vertex;
    double weight;
};

/// Undirected graph on vertices 0..n-1 with real edge weights and optional
/// loops. Immutable once built; every mutating operation returns a new graph.
///
/// Degree convention: a loop at v contributes its weight once to d(v), and
/// it appears once on the diagonal of the adjacency matrix.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(std::size_t n);

    /// Throws IndexError for an endpoint >= n and ContractError when the
    /// same unordered pair (or loop) is listed twice.
    WeightedGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t order() const noexcept { return n_; }

    /// Number of non-loop edges.
    std::size_t size() const noexcept { return size_; }

    /// All edges (loops included) sorted by (u, v), u <= v.
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Non-loop neighbours of v sorted by vertex.
    std::span<const Neighbor> neighbors(Vertex v) const;

    double loop(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;
    std::optional<double> weight(Vertex u, Vertex v) const;

    /// All weights are 1 and there are no loops.
    bool is_simple() const noexcept;
    bool has_loops() const noexcept;
    bool has_negative_weight() const noexcept;
    bool has_integer_weights() const noexcept;
    double max_abs_weight() const noexcept;

    /// Sum of all adjacency entries, i.e. twice the non-loop weight plus the
    /// loop weights.
    double adjacency_mass() const noexcept;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::size_t size_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<double> loops_;
};

/// Ordered list of k disjoint vertex blocks covering 0..n-1.
/// Empty blocks are representable; operations that need non-empty blocks
/// check `has_empty_block()` themselves.
class VertexPartition {
public:
    VertexPartition() = default;

    /// Throws ContractError unless the blocks are disjoint, cover 0..n-1 and
    /// k >= 1; IndexError for a vertex >= n. Blocks are kept as given
    /// (vertex order inside a block is sorted).
    VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks);

    /// Builds a partition with `k` blocks from per-vertex block labels.
    static VertexPartition from_labels(std::span<const std::size_t> labels, std::size_t k);

    std::size_t order() const noexcept { return labels_.size(); }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    std::span<const Vertex> block(std::size_t i) const { return blocks_.at(i); }
    const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
    std::size_t block_of(Vertex v) const { return labels_.at(v); }
    std::span<const std::size_t> labels() const noexcept { return labels_; }
    bool has_empty_block() const noexcept;

    friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

private:
    std::vector<std::vector<Vertex>> blocks_;
    std::vector<std::size_t> labels_;
};

// Degree queries.

/// d(v): weight of non-loop edges at v plus the loop weight at v.
double degree(const WeightedGraph& g, Vertex v);

/// d(v, S): weighted degree of v inside G[S] (loop included when v is in S).
double degree_in(const WeightedGraph& g, Vertex v, std::span<const Vertex> s);

/// d(v, S, T): weight of edges from v (which must lie in S) into T.
/// S and T must be disjoint.
double degree_between(const WeightedGraph& g, Vertex v, std::span<const Vertex> s,
                      std::span<const Vertex> t);

/// Row v of the block-degree table: entry b is the weight from v into
/// block b (the loop at v counts towards v's own block).
std::vector<double> block_degrees(const WeightedGraph& g, const VertexPartition& p, Vertex v);

// Graph algebra.

/// Simple graph with exactly the non-edges of g. Throws UnsupportedInput
/// for weighted or loopy input.
WeightedGraph complement(const WeightedGraph& g);

/// Vertices of b are relabelled to a.order() + v.
WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b);

/// Disjoint union plus a unit-weight edge between every vertex of a and
/// every vertex of b.
WeightedGraph join(const WeightedGraph& a, const WeightedGraph& b);

/// Throws ContractError when a listed edge is absent.
WeightedGraph delete_edges(const WeightedGraph& g, std::span<const std::pair<Vertex, Vertex>> edges);

/// Throws ContractError when a listed edge is already present.
WeightedGraph add_edges(const WeightedGraph& g, std::span<const Edge> edges);

// Generators. All emit simple graphs with a fixed labelling.

WeightedGraph empty_graph(std::size_t n);
WeightedGraph complete_graph(std::size_t n);
/// Edges (i, i+1 mod n); n >= 3.
WeightedGraph cycle_graph(std::size_t n);
/// Edges (i, i+1); n >= 1.
WeightedGraph path_graph(std::size_t n);
/// Blocks occupy consecutive index ranges in the listed order.
WeightedGraph complete_multipartite(std::span<const std::size_t> sizes);
/// Edges (2i, 2i+1); n even.
WeightedGraph perfect_matching(std::size_t n);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5.
WeightedGraph petersen_graph();

/// Canonical partition of complete_multipartite(sizes).
VertexPartition consecutive_partition(std::span<const std::size_t> sizes);

}  // namespace mkc

#endif  // MKC_GRAPH_HPP
