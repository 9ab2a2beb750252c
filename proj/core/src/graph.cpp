#include "mkc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mkc/errors.hpp"

namespace mkc {

namespace {

std::string pair_str(Vertex u, Vertex v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

bool contains(std::span<const Vertex> s, Vertex v) {
    return std::find(s.begin(), s.end(), v) != s.end();
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n) : n_(n), adjacency_(n), loops_(n, 0.0) {}

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges) : WeightedGraph(n) {
    for (auto& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw IndexError("edge " + pair_str(e.u, e.v) + " has an endpoint >= n=" + std::to_string(n));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
            throw ContractError("edge " + pair_str(edges[i].u, edges[i].v) + " listed twice");
        }
    }
    for (const auto& e : edges) {
        if (e.is_loop()) {
            loops_[e.u] = e.w;
        } else {
            adjacency_[e.u].push_back({e.v, e.w});
            adjacency_[e.v].push_back({e.u, e.w});
            ++size_;
        }
    }
    for (auto& row : adjacency_) {
        std::sort(row.begin(), row.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
    edges_ = std::move(edges);
}

void WeightedGraph::check_vertex(Vertex v) const {
    if (v >= n_) {
        throw IndexError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }
}

std::span<const Neighbor> WeightedGraph::neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
}

double WeightedGraph::loop(Vertex v) const {
    check_vertex(v);
    return loops_[v];
}

std::optional<double> WeightedGraph::weight(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v}, [](const Edge& e, const auto& key) {
        return e.u != key.first ? e.u < key.first : e.v < key.second;
    });
    if (it != edges_.end() && it->u == u && it->v == v) return it->w;
    return std::nullopt;
}

bool WeightedGraph::has_edge(Vertex u, Vertex v) const { return weight(u, v).has_value(); }

bool WeightedGraph::is_simple() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return !e.is_loop() && e.w == 1.0; });
}

bool WeightedGraph::has_loops() const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool WeightedGraph::has_negative_weight() const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w < 0.0; });
}

bool WeightedGraph::has_integer_weights() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return std::trunc(e.w) == e.w; });
}

double WeightedGraph::max_abs_weight() const noexcept {
    double m = 0.0;
    for (const auto& e : edges_) m = std::max(m, std::abs(e.w));
    return m;
}

double WeightedGraph::adjacency_mass() const noexcept {
    double s = 0.0;
    for (const auto& e : edges_) s += e.is_loop() ? e.w : 2.0 * e.w;
    return s;
}

// ---------------------------------------------------------------------------

VertexPartition::VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks)
    : blocks_(std::move(blocks)), labels_(n, 0) {
    if (blocks_.empty()) throw ContractError("a partition needs at least one block");
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        auto& block = blocks_[b];
        std::sort(block.begin(), block.end());
        for (Vertex v : block) {
            if (v >= n) {
                throw IndexError("partition vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
            }
            if (seen[v]) throw ContractError("vertex " + std::to_string(v) + " appears in more than one block");
            seen[v] = true;
            labels_[v] = b;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!seen[v]) throw ContractError("vertex " + std::to_string(v) + " is not covered by the partition");
    }
}

VertexPartition VertexPartition::from_labels(std::span<const std::size_t> labels, std::size_t k) {
    std::vector<std::vector<Vertex>> blocks(k);
    for (Vertex v = 0; v < labels.size(); ++v) {
        if (labels[v] >= k) throw IndexError("block label " + std::to_string(labels[v]) + " >= k");
        blocks[labels[v]].push_back(v);
    }
    return VertexPartition(labels.size(), std::move(blocks));
}

bool VertexPartition::has_empty_block() const noexcept {
    return std::any_of(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.empty(); });
}

// ---------------------------------------------------------------------------

double degree(const WeightedGraph& g, Vertex v) {
    double d = g.loop(v);
    for (const auto& nb : g.neighbors(v)) d += nb.weight;
    return d;
}

double degree_in(const WeightedGraph& g, Vertex v, std::span<const Vertex> s) {
    double d = contains(s, v) ? g.loop(v) : 0.0;
    for (const auto& nb : g.neighbors(v)) {
        if (contains(s, nb.vertex)) d += nb.weight;
    }
    return d;
}

double degree_between(const WeightedGraph& g, Vertex v, std::span<const Vertex> s, std::span<const Vertex> t) {
    if (!contains(s, v)) throw ContractError("degree_between: vertex " + std::to_string(v) + " is not in S");
    for (Vertex x : t) {
        if (contains(s, x)) throw ContractError("degree_between: S and T intersect at " + std::to_string(x));
    }
    double d = 0.0;
    for (const auto& nb : g.neighbors(v)) {
        if (contains(t, nb.vertex)) d += nb.weight;
    }
    return d;
}

std::vector<double> block_degrees(const WeightedGraph& g, const VertexPartition& p, Vertex v) {
    if (p.order() != g.order()) throw ContractError("partition order differs from graph order");
    std::vector<double> row(p.block_count(), 0.0);
    row[p.block_of(v)] += g.loop(v);
    for (const auto& nb : g.neighbors(v)) row[p.block_of(nb.vertex)] += nb.weight;
    return row;
}

// ---------------------------------------------------------------------------

WeightedGraph complement(const WeightedGraph& g) {
    if (!g.is_simple()) throw UnsupportedInput("complement requires a simple graph");
    const std::size_t n = g.order();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        auto nbs = g.neighbors(u);
        auto it = nbs.begin();
        for (Vertex v = u + 1; v < n; ++v) {
            while (it != nbs.end() && it->vertex < v) ++it;
            if (it == nbs.end() || it->vertex != v) edges.push_back({u, v, 1.0});
        }
    }
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
    std::vector<Edge> edges(a.edges().begin(), a.edges().end());
    const std::size_t off = a.order();
    for (const auto& e : b.edges()) edges.push_back({e.u + off, e.v + off, e.w});
    return WeightedGraph(a.order() + b.order(), std::move(edges));
}

WeightedGraph join(const WeightedGraph& a, const WeightedGraph& b) {
    std::vector<Edge> edges(a.edges().begin(), a.edges().end());
    const std::size_t off = a.order();
    for (const auto& e : b.edges()) edges.push_back({e.u + off, e.v + off, e.w});
    for (Vertex u = 0; u < a.order(); ++u) {
        for (Vertex v = 0; v < b.order(); ++v) edges.push_back({u, v + off, 1.0});
    }
    return WeightedGraph(a.order() + b.order(), std::move(edges));
}

WeightedGraph delete_edges(const WeightedGraph& g, std::span<const std::pair<Vertex, Vertex>> edges) {
    std::vector<Edge> kept(g.edges().begin(), g.edges().end());
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        auto it = std::find_if(kept.begin(), kept.end(), [&](const Edge& e) { return e.u == u && e.v == v; });
        if (it == kept.end()) throw ContractError("cannot delete missing edge " + pair_str(u, v));
        kept.erase(it);
    }
    return WeightedGraph(g.order(), std::move(kept));
}

WeightedGraph add_edges(const WeightedGraph& g, std::span<const Edge> edges) {
    std::vector<Edge> all(g.edges().begin(), g.edges().end());
    for (const auto& e : edges) {
        if (e.u < g.order() && e.v < g.order() && g.has_edge(e.u, e.v)) {
            throw ContractError("cannot add existing edge " + pair_str(e.u, e.v));
        }
        all.push_back(e);
    }
    return WeightedGraph(g.order(), std::move(all));
}

// ---------------------------------------------------------------------------

WeightedGraph empty_graph(std::size_t n) { return WeightedGraph(n); }

WeightedGraph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    }
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph cycle_graph(std::size_t n) {
    if (n < 3) throw ParameterError("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph path_graph(std::size_t n) {
    if (n < 1) throw ParameterError("path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph complete_multipartite(std::span<const std::size_t> sizes) {
    if (sizes.empty()) throw ParameterError("complete_multipartite needs at least one part");
    const auto p = consecutive_partition(sizes);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < p.order(); ++u) {
        for (Vertex v = u + 1; v < p.order(); ++v) {
            if (p.block_of(u) != p.block_of(v)) edges.push_back({u, v, 1.0});
        }
    }
    return WeightedGraph(p.order(), std::move(edges));
}

WeightedGraph perfect_matching(std::size_t n) {
    if (n % 2 != 0) throw ParameterError("perfect matching needs even n, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; i += 2) edges.push_back({i, i + 1, 1.0});
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5, 1.0});
        edges.push_back({i, i + 5, 1.0});
        edges.push_back({5 + i, 5 + (i + 2) % 5, 1.0});
    }
    return WeightedGraph(10, std::move(edges));
}

VertexPartition consecutive_partition(std::span<const std::size_t> sizes) {
    std::vector<std::vector<Vertex>> blocks;
    Vertex next = 0;
    for (std::size_t s : sizes) {
        std::vector<Vertex> block(s);
        std::iota(block.begin(), block.end(), next);
        next += s;
        blocks.push_back(std::move(block));
    }
    return VertexPartition(next, std::move(blocks));
}

}  // namespace mkc
