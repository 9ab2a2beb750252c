#include "mkc/families.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "mkc/charax.hpp"
#include "mkc/errors.hpp"

namespace mkc {

namespace {

void check_bo1(std::size_t k, std::size_t r) {
    if (k < 3) throw ParameterError("bo1 family needs k >= 3, got " + std::to_string(k));
    if (r < k + 4) throw ParameterError("bo1 family needs r >= k + 4, got r=" + std::to_string(r));
}

void check_bo3(std::size_t n1) {
    if (n1 < 4 || n1 % 2 != 0) throw ParameterError("bo3 family needs even n1 >= 4, got " + std::to_string(n1));
}

std::vector<std::size_t> bo3_sizes(std::size_t n1) { return {n1, n1 + 2, n1 + 2}; }

// Alternating cycle v_{2,1} v_{3,1} v_{2,2} v_{3,2} ... closing at v_{2,1}.
std::vector<std::pair<Vertex, Vertex>> bo3_cycle(std::size_t n1, Vertex s2, Vertex s3) {
    std::vector<Vertex> walk;
    for (std::size_t a = 0; a < n1 + 2; ++a) {
        walk.push_back(s2 + a);
        walk.push_back(s3 + a);
    }
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t t = 0; t < walk.size(); ++t) out.emplace_back(walk[t], walk[(t + 1) % walk.size()]);
    return out;
}

std::vector<Edge> consecutive_matching(Vertex first, std::size_t count) {
    std::vector<Edge> out;
    for (std::size_t a = 0; a + 1 < count; a += 2) out.push_back({first + a, first + a + 1, 1.0});
    return out;
}

}  // namespace

WeightedGraph gen_bo1_base(std::size_t k, std::size_t r) {
    check_bo1(k, r);
    // k(K_r - E(C_r)) is the disjoint union of cycle complements; its
    // complement keeps the cycles and joins all blocks.
    const auto cycle_complement = complement(cycle_graph(r));
    WeightedGraph parts = cycle_complement;
    for (std::size_t i = 1; i < k; ++i) parts = disjoint_union(parts, cycle_complement);
    return complement(parts);
}

WeightedGraph gen_bo1_removed(std::size_t k, std::size_t r) {
    check_bo1(k, r);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) edges.push_back({i * r, j * r + r - 1, 1.0});
    }
    return WeightedGraph(k * r, std::move(edges));
}

FamilyInstance gen_bo1_family(std::size_t k, std::size_t r) {
    const auto base = gen_bo1_base(k, r);
    const auto removed = gen_bo1_removed(k, r);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : removed.edges()) pairs.emplace_back(e.u, e.v);

    const std::vector<std::size_t> sizes(k, r);
    FamilyInstance inst;
    inst.graph = delete_edges(base, pairs);
    inst.partition = consecutive_partition(sizes);
    inst.expected_extreme_eigenvalue = 2.0 - static_cast<double>(r);
    inst.bound_kind = BoundKind::Adjacency;
    inst.family = "bo1";
    inst.parameters = {{"k", static_cast<long long>(k)}, {"r", static_cast<long long>(r)}};
    return inst;
}

WeightedGraph gen_bo3_host(std::size_t n1) {
    check_bo3(n1);
    const auto sizes = bo3_sizes(n1);
    auto host = complete_multipartite(sizes);
    std::vector<Edge> matchings = consecutive_matching(0, n1);
    for (const auto& e : consecutive_matching(n1, n1 + 2)) matchings.push_back(e);
    for (const auto& e : consecutive_matching(2 * n1 + 2, n1 + 2)) matchings.push_back(e);
    return add_edges(host, matchings);
}

FamilyInstance gen_bo3_family(std::size_t n1) {
    const auto host = gen_bo3_host(n1);
    std::vector<std::pair<Vertex, Vertex>> f;
    for (const auto& e : consecutive_matching(0, n1)) f.emplace_back(e.u, e.v);
    for (const auto& e : bo3_cycle(n1, n1, 2 * n1 + 2)) f.push_back(e);

    FamilyInstance inst;
    inst.graph = delete_edges(host, f);
    inst.partition = consecutive_partition(bo3_sizes(n1));
    inst.expected_extreme_eigenvalue = static_cast<double>(n1 + 2);
    inst.bound_kind = BoundKind::Signless;
    inst.family = "bo3";
    inst.parameters = {{"n1", static_cast<long long>(n1)}};
    return inst;
}

WeightedGraph gen_bo3_auxiliary(std::size_t n1) {
    check_bo3(n1);
    const std::size_t half = n1 + 2;
    const std::vector<std::size_t> sizes{half, half};
    auto g = complete_multipartite(sizes);
    auto matchings = consecutive_matching(0, half);
    for (const auto& e : consecutive_matching(half, half)) matchings.push_back(e);
    g = add_edges(g, matchings);
    g = delete_edges(g, bo3_cycle(n1, 0, half));
    return complement(g);
}

FamilyInstance gen_bo2_family(std::size_t k, std::size_t r, std::span<const std::pair<Vertex, Vertex>> intra_edges) {
    if (k < 3) throw ParameterError("bo2 family needs k >= 3, got " + std::to_string(k));
    if (r < 2) throw ParameterError("bo2 family needs r >= 2, got " + std::to_string(r));
    const std::vector<std::size_t> sizes(k, r);
    FamilyInstance inst;
    inst.partition = consecutive_partition(sizes);
    inst.graph = complete_multipartite(sizes);

    std::vector<Edge> additions;
    for (auto [u, v] : intra_edges) {
        if (u >= k * r || v >= k * r || u == v) throw ParameterError("intra-block edge endpoints are invalid");
        if (inst.partition.block_of(u) != inst.partition.block_of(v)) {
            throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} crosses blocks");
        }
        for (const auto& e : additions) {
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) throw ParameterError("duplicate intra-block edge");
        }
        additions.push_back({u, v, 1.0});
    }
    inst.graph = add_edges(inst.graph, additions);
    inst.expected_extreme_eigenvalue = static_cast<double>(k * r);
    inst.bound_kind = BoundKind::Laplacian;
    inst.family = "bo2";
    inst.parameters = {{"k", static_cast<long long>(k)},
                       {"r", static_cast<long long>(r)},
                       {"intra_edges", static_cast<long long>(intra_edges.size())}};
    return inst;
}

FamilyInstance remove_intra_block_edges(const FamilyInstance& instance,
                                        std::span<const std::pair<Vertex, Vertex>> edges) {
    const auto n = instance.graph.order();
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw ParameterError("edge endpoint out of range");
        if (instance.partition.block_of(u) != instance.partition.block_of(v)) {
            throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} crosses blocks");
        }
        if (!instance.graph.has_edge(u, v)) {
            throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is absent");
        }
    }
    FamilyInstance out = instance;
    out.graph = delete_edges(instance.graph, edges);
    out.parameters["removed_edges"] += static_cast<long long>(edges.size());
    return out;
}

TightnessCertificate certify(const FamilyInstance& instance) {
    return certify_tightness(instance.graph, instance.partition, instance.bound_kind);
}

SubtractionResult subtract_zero_eigen_subgraph(const WeightedGraph& g, const VertexPartition& partition,
                                               const WeightedGraph& h) {
    SubtractionResult out;
    if (h.order() != g.order() || partition.order() != g.order()) {
        out.failure = "H and the partition must live on the vertex set of G";
        return out;
    }
    if (partition.block_count() < 2 || partition.has_empty_block()) {
        out.failure = "partition needs k >= 2 non-empty blocks";
        return out;
    }
    std::vector<std::pair<Vertex, Vertex>> remove;
    for (const auto& e : h.edges()) {
        const auto w = g.weight(e.u, e.v);
        if (!w || *w != e.w) {
            out.failure = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} of H is not an edge of G";
            return out;
        }
        remove.emplace_back(e.u, e.v);
    }
    const auto on_g = check_svector(g, partition, MatrixKind::Adjacency);
    if (!on_g.is_eigenvector) {
        out.failure = "s-vectors of G are not adjacency eigenvectors";
        return out;
    }
    const auto on_h = check_svector(h, partition, MatrixKind::Adjacency);
    if (!on_h.is_eigenvector || std::abs(*on_h.eigenvalue) > condition_tolerance(h)) {
        out.failure = "H does not satisfy the s-vector conditions with eigenvalue 0";
        return out;
    }
    auto reduced = delete_edges(g, remove);
    const auto on_reduced = check_svector(reduced, partition, MatrixKind::Adjacency);
    if (!on_reduced.is_eigenvector ||
        std::abs(*on_reduced.eigenvalue - *on_g.eigenvalue) > condition_tolerance(g)) {
        out.failure = "G - E(H) lost the eigenvalue";
        return out;
    }
    out.ok = true;
    out.lambda = on_reduced.eigenvalue;
    out.graph = std::move(reduced);
    return out;
}

}  // namespace mkc
