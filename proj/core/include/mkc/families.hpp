#ifndef MKC_FAMILIES_HPP
#define MKC_FAMILIES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "mkc/graph.hpp"
#include "mkc/kcut.hpp"

namespace mkc {

/// A generated extremal graph with the partition that attains its bound.
struct FamilyInstance {
    WeightedGraph graph;
    VertexPartition partition;
    double expected_extreme_eigenvalue = 0.0;
    BoundKind bound_kind = BoundKind::Adjacency;
    std::string family;
    std::map<std::string, long long> parameters;
};

/// bo1 family: complement of k copies of (K_r minus a Hamiltonian cycle),
/// minus the K_{k,k} between {v_{1,i}} and {v_{r,i}}. Needs k >= 3, r >= k+4.
///
/// Labelling: block S_i (0-based i) holds vertices i*r .. i*r + r-1 in cycle
/// order, so v_{a,i} is vertex i*r + (a-1). The smallest adjacency eigenvalue
/// is 2 - r with multiplicity k - 1.
FamilyInstance gen_bo1_family(std::size_t k, std::size_t r);

/// G = complement(k (K_r - E(C_r))) before the K_{k,k} is removed.
WeightedGraph gen_bo1_base(std::size_t k, std::size_t r);
/// The K_{k,k} removed from gen_bo1_base, padded to kr vertices.
WeightedGraph gen_bo1_removed(std::size_t k, std::size_t r);

/// bo3 family on n = 3 n1 + 4 vertices (n1 even, >= 4).
///
/// S1 = 0..n1-1, S2 = n1..2n1+1, S3 = 2n1+2..3n1+3 (v_{i,a} is the a-th
/// vertex of S_i). H is K_{n1,n1+2,n1+2} plus the intra-block matchings
/// (v_{i,1} v_{i,2}), (v_{i,3} v_{i,4}), ...; F is the S1 matching plus the
/// cycle v_{2,1} v_{3,1} v_{2,2} v_{3,2} ... v_{3,n1+2} v_{2,1}. The instance
/// graph is H - E(F), with q_n = n1 + 2 of multiplicity >= 2.
FamilyInstance gen_bo3_family(std::size_t n1);

/// The graph H above (before removing F).
WeightedGraph gen_bo3_host(std::size_t n1);

/// complement(H[S2 u S3] - E(C)) on 2 n1 + 4 vertices (S2 first, then S3):
/// an (n1+2)-regular graph with q_1 = 2n1+4, q_2 = 2n1 and q_3 < n1+4.
WeightedGraph gen_bo3_auxiliary(std::size_t n1);

/// bo2 family: K_{r,...,r} with k >= 3 parts, r >= 2, plus the listed
/// intra-block edges. Throws ParameterError for a cross-block, duplicate or
/// out-of-range edge.
FamilyInstance gen_bo2_family(std::size_t k, std::size_t r,
                              std::span<const std::pair<Vertex, Vertex>> intra_edges = {});

/// Removes intra-block edges from an instance, keeping its partition and
/// bound kind. Throws ParameterError for a cross-block or missing edge.
FamilyInstance remove_intra_block_edges(const FamilyInstance& instance,
                                        std::span<const std::pair<Vertex, Vertex>> edges);

/// Runs certify_tightness on the instance's graph and partition.
TightnessCertificate certify(const FamilyInstance& instance);

struct SubtractionResult {
    bool ok = false;
    /// Empty when ok.
    std::string failure;
    std::optional<double> lambda;
    std::optional<WeightedGraph> graph;
};

/// G' = G - E(H) with the partition of G. H lives on the vertex set of G
/// (pad with isolated vertices); the blocks S'_i are the blocks of
/// `partition` restricted to H. Requires E(H) in E(G), the A-s-vector
/// condition on G with some lambda and on H with eigenvalue 0; then checks
/// that G' keeps lambda. Failures are reported, not thrown.
SubtractionResult subtract_zero_eigen_subgraph(const WeightedGraph& g, const VertexPartition& partition,
                                               const WeightedGraph& h);

}  // namespace mkc

#endif  // MKC_FAMILIES_HPP
