#ifndef MKC_CHARAX_HPP
#define MKC_CHARAX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mkc/graph.hpp"
#include "mkc/spectra.hpp"

namespace mkc {

/// Vector constant on the blocks of a bi- or tripartition, taking the value
/// c1 on S1, -c2 on S2 and 0 on S3 (when present). c1, c2 > 0; S1 and S2
/// must be non-empty, S3 may be empty.
class PartitionVector {
public:
    /// Throws ParameterError on non-positive coefficients, a block count
    /// other than 2 or 3, or an empty S1/S2.
    PartitionVector(VertexPartition partition, double c1, double c2);

    static PartitionVector signed_unit(VertexPartition partition) { return {std::move(partition), 1.0, 1.0}; }

    const VertexPartition& partition() const noexcept { return partition_; }
    double c1() const noexcept { return c1_; }
    double c2() const noexcept { return c2_; }
    bool has_zero_block() const noexcept { return partition_.block_count() == 3; }

    std::vector<double> materialize() const;

private:
    VertexPartition partition_;
    double c1_;
    double c2_;
};

/// s^(i) for a k-partition: -k+1 on block i (0-based here) and 1 elsewhere.
std::vector<double> svector(const VertexPartition& partition, std::size_t i);

struct Violation {
    Vertex vertex;
    std::string condition;
    double lhs;
    double rhs;
};

struct CharaxVerdict {
    bool is_eigenvector = false;
    std::optional<double> eigenvalue;
    std::vector<Violation> violations;
};

/// Tolerance for degree conditions: 1e-9 * max(1, max |w|).
double condition_tolerance(const WeightedGraph& g);

/// Decides from degree conditions alone whether p is an eigenvector of the
/// chosen matrix of g. The eigenvalue is fixed by the first vertex of S1;
/// every other condition is checked against it and each failure is listed.
CharaxVerdict check_tripartition(const WeightedGraph& g, const PartitionVector& p, MatrixKind kind);

/// For v in S1: c1 d(v,S1) - c2 d(v,S1,S2) = c1 lambda; symmetric for S2;
/// for v in S3: c1 d(v,S3,S1) - c2 d(v,S3,S2) = 0.
inline CharaxVerdict check_adjacency_tripartition(const WeightedGraph& g, const PartitionVector& p) {
    return check_tripartition(g, p, MatrixKind::Adjacency);
}

/// For v in S1: c1 d(v) + c1 d(v,S1) - c2 d(v,S1,S2) = c1 q; S3 as for A.
inline CharaxVerdict check_signless_tripartition(const WeightedGraph& g, const PartitionVector& p) {
    return check_tripartition(g, p, MatrixKind::SignlessLaplacian);
}

/// For v in S1: c1 d(v) - c1 d(v,S1) + c2 d(v,S1,S2) = c1 mu; S3 as for A.
/// With S3 empty this is (c1 + c2) d(v,S,S') = c1 mu.
inline CharaxVerdict check_laplacian_tripartition(const WeightedGraph& g, const PartitionVector& p) {
    return check_tripartition(g, p, MatrixKind::Laplacian);
}

/// Whether every s^(i) of the k-partition is an eigenvector of the chosen
/// matrix with a common eigenvalue. Per vertex v in S_i and j != i:
///   A: d(v,S_i) - d(v,S_i,S_j)               = lambda
///   Q: d(v) + d(v,S_i) - d(v,S_i,S_j)        = q
///   L: d(v) - d(v,S_i) + d(v,S_i,S_j)        = mu   (mu = k * cross degree)
/// Throws ParameterError for k < 2 or an empty block.
CharaxVerdict check_svector(const WeightedGraph& g, const VertexPartition& partition, MatrixKind kind);

struct SVectorStructureReport {
    bool applicable = false;
    std::optional<double> mu;
    bool equal_block_sizes = false;
    bool cross_regular = false;
    /// mu (k-1) / k, the degree every vertex should have in the cross-edge subgraph.
    std::optional<double> cross_regular_degree;
    bool uniform_cross_degrees = false;
};

/// Structural consequences of the s-vectors being Laplacian eigenvectors:
/// equal block sizes, regularity of the cross-edge subgraph and equal
/// per-vertex degree into each other block. `applicable` is false when
/// check_svector(g, partition, L) fails.
SVectorStructureReport svector_structure_checks(const WeightedGraph& g, const VertexPartition& partition);

}  // namespace mkc

#endif  // MKC_CHARAX_HPP
