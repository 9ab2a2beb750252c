#include "mkc/charax.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mkc/errors.hpp"

namespace mkc {

PartitionVector::PartitionVector(VertexPartition partition, double c1, double c2)
    : partition_(std::move(partition)), c1_(c1), c2_(c2) {
    if (!(c1 > 0.0) || !(c2 > 0.0)) throw ParameterError("partition vector coefficients must be positive");
    const auto k = partition_.block_count();
    if (k != 2 && k != 3) throw ParameterError("partition vector needs 2 or 3 blocks, got " + std::to_string(k));
    if (partition_.block(0).empty() || partition_.block(1).empty()) {
        throw ParameterError("blocks S1 and S2 must be non-empty");
    }
}

std::vector<double> PartitionVector::materialize() const {
    std::vector<double> x(partition_.order(), 0.0);
    for (Vertex v : partition_.block(0)) x[v] = c1_;
    for (Vertex v : partition_.block(1)) x[v] = -c2_;
    return x;
}

std::vector<double> svector(const VertexPartition& partition, std::size_t i) {
    if (i >= partition.block_count()) throw IndexError("s-vector index out of range");
    const double low = 1.0 - static_cast<double>(partition.block_count());
    std::vector<double> x(partition.order(), 1.0);
    for (Vertex v : partition.block(i)) x[v] = low;
    return x;
}

double condition_tolerance(const WeightedGraph& g) { return 1e-9 * std::max(1.0, g.max_abs_weight()); }

namespace {

void require_same_order(const WeightedGraph& g, const VertexPartition& p) {
    if (g.order() != p.order()) {
        throw ContractError("partition covers " + std::to_string(p.order()) + " vertices, graph has " +
                            std::to_string(g.order()));
    }
}

}  // namespace

CharaxVerdict check_tripartition(const WeightedGraph& g, const PartitionVector& p, MatrixKind kind) {
    const auto& part = p.partition();
    require_same_order(g, part);
    const double tol = condition_tolerance(g);
    const double c[2] = {p.c1(), p.c2()};

    // Left-hand side of the eigen-condition at v in S1 (own = 0) or S2 (own = 1);
    // it must equal c[own] * eigenvalue.
    auto lhs = [&](Vertex v, int own) {
        const auto row = block_degrees(g, part, v);
        const int other = 1 - own;
        const double inside = row[own];
        const double across = row[other];
        switch (kind) {
            case MatrixKind::Adjacency: return c[own] * inside - c[other] * across;
            case MatrixKind::SignlessLaplacian: return c[own] * degree(g, v) + c[own] * inside - c[other] * across;
            case MatrixKind::Laplacian: return c[own] * degree(g, v) - c[own] * inside + c[other] * across;
        }
        return 0.0;
    };

    CharaxVerdict verdict;
    const double eigenvalue = lhs(part.block(0).front(), 0) / c[0];
    static const char* const names[2] = {"S1", "S2"};
    for (int own = 0; own < 2; ++own) {
        for (Vertex v : part.block(own)) {
            const double l = lhs(v, own);
            const double r = c[own] * eigenvalue;
            if (std::abs(l - r) > tol) verdict.violations.push_back({v, names[own], l, r});
        }
    }
    if (p.has_zero_block()) {
        for (Vertex v : part.block(2)) {
            const auto row = block_degrees(g, part, v);
            const double l = c[0] * row[0] - c[1] * row[1];
            if (std::abs(l) > tol) verdict.violations.push_back({v, "S3-balance", l, 0.0});
        }
    }
    verdict.is_eigenvector = verdict.violations.empty();
    if (verdict.is_eigenvector) verdict.eigenvalue = eigenvalue;
    return verdict;
}

CharaxVerdict check_svector(const WeightedGraph& g, const VertexPartition& partition, MatrixKind kind) {
    require_same_order(g, partition);
    const auto k = partition.block_count();
    if (k < 2) throw ParameterError("s-vectors need k >= 2 blocks");
    if (partition.has_empty_block()) throw ParameterError("s-vectors need non-empty blocks");
    const double tol = condition_tolerance(g);

    CharaxVerdict verdict;
    std::optional<double> eigenvalue;
    for (std::size_t i = 0; i < k; ++i) {
        for (Vertex v : partition.block(i)) {
            const auto row = block_degrees(g, partition, v);
            const double d = kind == MatrixKind::Adjacency ? 0.0 : degree(g, v);
            for (std::size_t j = 0; j < k; ++j) {
                if (j == i) continue;
                double l = 0.0;
                switch (kind) {
                    case MatrixKind::Adjacency: l = row[i] - row[j]; break;
                    case MatrixKind::SignlessLaplacian: l = d + row[i] - row[j]; break;
                    case MatrixKind::Laplacian: l = d - row[i] + row[j]; break;
                }
                if (!eigenvalue) eigenvalue = l;
                if (std::abs(l - *eigenvalue) > tol) {
                    verdict.violations.push_back(
                        {v, "S" + std::to_string(i + 1) + "->S" + std::to_string(j + 1), l, *eigenvalue});
                }
            }
        }
    }
    verdict.is_eigenvector = verdict.violations.empty();
    if (verdict.is_eigenvector) verdict.eigenvalue = eigenvalue;
    return verdict;
}

SVectorStructureReport svector_structure_checks(const WeightedGraph& g, const VertexPartition& partition) {
    SVectorStructureReport report;
    const auto verdict = check_svector(g, partition, MatrixKind::Laplacian);
    if (!verdict.is_eigenvector) return report;

    const auto k = partition.block_count();
    const double tol = condition_tolerance(g);
    const double mu = *verdict.eigenvalue;
    report.applicable = true;
    report.mu = mu;
    report.cross_regular_degree = mu * static_cast<double>(k - 1) / static_cast<double>(k);

    report.equal_block_sizes = std::all_of(partition.blocks().begin(), partition.blocks().end(),
                                           [&](const auto& b) { return b.size() == partition.block(0).size(); });

    report.cross_regular = true;
    report.uniform_cross_degrees = true;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto row = block_degrees(g, partition, v);
        const auto own = partition.block_of(v);
        double cross = 0.0;
        std::optional<double> first;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == own) continue;
            cross += row[j];
            if (!first) first = row[j];
            if (std::abs(row[j] - *first) > tol) report.uniform_cross_degrees = false;
        }
        if (std::abs(cross - *report.cross_regular_degree) > tol) report.cross_regular = false;
    }
    return report;
}

}  // namespace mkc
