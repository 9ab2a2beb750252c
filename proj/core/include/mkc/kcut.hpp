#ifndef MKC_KCUT_HPP
#define MKC_KCUT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mkc/charax.hpp"
#include "mkc/graph.hpp"
#include "mkc/spectra.hpp"

namespace mkc {

/// Half the mass of the off-diagonal blocks of M under V. On the adjacency
/// matrix of a graph this is the total weight of edges between blocks.
/// Empty blocks are allowed. Throws ContractError on an order mismatch.
double matrix_cut(const SymmetricMatrix& m, const VertexPartition& v);

struct GeneralBound {
    std::size_t k;
    double lambda_max;  // lambda_1(B - A)
    /// ((k-1) n / 2k) (lambda_1(B - A) + sum(A)/n - sum(B)/n); no k-partition
    /// of A has a larger matrix cut.
    double cut_upper;
};

/// Diagonal-shift bound. Throws ParameterError for k < 2 or n < k and
/// ContractError when B is not diagonal or the orders differ.
GeneralBound general_bound(const SymmetricMatrix& a, const SymmetricMatrix& b, std::size_t k);

/// Right-hand side of the partition-level inequality
///   lambda_1(B - A) >= 2k/((k-1)n) cut(A,V) - sum(A)/n + sum(B)/n.
double partition_eigenvalue_lower_bound(const SymmetricMatrix& a, const SymmetricMatrix& b,
                                        const VertexPartition& v);

enum class BoundKind {
    General,
    Adjacency,  // bo1: ((k-1)/k)(m - n lambda_n / 2)
    Laplacian,  // bo2: ((k-1) n / 2k) mu_1
    Signless,   // bo3: ((k-1)/k)(2m - n q_n / 2)
};

std::string_view to_string(BoundKind kind);
/// "bo1" / "bo2" / "bo3" (also "A", "L", "Q").
std::optional<BoundKind> parse_bound_kind(std::string_view s);
/// Matrix whose s-vectors certify the bound: A for bo1, L for bo2, Q for bo3.
MatrixKind certifying_matrix(BoundKind kind);

struct BoundReport {
    BoundKind kind = BoundKind::General;
    std::size_t k = 0;
    double bound = 0.0;
    /// floor(bound + 1e-9); present when every edge weight is an integer.
    std::optional<std::int64_t> integer_bound;
    /// lambda_n(A), mu_1(L) or q_n(Q).
    double extreme_eigenvalue = 0.0;
    /// Multiplicity of the extreme eigenvalue (grouping tolerance 1e-7 * max(1, ||M||_F)).
    std::size_t extreme_multiplicity = 0;
    /// One unit eigenvector for the extreme eigenvalue.
    std::vector<double> extreme_eigenvector;
};

/// Throws UnsupportedInput for negative weights, ParameterError for k < 2.
/// m is taken as sum(A)/2, so loops count with half their weight.
BoundReport bound_bo1(const WeightedGraph& g, std::size_t k);
BoundReport bound_bo2(const WeightedGraph& g, std::size_t k);
BoundReport bound_bo3(const WeightedGraph& g, std::size_t k);
BoundReport compute_bound(const WeightedGraph& g, std::size_t k, BoundKind kind);

struct BoundComparison {
    BoundReport bo1;
    BoundReport bo2;
    BoundReport bo3;
    /// Kinds attaining the minimum (within 1e-9 relative).
    std::vector<BoundKind> minimal;

    double best() const;
};

BoundComparison compare_bounds(const WeightedGraph& g, std::size_t k);

struct CutValue {
    double value = 0.0;
    VertexPartition partition;
    /// Block label of each vertex; the lexicographically smallest optimal
    /// restricted-growth string.
    std::vector<std::size_t> assignment;
};

inline constexpr double kDefaultExactBudget = 1e8;

/// k^(n-1), the budget the exhaustive search is charged.
double exact_search_cost(std::size_t n, std::size_t k);

/// Exact max k-cut by enumerating restricted-growth strings (vertex 0 in
/// block 0, blocks opened in first-use order; empty blocks permitted, so the
/// partition always has k blocks). Throws BudgetExceeded when
/// k^(n-1) > budget and ParameterError for k < 1. The result does not depend
/// on `threads`.
CutValue exact_max_kcut(const WeightedGraph& g, std::size_t k, double budget = kDefaultExactBudget,
                        unsigned threads = 1);

struct TightnessCertificate {
    VertexPartition partition;
    double cut = 0.0;
    BoundReport bound;
    /// Degree-condition verdict for the s-vectors on the certifying matrix.
    CharaxVerdict svector_verdict;
    /// ||M s^(i) - extreme s^(i)|| / ||s^(i)|| for each block i.
    std::vector<double> svector_residuals;
    bool certified = false;
    std::string reason;
};

/// Grants a certificate iff (a) the s-vectors of the partition are
/// eigenvectors of the certifying matrix for its extreme eigenvalue (within
/// 1e-7 * max(1, ||M||_F)) and (b) the cut equals the bound within
/// 1e-6 * max(1, |bound|). A certificate proves mc_k(g) = bound.
TightnessCertificate certify_tightness(const WeightedGraph& g, const VertexPartition& partition, BoundKind kind);

}  // namespace mkc

#endif  // MKC_KCUT_HPP
