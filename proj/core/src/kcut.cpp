#include "mkc/kcut.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "mkc/errors.hpp"

namespace mkc {

double matrix_cut(const SymmetricMatrix& m, const VertexPartition& v) {
    if (m.order() != v.order()) throw ContractError("matrix_cut: partition and matrix orders differ");
    const std::size_t n = m.order();
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (v.block_of(i) != v.block_of(j)) off += m(i, j);
        }
    }
    return off;
}

namespace {

void check_k(std::size_t n, std::size_t k) {
    if (k < 2) throw ParameterError("bounds need k >= 2, got " + std::to_string(k));
    if (n < k) throw ParameterError("bounds need n >= k");
}

void check_shift(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    if (a.order() != b.order()) throw ContractError("A and B must have the same order");
    if (!b.is_diagonal()) throw ContractError("B must be diagonal");
}

}  // namespace

GeneralBound general_bound(const SymmetricMatrix& a, const SymmetricMatrix& b, std::size_t k) {
    check_shift(a, b);
    const std::size_t n = a.order();
    check_k(n, k);
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    const double lambda_max = eigendecompose(b - a).largest();
    const double cut_upper = (kd - 1.0) * nd / (2.0 * kd) * (lambda_max + a.sum() / nd - b.sum() / nd);
    return {k, lambda_max, cut_upper};
}

double partition_eigenvalue_lower_bound(const SymmetricMatrix& a, const SymmetricMatrix& b,
                                        const VertexPartition& v) {
    check_shift(a, b);
    const double nd = static_cast<double>(a.order());
    const double kd = static_cast<double>(v.block_count());
    check_k(a.order(), v.block_count());
    return 2.0 * kd / ((kd - 1.0) * nd) * matrix_cut(a, v) - a.sum() / nd + b.sum() / nd;
}

std::string_view to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::General: return "general";
        case BoundKind::Adjacency: return "bo1";
        case BoundKind::Laplacian: return "bo2";
        case BoundKind::Signless: return "bo3";
    }
    return "?";
}

std::optional<BoundKind> parse_bound_kind(std::string_view s) {
    std::string t(s);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "bo1" || t == "a" || t == "adjacency") return BoundKind::Adjacency;
    if (t == "bo2" || t == "l" || t == "laplacian") return BoundKind::Laplacian;
    if (t == "bo3" || t == "q" || t == "signless") return BoundKind::Signless;
    return std::nullopt;
}

MatrixKind certifying_matrix(BoundKind kind) {
    switch (kind) {
        case BoundKind::Laplacian: return MatrixKind::Laplacian;
        case BoundKind::Signless: return MatrixKind::SignlessLaplacian;
        default: return MatrixKind::Adjacency;
    }
}

namespace {

constexpr double kFloorEps = 1e-9;

BoundReport graph_bound(const WeightedGraph& g, std::size_t k, BoundKind kind) {
    if (g.has_negative_weight()) throw UnsupportedInput("graph bounds need non-negative weights");
    check_k(g.order(), k);
    const auto m = graph_matrix(g, certifying_matrix(kind));
    const auto spectrum = eigendecompose(m);
    const double n = static_cast<double>(g.order());
    const double kd = static_cast<double>(k);
    const double size = g.adjacency_mass() / 2.0;

    BoundReport r;
    r.kind = kind;
    r.k = k;
    const bool use_largest = kind == BoundKind::Laplacian;
    r.extreme_eigenvalue = use_largest ? spectrum.largest() : spectrum.smallest();
    const std::size_t column = use_largest ? 0 : spectrum.order() - 1;
    auto vec = spectrum.eigenvector(column);
    r.extreme_eigenvector.assign(vec.begin(), vec.end());
    r.extreme_multiplicity = spectrum.multiplicity(r.extreme_eigenvalue, grouping_tolerance(m));
    switch (kind) {
        case BoundKind::Adjacency: r.bound = (kd - 1.0) / kd * (size - n * r.extreme_eigenvalue / 2.0); break;
        case BoundKind::Laplacian: r.bound = (kd - 1.0) * n / (2.0 * kd) * r.extreme_eigenvalue; break;
        case BoundKind::Signless: r.bound = (kd - 1.0) / kd * (2.0 * size - n * r.extreme_eigenvalue / 2.0); break;
        case BoundKind::General: throw ParameterError("graph bounds are bo1, bo2 or bo3");
    }
    if (g.has_integer_weights()) r.integer_bound = static_cast<std::int64_t>(std::floor(r.bound + kFloorEps));
    return r;
}

}  // namespace

BoundReport bound_bo1(const WeightedGraph& g, std::size_t k) { return graph_bound(g, k, BoundKind::Adjacency); }
BoundReport bound_bo2(const WeightedGraph& g, std::size_t k) { return graph_bound(g, k, BoundKind::Laplacian); }
BoundReport bound_bo3(const WeightedGraph& g, std::size_t k) { return graph_bound(g, k, BoundKind::Signless); }

BoundReport compute_bound(const WeightedGraph& g, std::size_t k, BoundKind kind) { return graph_bound(g, k, kind); }

double BoundComparison::best() const { return std::min({bo1.bound, bo2.bound, bo3.bound}); }

BoundComparison compare_bounds(const WeightedGraph& g, std::size_t k) {
    BoundComparison c{bound_bo1(g, k), bound_bo2(g, k), bound_bo3(g, k), {}};
    const double best = c.best();
    const double tol = 1e-9 * std::max(1.0, std::abs(best));
    for (const auto* r : {&c.bo1, &c.bo2, &c.bo3}) {
        if (r->bound <= best + tol) c.minimal.push_back(r->kind);
    }
    return c;
}

// ---------------------------------------------------------------------------

double exact_search_cost(std::size_t n, std::size_t k) {
    if (n == 0) return 1.0;
    return std::pow(static_cast<double>(k), static_cast<double>(n - 1));
}

namespace {

// Depth-first enumeration of restricted-growth strings in lexicographic
// order. Incremental cut: assigning vertex i adds the weight of its edges to
// earlier vertices in other blocks.
class RgsSearch {
public:
    RgsSearch(const WeightedGraph& g, std::size_t k) : n_(g.order()), k_(k), back_(g.order()) {
        for (const auto& e : g.edges()) {
            if (!e.is_loop()) back_[e.v].push_back({e.u, e.w});
        }
    }

    struct Best {
        double value = -std::numeric_limits<double>::infinity();
        std::vector<std::size_t> assignment;
    };

    /// Best completion of `prefix` (a valid RGS prefix).
    Best run(const std::vector<std::size_t>& prefix) const {
        std::vector<std::size_t> labels(n_, 0);
        double value = 0.0;
        std::size_t used = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            labels[i] = prefix[i];
            value += gain(labels, i);
            used = std::max(used, prefix[i] + 1);
        }
        Best best;
        descend(labels, prefix.size(), used, value, best);
        return best;
    }

    /// All valid RGS prefixes of the given length, lexicographically.
    std::vector<std::vector<std::size_t>> prefixes(std::size_t length) const {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        collect(cur, 0, length, out);
        return out;
    }

    std::size_t order() const { return n_; }

private:
    double gain(const std::vector<std::size_t>& labels, std::size_t i) const {
        double s = 0.0;
        for (const auto& nb : back_[i]) {
            if (labels[nb.vertex] != labels[i]) s += nb.weight;
        }
        return s;
    }

    void descend(std::vector<std::size_t>& labels, std::size_t i, std::size_t used, double value, Best& best) const {
        if (i == n_) {
            if (value > best.value) {
                best.value = value;
                best.assignment = labels;
            }
            return;
        }
        const std::size_t limit = std::min(k_, used + 1);
        for (std::size_t b = 0; b < limit; ++b) {
            labels[i] = b;
            descend(labels, i + 1, std::max(used, b + 1), value + gain(labels, i), best);
        }
    }

    void collect(std::vector<std::size_t>& cur, std::size_t used, std::size_t length,
                 std::vector<std::vector<std::size_t>>& out) const {
        if (cur.size() == length) {
            out.push_back(cur);
            return;
        }
        const std::size_t limit = std::min(k_, used + 1);
        for (std::size_t b = 0; b < limit; ++b) {
            cur.push_back(b);
            collect(cur, std::max(used, b + 1), length, out);
            cur.pop_back();
        }
    }

    std::size_t n_;
    std::size_t k_;
    std::vector<std::vector<Neighbor>> back_;
};

bool better(const RgsSearch::Best& a, const RgsSearch::Best& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.assignment < b.assignment;
}

}  // namespace

CutValue exact_max_kcut(const WeightedGraph& g, std::size_t k, double budget, unsigned threads) {
    if (k < 1) throw ParameterError("exact_max_kcut needs k >= 1");
    const std::size_t n = g.order();
    const double cost = exact_search_cost(n, k);
    if (cost > budget) throw BudgetExceeded(cost, budget);

    CutValue out;
    if (n == 0) {
        out.partition = VertexPartition(0, std::vector<std::vector<Vertex>>(k));
        return out;
    }

    const RgsSearch search(g, k);
    RgsSearch::Best best;
    if (threads <= 1 || n < 4) {
        best = search.run({});
    } else {
        // Split on prefixes so each worker owns a contiguous lexicographic range;
        // the reduction below is independent of scheduling.
        std::size_t depth = 1;
        while (depth < n - 1 && search.prefixes(depth).size() < 8 * static_cast<std::size_t>(threads)) ++depth;
        const auto prefixes = search.prefixes(depth);
        std::vector<RgsSearch::Best> results(prefixes.size());
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < prefixes.size(); i = next++) results[i] = search.run(prefixes[i]);
            });
        }
        for (auto& th : pool) th.join();
        best = results.front();
        for (const auto& r : results) {
            if (better(r, best)) best = r;
        }
    }

    out.value = best.value;
    out.assignment = best.assignment;
    out.partition = VertexPartition::from_labels(out.assignment, k);
    return out;
}

// ---------------------------------------------------------------------------

TightnessCertificate certify_tightness(const WeightedGraph& g, const VertexPartition& partition, BoundKind kind) {
    TightnessCertificate cert;
    cert.partition = partition;
    if (partition.order() != g.order()) {
        cert.reason = "partition order differs from graph order";
        return cert;
    }
    if (partition.block_count() < 2 || partition.has_empty_block()) {
        cert.reason = "certificates need k >= 2 non-empty blocks";
        return cert;
    }
    if (kind == BoundKind::General) {
        cert.reason = "certificates are issued for bo1, bo2 or bo3";
        return cert;
    }
    const auto matrix_kind = certifying_matrix(kind);
    const auto m = graph_matrix(g, matrix_kind);
    cert.cut = matrix_cut(adjacency(g), partition);
    cert.bound = compute_bound(g, partition.block_count(), kind);
    cert.svector_verdict = check_svector(g, partition, matrix_kind);

    const double eig_tol = grouping_tolerance(m);
    for (std::size_t i = 0; i < partition.block_count(); ++i) {
        const auto s = svector(partition, i);
        double norm = 0.0;
        for (double x : s) norm += x * x;
        cert.svector_residuals.push_back(eigen_residual(m, cert.bound.extreme_eigenvalue, s) / std::sqrt(norm));
    }

    if (!cert.svector_verdict.is_eigenvector) {
        cert.reason = "s-vectors are not eigenvectors of " + std::string(to_string(matrix_kind));
        return cert;
    }
    if (std::abs(*cert.svector_verdict.eigenvalue - cert.bound.extreme_eigenvalue) > eig_tol) {
        cert.reason = "s-vector eigenvalue " + std::to_string(*cert.svector_verdict.eigenvalue) +
                      " is not the extreme eigenvalue " + std::to_string(cert.bound.extreme_eigenvalue);
        return cert;
    }
    if (std::any_of(cert.svector_residuals.begin(), cert.svector_residuals.end(),
                    [&](double r) { return r > eig_tol; })) {
        cert.reason = "s-vector residual exceeds tolerance";
        return cert;
    }
    if (std::abs(cert.cut - cert.bound.bound) > 1e-6 * std::max(1.0, std::abs(cert.bound.bound))) {
        cert.reason = "cut differs from bound";
        return cert;
    }
    cert.certified = true;
    return cert;
}

}  // namespace mkc
