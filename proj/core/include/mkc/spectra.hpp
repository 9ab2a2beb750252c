#ifndef MKC_SPECTRA_HPP
#define MKC_SPECTRA_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mkc/graph.hpp"

namespace mkc {

/// Dense real symmetric matrix, row-major. Symmetry is exact: the
/// constructor replaces the input by (M + M^T) / 2.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t n);
    /// `entries` is row-major with n*n values.
    SymmetricMatrix(std::size_t n, std::vector<double> entries);

    static SymmetricMatrix identity(std::size_t n);
    static SymmetricMatrix diagonal(std::span<const double> d);

    std::size_t order() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
    std::span<const double> data() const noexcept { return data_; }

    /// Sets both (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, double value);

    double sum() const noexcept;
    double trace() const noexcept;
    double frobenius_norm() const noexcept;
    bool is_diagonal() const noexcept;
    bool is_finite() const noexcept;

    std::vector<double> apply(std::span<const double> x) const;

    SymmetricMatrix operator-() const;
    friend SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b);
    friend SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b);
    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// Eigenvalues in descending order (lambda_1 >= ... >= lambda_n) with
/// orthonormal eigenvectors stored column by column.
struct Spectrum {
    std::vector<double> eigenvalues;
    std::vector<double> eigenvectors;  // column-major, n*n

    std::size_t order() const noexcept { return eigenvalues.size(); }
    /// 1-based, matching lambda_i.
    double lambda(std::size_t i) const { return eigenvalues.at(i - 1); }
    std::span<const double> eigenvector(std::size_t column) const {
        return {eigenvectors.data() + column * order(), order()};
    }
    double largest() const { return eigenvalues.front(); }
    double smallest() const { return eigenvalues.back(); }
    /// Number of eigenvalues within `tol` of `value`.
    std::size_t multiplicity(double value, double tol) const;
};

SymmetricMatrix adjacency(const WeightedGraph& g);
/// Diagonal matrix of degrees (loops counted once).
SymmetricMatrix degree_matrix(const WeightedGraph& g);
/// L = D - A.
SymmetricMatrix laplacian(const WeightedGraph& g);
/// Q = D + A.
SymmetricMatrix signless_laplacian(const WeightedGraph& g);

enum class MatrixKind { Adjacency, SignlessLaplacian, Laplacian };

SymmetricMatrix graph_matrix(const WeightedGraph& g, MatrixKind kind);
std::string_view to_string(MatrixKind kind);
/// Accepts "A", "Q", "L" (case-insensitive) and the long names.
std::optional<MatrixKind> parse_matrix_kind(std::string_view s);

/// Cyclic Jacobi eigendecomposition. Stops when the off-diagonal Frobenius
/// norm drops below 1e-12 * ||M||_F; at most 100 sweeps. Deterministic:
/// ties in the descending sort are broken by original diagonal index.
/// Throws NumericError for non-finite entries or an empty matrix.
Spectrum eigendecompose(const SymmetricMatrix& m);

/// Tolerance used to group equal eigenvalues: 1e-7 * max(1, ||M||_F).
double grouping_tolerance(const SymmetricMatrix& m);

/// ||M v - lambda v||_2 <= tol * ||v||_2. Throws ContractError for v = 0.
bool verify_eigenpair(const SymmetricMatrix& m, double lambda, std::span<const double> v, double tol);
double eigen_residual(const SymmetricMatrix& m, double lambda, std::span<const double> v);

struct WeylReport {
    enum class Inequality {
        UpperSum,  // lambda_i(A) + lambda_j(B) <= lambda_{i+j-n}(A+B), i+j >= n+1
        LowerSum,  // lambda_i(A) + lambda_j(B) >= lambda_{i+j-1}(A+B), i+j <= n+1
    };

    Inequality inequality;
    std::size_t i;
    std::size_t j;
    std::size_t sum_index;  // index into the spectrum of A+B
    double lhs;             // lambda_i(A) + lambda_j(B)
    double rhs;             // lambda_{sum_index}(A+B)
    bool holds;
    bool equality_candidate;
    /// Present when a probe vector was supplied: whether it is a common
    /// eigenvector for the three eigenvalues involved.
    std::optional<bool> probe_is_common_eigenvector;
};

/// Checks the applicable Weyl inequality for 1-based (i, j). When both apply
/// (i + j == n + 1) the first is reported. Throws ParameterError for indices
/// outside 1..n and ContractError for mismatched orders.
WeylReport weyl_check(const SymmetricMatrix& a, const SymmetricMatrix& b, std::size_t i, std::size_t j,
                      std::optional<std::vector<double>> probe = std::nullopt);
/// Same but forces the inequality; throws ParameterError if it does not apply.
WeylReport weyl_check(const SymmetricMatrix& a, const SymmetricMatrix& b, std::size_t i, std::size_t j,
                      WeylReport::Inequality which, std::optional<std::vector<double>> probe = std::nullopt);

/// Row-major text, one row per line.
std::string to_text(const SymmetricMatrix& m);
/// Whitespace separated entries, order inferred from the count (must be a
/// perfect square); '#' starts a comment. Throws ParseError.
SymmetricMatrix parse_matrix_text(std::string_view text);

}  // namespace mkc

#endif  // MKC_SPECTRA_HPP
