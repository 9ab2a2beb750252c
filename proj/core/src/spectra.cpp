#include "mkc/spectra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "mkc/errors.hpp"

namespace mkc {

SymmetricMatrix::SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

SymmetricMatrix::SymmetricMatrix(std::size_t n, std::vector<double> entries) : n_(n), data_(std::move(entries)) {
    if (data_.size() != n * n) {
        throw ContractError("matrix of order " + std::to_string(n) + " needs " + std::to_string(n * n) +
                            " entries, got " + std::to_string(data_.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (data_[i * n + j] + data_[j * n + i]);
            data_[i * n + j] = avg;
            data_[j * n + i] = avg;
        }
    }
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
    SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
    return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> d) {
    SymmetricMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.data_[i * d.size() + i] = d[i];
    return m;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
    if (i >= n_ || j >= n_) throw IndexError("matrix index out of range");
    data_[i * n_ + j] = value;
    data_[j * n_ + i] = value;
}

double SymmetricMatrix::sum() const noexcept { return std::accumulate(data_.begin(), data_.end(), 0.0); }

double SymmetricMatrix::trace() const noexcept {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += data_[i * n_ + i];
    return t;
}

double SymmetricMatrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
}

bool SymmetricMatrix::is_diagonal() const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (i != j && data_[i * n_ + j] != 0.0) return false;
        }
    }
    return true;
}

bool SymmetricMatrix::is_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

std::vector<double> SymmetricMatrix::apply(std::span<const double> x) const {
    if (x.size() != n_) throw ContractError("vector length differs from matrix order");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += data_[i * n_ + j] * x[j];
        y[i] = s;
    }
    return y;
}

SymmetricMatrix SymmetricMatrix::operator-() const {
    SymmetricMatrix m(*this);
    for (double& x : m.data_) x = -x;
    return m;
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    if (a.n_ != b.n_) throw ContractError("matrix orders differ");
    SymmetricMatrix m(a);
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
    return m;
}

SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b) { return a + (-b); }

std::size_t Spectrum::multiplicity(double value, double tol) const {
    return static_cast<std::size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                                  [&](double x) { return std::abs(x - value) <= tol; }));
}

// ---------------------------------------------------------------------------

SymmetricMatrix adjacency(const WeightedGraph& g) {
    SymmetricMatrix m(g.order());
    for (const auto& e : g.edges()) m.set(e.u, e.v, e.w);
    return m;
}

SymmetricMatrix degree_matrix(const WeightedGraph& g) {
    std::vector<double> d(g.order());
    for (Vertex v = 0; v < g.order(); ++v) d[v] = degree(g, v);
    return SymmetricMatrix::diagonal(d);
}

SymmetricMatrix laplacian(const WeightedGraph& g) { return degree_matrix(g) - adjacency(g); }

SymmetricMatrix signless_laplacian(const WeightedGraph& g) { return degree_matrix(g) + adjacency(g); }

SymmetricMatrix graph_matrix(const WeightedGraph& g, MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Adjacency: return adjacency(g);
        case MatrixKind::SignlessLaplacian: return signless_laplacian(g);
        case MatrixKind::Laplacian: return laplacian(g);
    }
    return adjacency(g);
}

std::string_view to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Adjacency: return "A";
        case MatrixKind::SignlessLaplacian: return "Q";
        case MatrixKind::Laplacian: return "L";
    }
    return "?";
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view s) {
    std::string t(s);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "a" || t == "adjacency") return MatrixKind::Adjacency;
    if (t == "q" || t == "signless" || t == "signless_laplacian") return MatrixKind::SignlessLaplacian;
    if (t == "l" || t == "laplacian") return MatrixKind::Laplacian;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kJacobiRelTol = 1e-12;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    }
    return std::sqrt(s);
}

}  // namespace

Spectrum eigendecompose(const SymmetricMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) throw NumericError("eigendecompose: empty matrix");
    if (!m.is_finite()) throw NumericError("eigendecompose: non-finite entry");

    std::vector<double> a(m.data().begin(), m.data().end());
    std::vector<double> v(n * n, 0.0);  // row-major accumulation of rotations
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    const double threshold = kJacobiRelTol * m.frobenius_norm();
    bool converged = false;
    for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a, n) <= threshold) {
            converged = true;
            break;
        }
        if (sweep == kMaxSweeps) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                double t;
                if (std::abs(tau) > 1e150) {
                    t = 0.5 / tau;
                } else {
                    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // A <- A J (columns p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                // A <- J^T A (rows p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p];
                    const double vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged) throw NumericError("eigendecompose: Jacobi did not converge in 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });

    Spectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n * n);
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t src = order[c];
        out.eigenvalues[c] = a[src * n + src];
        // Sign convention: first entry of non-negligible magnitude is positive.
        double sign = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (std::abs(v[k * n + src]) > 1e-12) {
                sign = v[k * n + src] > 0.0 ? 1.0 : -1.0;
                break;
            }
        }
        for (std::size_t k = 0; k < n; ++k) out.eigenvectors[c * n + k] = sign * v[k * n + src];
    }
    return out;
}

double grouping_tolerance(const SymmetricMatrix& m) { return 1e-7 * std::max(1.0, m.frobenius_norm()); }

double eigen_residual(const SymmetricMatrix& m, double lambda, std::span<const double> v) {
    const auto mv = m.apply(v);
    double r = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double d = mv[i] - lambda * v[i];
        r += d * d;
    }
    return std::sqrt(r);
}

bool verify_eigenpair(const SymmetricMatrix& m, double lambda, std::span<const double> v, double tol) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) throw ContractError("verify_eigenpair: zero vector");
    return eigen_residual(m, lambda, v) <= tol * norm;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kWeylTol = 1e-8;

}  // namespace

WeylReport weyl_check(const SymmetricMatrix& a, const SymmetricMatrix& b, std::size_t i, std::size_t j,
                      WeylReport::Inequality which, std::optional<std::vector<double>> probe) {
    const std::size_t n = a.order();
    if (b.order() != n) throw ContractError("weyl_check: matrix orders differ");
    if (i < 1 || i > n || j < 1 || j > n) throw ParameterError("weyl_check: indices must lie in 1..n");
    if (which == WeylReport::Inequality::UpperSum && i + j < n + 1) {
        throw ParameterError("weyl_check: lambda_i(A)+lambda_j(B) <= lambda_{i+j-n}(A+B) needs i+j >= n+1");
    }
    if (which == WeylReport::Inequality::LowerSum && i + j > n + 1) {
        throw ParameterError("weyl_check: lambda_i(A)+lambda_j(B) >= lambda_{i+j-1}(A+B) needs i+j <= n+1");
    }

    const auto sa = eigendecompose(a);
    const auto sb = eigendecompose(b);
    const auto ab = a + b;
    const auto sab = eigendecompose(ab);

    WeylReport r{};
    r.inequality = which;
    r.i = i;
    r.j = j;
    r.sum_index = which == WeylReport::Inequality::UpperSum ? i + j - n : i + j - 1;
    r.lhs = sa.lambda(i) + sb.lambda(j);
    r.rhs = sab.lambda(r.sum_index);
    r.holds = which == WeylReport::Inequality::UpperSum ? r.lhs <= r.rhs + kWeylTol : r.lhs >= r.rhs - kWeylTol;
    r.equality_candidate = std::abs(r.lhs - r.rhs) <= kWeylTol;
    if (probe) {
        const double tol = 1e-8 * std::max({1.0, a.frobenius_norm(), b.frobenius_norm()});
        r.probe_is_common_eigenvector = verify_eigenpair(a, sa.lambda(i), *probe, tol) &&
                                        verify_eigenpair(b, sb.lambda(j), *probe, tol) &&
                                        verify_eigenpair(ab, sab.lambda(r.sum_index), *probe, tol);
    }
    return r;
}

WeylReport weyl_check(const SymmetricMatrix& a, const SymmetricMatrix& b, std::size_t i, std::size_t j,
                      std::optional<std::vector<double>> probe) {
    const std::size_t n = a.order();
    const auto which = i + j >= n + 1 ? WeylReport::Inequality::UpperSum : WeylReport::Inequality::LowerSum;
    return weyl_check(a, b, i, j, which, std::move(probe));
}

// ---------------------------------------------------------------------------

std::string to_text(const SymmetricMatrix& m) {
    std::ostringstream os;
    os << std::setprecision(17);
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
    return os.str();
}

SymmetricMatrix parse_matrix_text(std::string_view text) {
    std::vector<double> values;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t k = i;
            while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
            if (k > i) {
                double x = 0.0;
                auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + k, x);
                if (ec != std::errc{} || ptr != line.data() + k || !std::isfinite(x)) {
                    throw ParseError(line_no, "bad matrix entry '" + std::string(line.substr(i, k - i)) + "'");
                }
                values.push_back(x);
            }
            i = k;
        }
    }
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(values.size()))));
    if (n == 0 || n * n != values.size()) {
        throw ParseError(line_no, "matrix needs n*n entries, got " + std::to_string(values.size()));
    }
    return SymmetricMatrix(n, std::move(values));
}

}  // namespace mkc
