// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances below are fixed by the requirements and must not be
// loosened.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "mkc/charax.hpp"
#include "mkc/families.hpp"
#include "mkc/kcut.hpp"
#include "mkc/spectra.hpp"
#include "oracles.hpp"

using namespace mkc;

namespace {

constexpr double kMultiplicityTol = 1e-7;
constexpr double kBo2MuTol = 1e-8;
constexpr double kSoundnessTol = 1e-8;
constexpr double kReductionRelTol = 1e-9;
constexpr double kCharaxTol = 1e-8;
constexpr double kNamedRealTol = 1e-4;
constexpr double kReconstructionRelTol = 1e-7;
constexpr double kOrthonormalityTol = 1e-8;
constexpr double kWeylTol = 1e-8;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "first failure: " << what;
            pass = false;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

// 1 -------------------------------------------------------------------------

Outcome criterion_bo1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    struct Case {
        std::size_t k, r, m;
        long long bound;
    };
    for (const Case c : {Case{3, 7, 159, 141}, Case{3, 8, 207, 186}, Case{4, 8, 400, 372}}) {
        const std::string tag = "(k=" + std::to_string(c.k) + ",r=" + std::to_string(c.r) + ") ";
        const auto inst = gen_bo1_family(c.k, c.r);
        o.require(inst.graph.order() == c.k * c.r, tag + "n");
        o.require(inst.graph.size() == c.m, tag + "m=" + std::to_string(inst.graph.size()));
        const double expected = 2.0 - static_cast<double>(c.r);
        const auto spec = eigendecompose(adjacency(inst.graph));
        o.require(std::abs(spec.smallest() - expected) <= kMultiplicityTol,
                  tag + "lambda_n=" + fmt(spec.smallest()));
        o.require(spec.multiplicity(expected, kMultiplicityTol) == c.k - 1, tag + "multiplicity");
        const auto ref = oracle::eigenvalues(oracle::adjacency(inst.graph));
        o.require(std::abs(ref(0) - expected) <= kMultiplicityTol, tag + "oracle lambda_n");
        const auto cert = certify(inst);
        o.require(cert.certified, tag + "certificate: " + cert.reason);
        o.require(cert.cut == static_cast<double>(c.bound), tag + "cut=" + fmt(cert.cut));
        o.require(cert.bound.integer_bound && *cert.bound.integer_bound == c.bound, tag + "integer bound");
        o.require(std::abs(cert.bound.bound - static_cast<double>(c.bound)) <= 1e-6, tag + "bound=" + fmt(cert.bound.bound));
    }
    const double secs = seconds_since(t0);
    o.require(secs < 5.0, "runtime " + fmt(secs) + " s");
    if (o.pass) o.detail << "bounds 141/186/372 certified in " << fmt(secs) << " s";
    return o;
}

// 2 -------------------------------------------------------------------------

Outcome criterion_bo3() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    struct Case {
        std::size_t n1;
        long long bound;
    };
    for (const Case c : {Case{4, 72}, Case{6, 144}, Case{8, 240}}) {
        const std::string tag = "(n1=" + std::to_string(c.n1) + ") ";
        const auto inst = gen_bo3_family(c.n1);
        const double qn = static_cast<double>(c.n1 + 2);
        o.require(inst.graph.order() == 3 * c.n1 + 4, tag + "n");
        const auto spec = eigendecompose(signless_laplacian(inst.graph));
        o.require(std::abs(spec.smallest() - qn) <= kMultiplicityTol, tag + "q_n=" + fmt(spec.smallest()));
        const auto host = eigendecompose(signless_laplacian(gen_bo3_host(c.n1)));
        o.require(std::abs(host.smallest() - qn) <= kMultiplicityTol, tag + "q_n(H)=" + fmt(host.smallest()));
        const auto cert = certify(inst);
        o.require(cert.certified, tag + "certificate: " + cert.reason);
        o.require(cert.cut == static_cast<double>(c.bound), tag + "cut=" + fmt(cert.cut));
        o.require(std::abs(cert.bound.bound - static_cast<double>(c.bound)) <= 1e-6, tag + "bound=" + fmt(cert.bound.bound));

        const auto aux = eigendecompose(signless_laplacian(gen_bo3_auxiliary(c.n1)));
        const double n1 = static_cast<double>(c.n1);
        o.require(std::abs(aux.lambda(1) - (2 * n1 + 4)) <= kMultiplicityTol, tag + "aux q1=" + fmt(aux.lambda(1)));
        o.require(std::abs(aux.lambda(2) - 2 * n1) <= kMultiplicityTol, tag + "aux q2=" + fmt(aux.lambda(2)));
        o.require(aux.lambda(3) < n1 + 4, tag + "aux q3=" + fmt(aux.lambda(3)));
    }
    const double secs = seconds_since(t0);
    o.require(secs < 10.0, "runtime " + fmt(secs) + " s");
    if (o.pass) o.detail << "n1=4,6,8 certified (72/144/240), auxiliary spectra hold, " << fmt(secs) << " s";
    return o;
}

// 3 -------------------------------------------------------------------------

Outcome criterion_bo2() {
    Outcome o;
    std::mt19937_64 rng(3003);
    std::size_t certificates = 0;
    for (std::size_t k : {3, 4}) {
        for (std::size_t r : {2, 3}) {
            const std::string tag = "(k=" + std::to_string(k) + ",r=" + std::to_string(r) + ") ";
            const double n = static_cast<double>(k * r);
            auto check = [&](const FamilyInstance& inst, const std::string& what) {
                const auto mu = eigendecompose(laplacian(inst.graph)).largest();
                o.require(std::abs(mu - n) <= kBo2MuTol, tag + what + " mu_1=" + fmt(mu));
                const auto cert = certify(inst);
                o.require(cert.certified, tag + what + " certificate: " + cert.reason);
                double cross = 0.0;
                for (const auto& e : inst.graph.edges()) {
                    if (inst.partition.block_of(e.u) != inst.partition.block_of(e.v)) cross += e.w;
                }
                o.require(cert.cut == cross, tag + what + " cut");
                o.require(std::abs(cert.bound.bound - cert.cut) <= 1e-6 * std::max(1.0, cert.cut), tag + what + " bound");
                ++certificates;
            };
            const auto base = gen_bo2_family(k, r);
            check(base, "base");
            o.require(certify(base).cut == static_cast<double>(base.graph.size()), tag + "base cut = m");

            std::vector<std::pair<Vertex, Vertex>> slots;
            for (std::size_t b = 0; b < k; ++b) {
                for (std::size_t x = 0; x < r; ++x) {
                    for (std::size_t y = x + 1; y < r; ++y) slots.emplace_back(b * r + x, b * r + y);
                }
            }
            for (std::size_t adds = 1; adds <= 3; ++adds) {
                std::shuffle(slots.begin(), slots.end(), rng);
                const std::vector<std::pair<Vertex, Vertex>> added(slots.begin(), slots.begin() + static_cast<long>(adds));
                const auto grown = gen_bo2_family(k, r, added);
                check(grown, "+" + std::to_string(adds));
                for (std::size_t dels = 1; dels <= adds; ++dels) {
                    const std::vector<std::pair<Vertex, Vertex>> removed(added.begin(), added.begin() + static_cast<long>(dels));
                    check(remove_intra_block_edges(grown, removed), "+" + std::to_string(adds) + "-" + std::to_string(dels));
                }
            }
        }
    }
    if (o.pass) o.detail << certificates << " certificates, mu_1 = n throughout";
    return o;
}

// 4 -------------------------------------------------------------------------

std::vector<WeightedGraph> generator_corpus() {
    std::vector<WeightedGraph> out;
    for (std::size_t n = 2; n <= 8; ++n) {
        out.push_back(path_graph(n));
        out.push_back(complete_graph(n));
        if (n >= 3) out.push_back(cycle_graph(n));
        if (n >= 4 && n % 2 == 0) out.push_back(join(perfect_matching(n - 2), empty_graph(2)));
    }
    // Complete multipartite graphs on <= 8 vertices with >= 2 parts.
    std::function<void(std::vector<std::size_t>&, std::size_t, std::size_t)> parts =
        [&](std::vector<std::size_t>& sizes, std::size_t left, std::size_t max_part) {
            if (sizes.size() >= 2) out.push_back(complete_multipartite(sizes));
            for (std::size_t s = std::min(left, max_part); s >= 1; --s) {
                sizes.push_back(s);
                parts(sizes, left - s, s);
                sizes.pop_back();
            }
        };
    std::vector<std::size_t> sizes;
    parts(sizes, 8, 8);
    for (std::size_t n = 3; n <= 7; ++n) {
        out.push_back(complement(cycle_graph(n)));
        out.push_back(join(cycle_graph(n), empty_graph(8 - n)));
    }
    out.push_back(gen_bo2_family(3, 2).graph);
    const std::vector<std::pair<Vertex, Vertex>> intra{{0, 1}, {2, 3}};
    out.push_back(gen_bo2_family(4, 2, intra).graph);
    // Every labelled graph on 2..5 vertices.
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        }
        for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t b = 0; b < pairs.size(); ++b) {
                if (mask >> b & 1) edges.push_back({pairs[b].first, pairs[b].second, 1.0});
            }
            out.emplace_back(n, std::move(edges));
        }
    }
    std::vector<WeightedGraph> connected;
    for (auto& g : out) {
        if (g.order() <= 8 && oracle::is_connected(g)) connected.push_back(std::move(g));
    }
    return connected;
}

Outcome criterion_soundness() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    auto graphs = generator_corpus();
    const std::size_t corpus = graphs.size();
    std::mt19937_64 rng(4004);
    const double probs[] = {0.3, 0.5, 0.8};
    std::uniform_int_distribution<std::size_t> order(4, 8);
    for (int i = 0; i < 500; ++i) graphs.push_back(oracle::random_graph(rng, order(rng), probs[i % 3]));

    std::size_t checks = 0;
    std::size_t brute_checked = 0;
    std::size_t violations = 0;
    double worst_gap = 1e300;
    for (const auto& g : graphs) {
        for (std::size_t k : {2, 3, 4}) {
            if (g.order() < k) continue;
            const auto exact = exact_max_kcut(g, k).value;
            if (checks % 10 == 0) {
                o.require(exact == oracle::brute_max_kcut(g, k), "exact oracle disagrees with brute force");
                ++brute_checked;
            }
            const auto cmp = compare_bounds(g, k);
            const double best = std::min({cmp.bo1.bound, cmp.bo2.bound, cmp.bo3.bound});
            ++checks;
            worst_gap = std::min(worst_gap, best - exact);
            if (exact > best + kSoundnessTol) {
                if (violations == 0) {
                    o.require(false, "n=" + std::to_string(g.order()) + " k=" + std::to_string(k) + " mc=" +
                                         fmt(exact) + " > bound " + fmt(best));
                }
                ++violations;
            }
        }
    }
    const double secs = seconds_since(t0);
    o.require(secs < 120.0, "runtime " + fmt(secs) + " s");
    o.detail << (o.pass ? "" : "; ") << corpus << " corpus + 500 random graphs, " << checks << " (graph,k) checks ("
             << brute_checked << " cross-checked by brute force), " << violations << " violations, min slack " << fmt(worst_gap) << ", " << fmt(secs) << " s";
    return o;
}

// 5 -------------------------------------------------------------------------

Outcome criterion_reduction() {
    Outcome o;
    std::mt19937_64 rng(5005);
    std::uniform_int_distribution<std::size_t> order(4, 16);
    std::uniform_real_distribution<double> prob(0.1, 0.9);
    std::bernoulli_distribution weighted(0.5);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto n = order(rng);
        const auto g = oracle::random_graph(rng, n, prob(rng), weighted(rng));
        const std::size_t k = 2 + static_cast<std::size_t>(i) % 3;
        const auto a = adjacency(g);
        const auto d = degree_matrix(g);
        const auto zero = SymmetricMatrix(n);
        const std::pair<const SymmetricMatrix*, BoundKind> cases[] = {
            {&zero, BoundKind::Adjacency}, {&d, BoundKind::Laplacian}, {nullptr, BoundKind::Signless}};
        const auto neg_d = -d;
        for (auto [b, kind] : cases) {
            const auto gb = general_bound(a, b ? *b : neg_d, k).cut_upper;
            const auto bo = compute_bound(g, k, kind).bound;
            const double rel = std::abs(gb - bo) / std::max(1.0, std::abs(bo));
            worst = std::max(worst, rel);
            o.require(rel <= kReductionRelTol, "graph " + std::to_string(i) + " " + std::string(to_string(kind)) +
                                                   ": " + fmt(gb) + " vs " + fmt(bo));
        }
    }
    if (o.pass) o.detail << "100 graphs, worst relative gap " << worst;
    return o;
}

// 6 -------------------------------------------------------------------------

Outcome criterion_charax() {
    Outcome o;
    std::mt19937_64 rng(6006);
    const MatrixKind kinds[] = {MatrixKind::Adjacency, MatrixKind::SignlessLaplacian, MatrixKind::Laplacian};
    std::size_t triples = 0;
    std::size_t positive[3] = {0, 0, 0};
    std::size_t disagreements = 0;
    for (int i = 0; i < 400; ++i) {
        const auto t = construct::draw(rng);
        const PartitionVector pv(t.partition, t.c1, t.c2);
        const auto x = pv.materialize();
        ++triples;
        for (int kk = 0; kk < 3; ++kk) {
            const auto m = graph_matrix(t.graph, kinds[kk]);
            const auto verdict = check_tripartition(t.graph, pv, kinds[kk]);
            // Numerical side: the best eigenvalue candidate for x is its
            // Rayleigh quotient.
            const auto mx = m.apply(x);
            double num = 0.0, den = 0.0;
            for (std::size_t v = 0; v < x.size(); ++v) {
                num += x[v] * mx[v];
                den += x[v] * x[v];
            }
            const bool numeric = verify_eigenpair(m, num / den, x, kCharaxTol);
            bool agree = verdict.is_eigenvector == numeric;
            if (agree && verdict.is_eigenvector) agree = verify_eigenpair(m, *verdict.eigenvalue, x, kCharaxTol);
            if (!agree) {
                ++disagreements;
                o.require(false, "triple " + std::to_string(i) + " kind " + std::string(to_string(kinds[kk])));
            }
            if (verdict.is_eigenvector) ++positive[kk];
        }
    }
    o.require(triples >= 200, "too few triples");
    o.detail << (o.pass ? "" : "; ") << triples << " triples per kind, eigenvectors A/Q/L = " << positive[0] << "/"
             << positive[1] << "/" << positive[2] << ", " << disagreements << " disagreements";
    return o;
}

// 7 -------------------------------------------------------------------------

Outcome criterion_named() {
    Outcome o;
    const auto pet = petersen_graph();
    const auto pet_exact = exact_max_kcut(pet, 2).value;
    o.require(pet_exact == 12.0, "mc2(Petersen)=" + fmt(pet_exact));
    o.require(oracle::brute_max_kcut(pet, 2) == 12.0, "oracle mc2(Petersen)");
    const auto pet_bo1 = bound_bo1(pet, 2);
    o.require(std::abs(pet_bo1.bound - 12.5) <= kNamedRealTol, "bo1(Petersen)=" + fmt(pet_bo1.bound));
    o.require(pet_bo1.integer_bound && *pet_bo1.integer_bound == 12, "integer bo1(Petersen)");

    const auto c5 = cycle_graph(5);
    o.require(exact_max_kcut(c5, 2).value == 4.0, "mc2(C5)");
    o.require(oracle::brute_max_kcut(c5, 2) == 4.0, "oracle mc2(C5)");
    // (1/2)(5 - 5 lambda_5 / 2) with lambda_5 = 2 cos(4 pi / 5).
    const double c5_expected = 0.5 * (5.0 - 2.5 * 2.0 * std::cos(4.0 * M_PI / 5.0));
    const auto c5_bo1 = bound_bo1(c5, 2).bound;
    o.require(std::abs(c5_bo1 - 4.5225) <= kNamedRealTol, "bo1(C5)=" + fmt(c5_bo1));
    o.require(std::abs(c5_bo1 - c5_expected) <= 1e-12, "bo1(C5) closed form");

    const auto k4 = complete_graph(4);
    o.require(exact_max_kcut(k4, 2).value == 4.0, "mc2(K4)");
    o.require(oracle::brute_max_kcut(k4, 2) == 4.0, "oracle mc2(K4)");
    const auto cmp = compare_bounds(k4, 2);
    for (const auto* r : {&cmp.bo1, &cmp.bo2, &cmp.bo3}) {
        o.require(std::abs(r->bound - 4.0) <= kNamedRealTol, std::string(to_string(r->kind)) + "(K4)=" + fmt(r->bound));
    }
    if (o.pass) o.detail << "Petersen 12 / 12.5, C5 4 / " << fmt(c5_bo1) << ", K4 4 / 4 / 4 / 4";
    return o;
}

// 8 -------------------------------------------------------------------------

SymmetricMatrix draw_matrix(std::mt19937_64& rng, std::size_t n, int flavour) {
    std::normal_distribution<double> z(0.0, 1.0);
    std::vector<double> e(n * n, 0.0);
    switch (flavour) {
        case 0:
            for (auto& x : e) x = z(rng);
            break;
        case 1:
            return adjacency(oracle::random_graph(rng, n, 0.5));
        case 2:
            return laplacian(oracle::random_graph(rng, n, 0.4, true));
        case 3: {
            // Rank one plus a small diagonal: heavily repeated eigenvalues.
            std::vector<double> u(n);
            for (auto& x : u) x = z(rng);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) e[i * n + j] = u[i] * u[j] + (i == j ? 0.5 : 0.0);
            }
            break;
        }
        case 4:
            for (std::size_t i = 0; i < n; ++i) e[i * n + i] = std::floor(z(rng) * 3);
            break;
        default:
            for (auto& x : e) x = 50.0 * z(rng);
    }
    return SymmetricMatrix(n, e);
}

Outcome criterion_eigensolver() {
    Outcome o;
    std::mt19937_64 rng(8008);
    std::uniform_int_distribution<std::size_t> order(1, 40);
    double worst_rec = 0.0, worst_orth = 0.0, worst_weyl = 0.0;
    for (int t = 0; t < 200; ++t) {
        const auto n = order(rng);
        const auto m = draw_matrix(rng, n, t % 6);
        const auto s = eigendecompose(m);
        const auto em = oracle::to_eigen(m);
        const auto nn = static_cast<Eigen::Index>(n);
        const Eigen::Map<const Eigen::MatrixXd> v(s.eigenvectors.data(), nn, nn);
        const Eigen::Map<const Eigen::VectorXd> lam(s.eigenvalues.data(), nn);
        const double rec = (em - v * lam.asDiagonal() * v.transpose()).norm();
        const double orth = (v.transpose() * v - Eigen::MatrixXd::Identity(nn, nn)).cwiseAbs().maxCoeff();
        worst_rec = std::max(worst_rec, rec / std::max(em.norm(), 1e-300));
        worst_orth = std::max(worst_orth, orth);
        o.require(rec <= kReconstructionRelTol * em.norm(), "matrix " + std::to_string(t) + " reconstruction " + fmt(rec));
        o.require(orth <= kOrthonormalityTol, "matrix " + std::to_string(t) + " orthonormality " + fmt(orth));

        // Weyl against a second matrix of the same order, every applicable (i, j).
        const auto b = draw_matrix(rng, n, (t + 3) % 6);
        const auto sb = eigendecompose(b);
        const auto sab = eigendecompose(m + b);
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= n; ++j) {
                const double lhs = s.lambda(i) + sb.lambda(j);
                if (i + j >= n + 1) {
                    const double excess = lhs - sab.lambda(i + j - n);
                    worst_weyl = std::max(worst_weyl, excess);
                    o.require(excess <= kWeylTol, "Weyl upper " + std::to_string(t));
                }
                if (i + j <= n + 1) {
                    const double excess = sab.lambda(i + j - 1) - lhs;
                    worst_weyl = std::max(worst_weyl, excess);
                    o.require(excess <= kWeylTol, "Weyl lower " + std::to_string(t));
                }
            }
        }
        // The library's own check must agree on a corner pair.
        o.require(weyl_check(m, b, 1, n).holds, "weyl_check " + std::to_string(t));
    }
    o.detail << (o.pass ? "" : "; ") << "200 matrices, worst reconstruction " << worst_rec << " rel, orthonormality "
             << worst_orth << ", Weyl excess " << worst_weyl;
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "bo1 family reproduction", criterion_bo1},
        {2, "bo3 family reproduction", criterion_bo3},
        {3, "bo2 family and intra-block edits", criterion_bo2},
        {4, "bound soundness sweep", criterion_soundness},
        {5, "reduction identities", criterion_reduction},
        {6, "characterization equivalence", criterion_charax},
        {7, "named values", criterion_named},
        {8, "eigensolver quality", criterion_eigensolver},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.str().c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
