#include "doctest.h"

#include <random>

#include "mkc/errors.hpp"
#include "mkc/graph.hpp"
#include "oracles.hpp"

using namespace mkc;

TEST_CASE("construction rejects bad edges") {
    CHECK_THROWS_AS(WeightedGraph(3, {{0, 3, 1.0}}), IndexError);
    CHECK_THROWS_AS(WeightedGraph(3, {{0, 1, 1.0}, {1, 0, 2.0}}), ContractError);
    CHECK_THROWS_AS(WeightedGraph(3, {{1, 1, 1.0}, {1, 1, 1.0}}), ContractError);
}

TEST_CASE("edges are normalised and loops counted once") {
    const WeightedGraph g(3, {{2, 0, 2.0}, {1, 1, 3.0}, {0, 1, 1.0}});
    REQUIRE(g.edges().size() == 3);
    CHECK(g.edges()[0] == Edge{0, 1, 1.0});
    CHECK(g.edges()[1] == Edge{0, 2, 2.0});
    CHECK(g.edges()[2] == Edge{1, 1, 3.0});
    CHECK(g.size() == 2);
    CHECK(g.has_loops());
    CHECK_FALSE(g.is_simple());
    CHECK(degree(g, 1) == 4.0);
    CHECK(degree(g, 0) == 3.0);
    CHECK(g.adjacency_mass() == 2 * 3.0 + 3.0);
    CHECK(g.weight(2, 0) == 2.0);
    CHECK_FALSE(g.weight(1, 2).has_value());
}

TEST_CASE("degree queries") {
    const auto g = complete_graph(5);
    const std::vector<Vertex> s{0, 1};
    const std::vector<Vertex> t{2, 3};
    CHECK(degree_in(g, 0, s) == 1.0);
    CHECK(degree_between(g, 0, s, t) == 2.0);
    CHECK_THROWS_AS(degree_between(g, 4, s, t), ContractError);
    CHECK_THROWS_AS(degree_between(g, 0, s, s), ContractError);
}

TEST_CASE("block degrees sum to the degree") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = oracle::random_graph(rng, 7, 0.5, true, true);
        const auto p = oracle::random_partition(rng, 7, 3);
        for (Vertex v = 0; v < 7; ++v) {
            const auto row = block_degrees(g, p, v);
            double s = 0.0;
            for (double x : row) s += x;
            CHECK(s == doctest::Approx(degree(g, v)));
        }
    }
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(VertexPartition(3, {{0, 1}, {1, 2}}), ContractError);
    CHECK_THROWS_AS(VertexPartition(3, {{0, 1}}), ContractError);
    CHECK_THROWS_AS(VertexPartition(3, {{0, 1}, {5}}), IndexError);
    const VertexPartition p(4, {{3, 0}, {}, {2, 1}});
    CHECK(p.block_count() == 3);
    CHECK(p.has_empty_block());
    CHECK(p.block_of(1) == 2);
    CHECK(p.block(0)[0] == 0);
    const std::vector<std::size_t> labels{0, 2, 2, 0};
    CHECK(VertexPartition::from_labels(labels, 3) == p);
}

TEST_CASE("complement, union and join") {
    const auto c5 = cycle_graph(5);
    const auto cc = complement(c5);
    CHECK(cc.size() == 5);
    CHECK(complement(cc) == c5);
    CHECK_THROWS_AS(complement(WeightedGraph(2, {{0, 1, 2.0}})), UnsupportedInput);

    const auto u = disjoint_union(complete_graph(3), path_graph(2));
    CHECK(u.order() == 5);
    CHECK(u.size() == 4);
    CHECK(u.has_edge(3, 4));

    const auto j = join(empty_graph(2), empty_graph(3));
    const std::vector<std::size_t> sizes{2, 3};
    CHECK(j == complete_multipartite(sizes));
}

TEST_CASE("edge deletion and addition") {
    const auto k4 = complete_graph(4);
    const std::vector<std::pair<Vertex, Vertex>> gone{{1, 0}};
    const auto g = delete_edges(k4, gone);
    CHECK(g.size() == 5);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_THROWS_AS(delete_edges(g, gone), ContractError);
    const std::vector<Edge> back{{0, 1, 1.0}};
    CHECK(add_edges(g, back) == k4);
    CHECK_THROWS_AS(add_edges(k4, back), ContractError);
}

TEST_CASE("generators") {
    CHECK(complete_graph(6).size() == 15);
    CHECK(cycle_graph(7).size() == 7);
    CHECK_THROWS_AS(cycle_graph(2), ParameterError);
    CHECK(path_graph(6).size() == 5);
    CHECK(perfect_matching(6).size() == 3);
    const auto pet = petersen_graph();
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(degree(pet, v) == 3.0);
    const std::vector<std::size_t> sizes{2, 3, 1};
    CHECK(complete_multipartite(sizes).size() == 2 * 3 + 2 * 1 + 3 * 1);
    const auto p = consecutive_partition(sizes);
    CHECK(p.block(1).size() == 3);
    CHECK(p.block_of(5) == 2);
}
