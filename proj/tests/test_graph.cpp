#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "evenpair/generators.hpp"
#include "evenpair/graph.hpp"

using namespace evenpair;

namespace {

Graph cycle(int n)
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete(int n)
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("neighbors")
{
    CHECK(neighbors(cycle(4), 0) == VertexSet{1, 3});
    CHECK(neighbors(Graph::from_edges(1, {}), 0) == VertexSet{});
    Graph c6bar = complement(cycle(6));
    for (VertexId v : c6bar.vertices())
        CHECK(neighbors(c6bar, v).size() == 3); // the prism is 3-regular
    CHECK_THROWS_AS(neighbors(cycle(4), 9), GraphError);
}

TEST_CASE("complement")
{
    Graph co5 = complement(cycle(5));
    CHECK(co5.edge_count() == 5); // C5 is self-complementary
    for (VertexId v : co5.vertices())
        CHECK(co5.degree(v) == 2);
    CHECK(complement(complete(4)).edge_count() == 0);
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        Graph g = random_gnp(9, 0.4, seed);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("induced_subgraph")
{
    Graph g = induced_subgraph(cycle(6), VertexSet{0, 1, 2});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}});

    Graph c6 = cycle(6);
    CHECK(induced_subgraph(c6, VertexSet(c6.vertices())) == c6);

    Graph c6bar = complement(c6);
    Graph tri = induced_subgraph(c6bar, VertexSet{0, 2, 4});
    CHECK(tri.edge_count() == 3);
    CHECK(is_clique(tri, VertexSet{0, 2, 4}));

    CHECK_THROWS_AS(induced_subgraph(c6, VertexSet{0, 99}), GraphError);
}

TEST_CASE("contract")
{
    auto [p3, m] = contract(cycle(4), 0, 2);
    CHECK(m == 4);
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.adjacent(1, 4));
    CHECK(p3.adjacent(3, 4));
    CHECK(!p3.adjacent(1, 3));

    auto [k1, m2] = contract(Graph::from_edges(2, {}), 0, 1);
    CHECK(k1.vertex_count() == 1);
    CHECK(m2 == 2);

    // apply the definition by hand: merged vertex sees N(1) ∪ N(5) = {0,2,4}
    auto [g, m3] = contract(cycle(6), 1, 5);
    CHECK(m3 == 6);
    CHECK(g.edges()
        == std::vector<std::pair<VertexId, VertexId>>{{0, 6}, {2, 3}, {2, 6}, {3, 4}, {4, 6}});

    CHECK_THROWS_AS(contract(cycle(4), 0, 1), GraphError); // adjacent
    CHECK_THROWS_AS(contract(cycle(4), 0, 9), GraphError); // unknown
    CHECK_THROWS_AS(contract(cycle(4), 0, 0), GraphError);

    for (std::uint64_t seed : {7ull, 8ull}) {
        Graph r = random_gnp(10, 0.3, seed);
        for (VertexId x : r.vertices())
            for (VertexId y : r.vertices()) {
                if (x >= y || r.adjacent(x, y))
                    continue;
                auto [c, fresh] = contract(r, x, y);
                CHECK(c.vertex_count() == r.vertex_count() - 1);
                CHECK(!c.adjacent(fresh, fresh));
                CHECK(neighbors(c, fresh)
                    == set_difference(set_union(neighbors(r, x), neighbors(r, y)),
                        VertexSet{x, y}));
            }
    }
}

TEST_CASE("is_clique")
{
    CHECK(is_clique(complete(4), VertexSet{0, 1, 2, 3}));
    CHECK(is_clique(cycle(4), VertexSet{0, 2}) == false);
    CHECK(is_clique(cycle(4), VertexSet{}));          // empty set counts as a clique
    CHECK(is_clique(cycle(4), VertexSet{3}));
}

TEST_CASE("is_co_connected")
{
    CHECK(is_co_connected(complete(3), VertexSet{0, 1, 2}) == false);
    CHECK(is_co_connected(Graph::from_edges(3, {}), VertexSet{0, 1, 2}));
    CHECK(is_co_connected(cycle(6), VertexSet{0}));
    CHECK_THROWS_AS(is_co_connected(cycle(6), VertexSet{}), GraphError);
}

TEST_CASE("complete_set")
{
    CHECK(complete_set(cycle(6), VertexSet{0}) == VertexSet{1, 5});
    CHECK(complete_set(complete(4), VertexSet{0}) == VertexSet{1, 2, 3});
    CHECK(complete_set(cycle(6), VertexSet{0, 3}) == VertexSet{});
    for (std::uint64_t seed : {5ull, 6ull}) {
        Graph g = random_gnp(9, 0.5, seed);
        for (VertexId a : g.vertices())
            for (VertexId b : g.vertices()) {
                if (a >= b)
                    continue;
                VertexSet t{a, b};
                CHECK(set_intersection(complete_set(g, t), t).empty());
            }
    }
}

TEST_CASE("is_simplicial")
{
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(is_simplicial(p3, 0));
    CHECK(is_simplicial(p3, 2));
    CHECK(!is_simplicial(p3, 1));
    Graph k5 = complete(5);
    for (VertexId v : k5.vertices())
        CHECK(is_simplicial(k5, v));
    Graph c5 = cycle(5);
    for (VertexId v : c5.vertices())
        CHECK(!is_simplicial(c5, v));
}

TEST_CASE("is_disjoint_union_of_cliques")
{
    Graph k3k1 = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(is_disjoint_union_of_cliques(k3k1));
    CHECK(!is_disjoint_union_of_cliques(Graph::from_edges(3, {{0, 1}, {1, 2}})));
    CHECK(is_disjoint_union_of_cliques(Graph::from_edges(0, {})));

    // equivalent to every vertex being simplicial
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = random_gnp(8, 0.35, seed);
        bool all_simplicial = true;
        for (VertexId v : g.vertices())
            all_simplicial = all_simplicial && is_simplicial(g, v);
        CHECK(is_disjoint_union_of_cliques(g) == all_simplicial);
    }
}

TEST_CASE("shortest_path")
{
    auto p = shortest_path(cycle(6), 0, 3);
    REQUIRE(p.has_value());
    CHECK(p->verts == std::vector<VertexId>{0, 1, 2, 3}); // ascending-id tie-break

    auto q = shortest_path(cycle(6), 1, 5, VertexSet{0});
    REQUIRE(q.has_value());
    CHECK(q->verts == std::vector<VertexId>{1, 2, 3, 4, 5});

    CHECK(!shortest_path(Graph::from_edges(2, {}), 0, 1).has_value());
    CHECK_THROWS_AS(shortest_path(cycle(6), 0, 3, VertexSet{0}), GraphError);

    // any shortest path is chordless
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_gnp(10, 0.3, seed);
        for (VertexId s : g.vertices())
            for (VertexId t : g.vertices()) {
                if (s >= t)
                    continue;
                if (auto sp = shortest_path(g, s, t))
                    CHECK(is_chordless_path(g, *sp));
            }
    }
}

TEST_CASE("path predicates")
{
    Graph c6 = cycle(6);
    CHECK(is_path(c6, Path({0, 1, 2})));
    CHECK(!is_path(c6, Path({0, 2})));
    CHECK(!is_path(c6, Path({0, 1, 0})));
    CHECK(is_chordless_path(c6, Path({0, 1, 2, 3})));
    CHECK(!is_chordless_path(c6, Path({5, 0, 1, 2, 3, 4}))); // 5-4 closes the cycle
    CHECK(is_chordless_path(c6, Path({4})));
}

TEST_CASE("vertex set algebra")
{
    VertexSet a{3, 1, 1, 2};
    CHECK(a.ids() == std::vector<VertexId>{1, 2, 3});
    CHECK(set_union(a, VertexSet{4}) == VertexSet{1, 2, 3, 4});
    CHECK(set_intersection(a, VertexSet{2, 3, 9}) == VertexSet{2, 3});
    CHECK(set_difference(a, VertexSet{2}) == VertexSet{1, 3});
    a.remove(2);
    CHECK(!a.contains(2));
}

TEST_CASE("graph construction errors")
{
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), GraphError);
    CHECK_THROWS_AS(Graph::from_vertices({1, 1}, {}), GraphError);
}
