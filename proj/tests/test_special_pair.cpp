#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "evenpair/generators.hpp"
#include "evenpair/oracles.hpp"
#include "evenpair/special_pair.hpp"

using namespace evenpair;

namespace {

Graph cyc(int n) { return named_instance("c" + std::to_string(n)); }

// C6 pattern with a second attachment vertex and a pendant route: vertex 0
// is the interesting set, its neighborhood {1,2,3} the common neighborhood,
// 1-4-5-6-3 the shortest outer path, and the route 2-7-8-9-3 realizes the
// precedence 1 < 2 on the attachment clique {1,2}.
Graph order_instance()
{
    return Graph::from_edges(10,
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {4, 5}, {5, 6}, {6, 3}, {2, 4}, {2, 7},
            {7, 8}, {8, 9}, {9, 3}});
}

} // namespace

TEST_CASE("maximal_interesting_set")
{
    InterestingSetContext c6 = maximal_interesting_set(cyc(6));
    CHECK(c6.t == VertexSet{0});
    CHECK(c6.c == VertexSet{1, 5});
    CHECK(c6.provenance == std::vector<VertexId>{0});

    InterestingSetContext p3 = maximal_interesting_set(named_instance("p3"));
    CHECK(p3.t == VertexSet{1});
    CHECK(p3.c == VertexSet{0, 2});

    Graph k3k2 = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    CHECK_THROWS_AS(maximal_interesting_set(k3k2), GraphError);

    // C4 absorbs the opposite corner
    InterestingSetContext c4 = maximal_interesting_set(cyc(4));
    CHECK(c4.t == VertexSet{0, 2});
    CHECK(c4.c == VertexSet{1, 3});

    // invariants on random non-trivial graphs
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_gnp(9, 0.35, seed);
        if (is_disjoint_union_of_cliques(g))
            continue;
        InterestingSetContext ctx = maximal_interesting_set(g);
        CHECK(is_co_connected(g, ctx.t));
        CHECK(!is_clique(g, ctx.c));
        CHECK(ctx.c == complete_set(g, ctx.t));
        for (VertexId z : g.vertices()) {
            if (ctx.t.contains(z) || ctx.c.contains(z))
                continue;
            CHECK(is_clique(g, set_intersection(neighbors(g, z), ctx.c)));
        }
    }
}

TEST_CASE("shortest_outer_path")
{
    InterestingSetContext c6 = maximal_interesting_set(cyc(6));
    auto z = shortest_outer_path(cyc(6), c6);
    REQUIRE(z.has_value());
    CHECK(z->verts == std::vector<VertexId>{1, 2, 3, 4, 5});

    InterestingSetContext p3 = maximal_interesting_set(named_instance("p3"));
    CHECK(!shortest_outer_path(named_instance("p3"), p3).has_value());

    // a caller-supplied non-maximal context must be reported, not used: in
    // C4 with t = {0} the path 1-2-3 is an outer path of length 2
    InterestingSetContext stale;
    stale.t = VertexSet{0};
    stale.c = VertexSet{1, 3};
    CHECK_THROWS_AS(shortest_outer_path(cyc(4), stale), NotInClassAError);

    InterestingSetContext ord = maximal_interesting_set(order_instance());
    CHECK(ord.t == VertexSet{0});
    CHECK(ord.c == VertexSet{1, 2, 3});
    auto zo = shortest_outer_path(order_instance(), ord);
    REQUIRE(zo.has_value());
    // pairs (1,3) and (2,3) tie at length 4; the smaller pair wins
    CHECK(zo->verts == std::vector<VertexId>{1, 4, 5, 6, 3});
}

TEST_CASE("attachment_sets")
{
    Graph c6 = cyc(6);
    InterestingSetContext ctx = maximal_interesting_set(c6);
    auto z = shortest_outer_path(c6, ctx);
    REQUIRE(z.has_value());
    OuterPathContext opc = attachment_sets(c6, ctx, *z);
    CHECK(opc.a_set == VertexSet{1});
    CHECK(opc.b_set == VertexSet{5});
    CHECK(opc.z_interior == VertexSet{2, 3, 4});

    Graph ord = order_instance();
    InterestingSetContext octx = maximal_interesting_set(ord);
    auto oz = shortest_outer_path(ord, octx);
    REQUIRE(oz.has_value());
    OuterPathContext oopc = attachment_sets(ord, octx, *oz);
    CHECK(oopc.a_set == VertexSet{1, 2});
    CHECK(oopc.b_set == VertexSet{3});

    // the path endpoints always land in their own attachment sets
    CHECK(oopc.a_set.contains(oz->front()));
    CHECK(oopc.b_set.contains(oz->back()));

    // a common-neighborhood vertex seeing only the middle of the outer path
    // joins neither side (it is complete to t and both attachment sets)
    Graph mid = Graph::from_edges(7,
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 1}, {6, 5}, {6, 3}});
    REQUIRE(!class_a_witness(mid).has_value());
    InterestingSetContext mctx = maximal_interesting_set(mid);
    CHECK(mctx.c == VertexSet{1, 5, 6});
    auto mz = shortest_outer_path(mid, mctx);
    REQUIRE(mz.has_value());
    OuterPathContext mopc = attachment_sets(mid, mctx, *mz);
    CHECK(mopc.a_set == VertexSet{1});
    CHECK(mopc.b_set == VertexSet{5});
    CHECK(!mopc.a_set.contains(6));
    CHECK(!mopc.b_set.contains(6));
}

TEST_CASE("precedence_order")
{
    Graph c6 = cyc(6);
    InterestingSetContext ctx = maximal_interesting_set(c6);
    auto z = shortest_outer_path(c6, ctx);
    OuterPathContext opc = attachment_sets(c6, ctx, *z);
    PrecedenceOrder oa = precedence_order(c6, ctx, opc, Side::A);
    CHECK(oa.pairs.empty()); // singleton ground set

    Graph ord = order_instance();
    InterestingSetContext octx = maximal_interesting_set(ord);
    auto oz = shortest_outer_path(ord, octx);
    OuterPathContext oopc = attachment_sets(ord, octx, *oz);
    PrecedenceOrder ooa = precedence_order(ord, octx, oopc, Side::A);
    CHECK(ooa.less(1, 2)); // route 2-7-8-9-3 avoids N(1)
    CHECK(!ooa.less(2, 1));
    for (VertexId u : ooa.ground)
        CHECK(!ooa.less(u, u));
    PrecedenceOrder oob = precedence_order(ord, octx, oopc, Side::B);
    CHECK(oob.pairs.empty());
}

TEST_CASE("maximal_element")
{
    PrecedenceOrder single;
    single.ground = VertexSet{1};
    CHECK(maximal_element(single) == 1);

    PrecedenceOrder two;
    two.ground = VertexSet{4, 7};
    two.pairs.insert({4, 7});
    CHECK(maximal_element(two) == 7);

    PrecedenceOrder chain;
    chain.ground = VertexSet{1, 2, 3};
    chain.pairs = {{1, 2}, {2, 3}, {1, 3}};
    CHECK(maximal_element(chain) == 3);
}

TEST_CASE("find_special_even_pair on the worked examples")
{
    EvenPairResult p3 = find_special_even_pair(named_instance("p3"));
    CHECK(p3.pair == std::make_pair(VertexId{0}, VertexId{2}));
    CHECK(p3.top_case == PairCase::Case1Recursion);
    CHECK(p3.recursion_depth == 1);
    CHECK(p3.levels.back().kase == PairCase::DisjointCliques);

    EvenPairResult c6 = find_special_even_pair(cyc(6));
    CHECK(c6.pair == std::make_pair(VertexId{1}, VertexId{5}));
    CHECK(c6.top_case == PairCase::Case2OuterPath);
    CHECK(is_special_even_pair(cyc(6), c6.pair.first, c6.pair.second));

    CHECK_THROWS_AS(find_special_even_pair(named_instance("k4")), GraphError);

    CHECK(!class_a_witness(order_instance()).has_value());
    EvenPairResult ord = find_special_even_pair(order_instance());
    CHECK(ord.pair == std::make_pair(VertexId{2}, VertexId{3}));
    CHECK(is_special_even_pair(order_instance(), 2, 3));

    Graph twok2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    EvenPairResult dc = find_special_even_pair(twok2);
    CHECK(dc.pair == std::make_pair(VertexId{0}, VertexId{2}));
    CHECK(dc.top_case == PairCase::DisjointCliques);
}

TEST_CASE("three-element attachment clique with a shared escape route")
{
    // 0 is the interesting set; its neighborhood {1,2,3,4} splits into the
    // attachment clique {1,2,3} on z_1 = 5 and {4} on z_3 = 7. The route
    // 8-9-10 is reachable from 2 and 3 but not from 1 without touching
    // N(1), so exactly 1 < 2 and 1 < 3 hold.
    Graph g = Graph::from_edges(11,
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {1, 5}, {2, 5}, {3, 5},
            {5, 6}, {6, 7}, {7, 4}, {2, 8}, {3, 8}, {8, 9}, {9, 10}, {10, 4}});
    REQUIRE(!class_a_witness(g).has_value());

    EvenPairResult r = find_special_even_pair(g);
    CHECK(r.pair == std::make_pair(VertexId{2}, VertexId{4}));
    CHECK(r.top_case == PairCase::Case2OuterPath);
    REQUIRE(r.levels.front().outer.has_value());
    CHECK(r.levels.front().outer->a_set == VertexSet{1, 2, 3});
    CHECK(r.levels.front().outer->b_set == VertexSet{4});
    REQUIRE(r.levels.front().order_a.has_value());
    const PrecedenceOrder& oa = *r.levels.front().order_a;
    CHECK(oa.pairs == std::set<std::pair<VertexId, VertexId>>{{1, 2}, {1, 3}});
    CHECK(is_special_even_pair(g, 2, 4));
}

TEST_CASE("order antisymmetry violation is reported, not silently used")
{
    // extending the previous instance with a second attachment vertex on
    // the far side creates a prism; the precedence relation degenerates and
    // the search must fail fast instead of returning a bogus pair
    Graph g = Graph::from_edges(15,
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {1, 5}, {2, 5}, {3, 5},
            {5, 6}, {6, 7}, {7, 4}, {2, 8}, {3, 8}, {8, 9}, {9, 10}, {10, 4}, {0, 11},
            {7, 11}, {4, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 1}});
    CHECK(class_a_witness(g, OracleLimits::with_max_n(15)).has_value());
    CHECK_THROWS_AS(find_special_even_pair(g), NotInClassAError);
}

TEST_CASE("determinism")
{
    Graph ord = order_instance();
    EvenPairResult a = find_special_even_pair(ord);
    EvenPairResult b = find_special_even_pair(ord);
    CHECK(a.pair == b.pair);
    CHECK(a.levels.size() == b.levels.size());
    for (std::size_t i = 0; i < a.levels.size(); ++i) {
        CHECK(a.levels[i].kase == b.levels[i].kase);
        if (a.levels[i].outer)
            CHECK(a.levels[i].outer->z_path == b.levels[i].outer->z_path);
    }
}

TEST_CASE("soundness on sampled class members")
{
    int checked = 0;
    for (int n : {5, 6, 7, 8, 9, 10}) {
        for (std::uint64_t seed : {21ull, 22ull, 23ull}) {
            auto g = random_class_a(n, 0.3, seed, 500);
            if (!g || is_clique(*g, VertexSet(g->vertices())))
                continue;
            EvenPairResult r = find_special_even_pair(*g);
            CHECK(is_special_even_pair(*g, r.pair.first, r.pair.second));

            // pair lies in the top-level common neighborhood when one exists
            if (r.levels.front().interesting) {
                const VertexSet& c = r.levels.front().interesting->c;
                CHECK(c.contains(r.pair.first));
                CHECK(c.contains(r.pair.second));
            }
            ++checked;
        }
    }
    CHECK(checked >= 10);
}

TEST_CASE("bipartite sweep up to the enumeration bound")
{
    // bipartite inputs are in class by construction and triangle-free, so
    // the snake search is vacuous and the even-pair oracle is the whole check
    int case2 = 0;
    for (int n : {12, 16, 20})
        for (double p : {0.15, 0.3, 0.5})
            for (std::uint64_t seed = 0; seed < 6; ++seed) {
                Graph g = random_bipartite(n, p, 500 * n + seed + static_cast<int>(p * 100));
                if (is_clique(g, VertexSet(g.vertices())))
                    continue;
                EvenPairResult r = find_special_even_pair(g);
                CHECK(is_even_pair(g, r.pair.first, r.pair.second));
                CHECK(!find_proper_snake(g, r.pair.first, r.pair.second,
                    OracleLimits::with_max_n(20))
                          .has_value());
                if (r.top_case == PairCase::Case2OuterPath)
                    ++case2;
            }
    CHECK(case2 > 0);
}

TEST_CASE("case 2 structural assertions hold along sampled runs")
{
    for (int n : {7, 8, 9, 10, 11}) {
        for (std::uint64_t seed : {31ull, 32ull}) {
            auto g = random_class_a(n, 0.35, seed, 500);
            if (!g || is_clique(*g, VertexSet(g->vertices()))
                || is_disjoint_union_of_cliques(*g))
                continue;
            EvenPairResult r = find_special_even_pair(*g);
            for (const LevelRecord& lv : r.levels) {
                if (lv.kase != PairCase::Case2OuterPath)
                    continue;
                REQUIRE(lv.outer.has_value());
                const OuterPathContext& opc = *lv.outer;
                CHECK(opc.z_path.length() % 2 == 0);
                CHECK(opc.z_path.length() >= 4);
                CHECK(!opc.a_set.empty());
                CHECK(!opc.b_set.empty());
                CHECK(set_intersection(opc.a_set, opc.b_set).empty());
            }
        }
    }
}
