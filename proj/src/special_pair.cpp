#include "evenpair/special_pair.hpp"

#include <algorithm>

namespace evenpair {

std::string to_string(PairCase c)
{
    switch (c) {
    case PairCase::DisjointCliques:
        return "disjoint_cliques";
    case PairCase::Case1Recursion:
        return "case1_recursion";
    case PairCase::Case2OuterPath:
        return "case2_outer_path";
    }
    return "?";
}

InterestingSetContext maximal_interesting_set(const Graph& g)
{
    VertexId seed = -1;
    for (VertexId v : g.vertices())
        if (!is_simplicial(g, v)) {
            seed = v;
            break;
        }
    if (seed == -1)
        throw GraphError("no interesting set: graph is a disjoint union of cliques");

    InterestingSetContext ctx;
    ctx.t = VertexSet{seed};
    ctx.c = complete_set(g, ctx.t); // = N(seed), not a clique
    ctx.provenance.push_back(seed);

    bool grew = true;
    while (grew) {
        grew = false;
        for (VertexId w : g.vertices()) {
            if (ctx.t.contains(w) || ctx.c.contains(w))
                continue;
            VertexSet contact = set_intersection(neighbors(g, w), ctx.c);
            if (is_clique(g, contact))
                continue;
            ctx.t.add(w);
            ctx.c = set_intersection(ctx.c, neighbors(g, w));
            ctx.provenance.push_back(w);
            grew = true;
            break; // restart the scan from the lowest id
        }
    }
    return ctx;
}

std::optional<Path> shortest_outer_path(const Graph& g, const InterestingSetContext& ctx)
{
    std::optional<Path> best;
    for (auto it = ctx.c.begin(); it != ctx.c.end(); ++it) {
        for (auto jt = std::next(it); jt != ctx.c.end(); ++jt) {
            VertexId u = *it, v = *jt;
            if (g.adjacent(u, v))
                continue;
            VertexSet forbidden = set_union(ctx.t, ctx.c);
            forbidden.remove(u);
            forbidden.remove(v);
            auto p = shortest_path(g, u, v, forbidden);
            if (p && (!best || p->length() < best->length()))
                best = std::move(p);
        }
    }
    if (!best)
        return std::nullopt;
    if (best->length() % 2 == 1)
        throw NotInClassAError("odd outer path "
            + std::to_string(best->front()) + ".." + std::to_string(best->back())
            + " of length " + std::to_string(best->length()));
    if (best->length() == 2)
        throw NotInClassAError("outer path of length 2 through "
            + std::to_string(best->verts[1]) + " contradicts maximality of the interesting set");
    return best;
}

OuterPathContext attachment_sets(const Graph& g, const InterestingSetContext& ctx,
    const Path& z)
{
    OuterPathContext opc;
    opc.z_path = z;
    std::vector<VertexId> interior(z.verts.begin() + 1, z.verts.end() - 1);
    opc.z_interior = VertexSet(interior);

    VertexId z1 = interior.front();
    VertexId zn = interior.back();
    for (VertexId v : ctx.c) {
        bool sees_z1 = g.adjacent(v, z1);
        bool sees_zn = g.adjacent(v, zn);
        bool sees_mid = false;
        for (std::size_t i = 0; i < interior.size(); ++i) {
            if (interior[i] == z1 || interior[i] == zn)
                continue;
            if (g.adjacent(v, interior[i])) {
                sees_mid = true;
                break;
            }
        }
        if (sees_mid)
            continue;
        if (sees_z1 && !sees_zn)
            opc.a_set.add(v);
        else if (sees_zn && !sees_z1)
            opc.b_set.add(v);
    }

    if (opc.a_set.empty() || opc.b_set.empty())
        throw NotInClassAError("attachment set empty along the outer path");
    if (!is_clique(g, opc.a_set) || !is_clique(g, opc.b_set))
        throw NotInClassAError("attachment set is not a clique (maximality breach)");
    if (!set_intersection(opc.a_set, opc.b_set).empty())
        throw NotInClassAError("attachment sets intersect");
    for (VertexId u : opc.a_set)
        for (VertexId v : opc.b_set)
            if (g.adjacent(u, v))
                throw NotInClassAError("edge " + std::to_string(u) + "-" + std::to_string(v)
                    + " between the attachment sets closes an odd hole with the outer path");
    return opc;
}

PrecedenceOrder precedence_order(const Graph& g, const InterestingSetContext& ctx,
    const OuterPathContext& opc, Side side)
{
    const VertexSet& own = (side == Side::A) ? opc.a_set : opc.b_set;
    const VertexSet& other = (side == Side::A) ? opc.b_set : opc.a_set;
    (void)ctx;

    PrecedenceOrder order;
    order.ground = own;
    for (VertexId u : own) {
        for (VertexId v : own) {
            if (u == v)
                continue;
            for (VertexId w : other) {
                VertexSet forbidden = other;
                forbidden.remove(w);
                for (VertexId x : neighbors(g, u))
                    if (x != v)
                        forbidden.add(x);
                forbidden.add(u);
                auto p = shortest_path(g, v, w, forbidden);
                if (!p)
                    continue;
                // prefixed with u the path must be odd, so the found part is even
                if (p->length() % 2 == 1)
                    throw NotInClassAError("odd chordless path from "
                        + std::to_string(v) + " to " + std::to_string(w)
                        + " in the precedence search");
                order.pairs.insert({u, v});
                break;
            }
        }
    }

    for (auto [u, v] : order.pairs)
        if (order.pairs.count({v, u}) > 0)
            throw NotInClassAError("precedence order not antisymmetric on "
                + std::to_string(u) + ", " + std::to_string(v));
    for (auto [u, v] : order.pairs)
        for (VertexId w : order.ground)
            if (order.less(v, w) && !order.less(u, w))
                throw NotInClassAError("precedence order not transitive on "
                    + std::to_string(u) + ", " + std::to_string(v) + ", " + std::to_string(w));
    return order;
}

VertexId maximal_element(const PrecedenceOrder& order)
{
    for (VertexId u : order.ground) {
        bool has_successor = false;
        for (VertexId v : order.ground)
            if (order.less(u, v)) {
                has_successor = true;
                break;
            }
        if (!has_successor)
            return u;
    }
    throw GraphError("precedence order has no maximal element");
}

namespace {

    std::pair<VertexId, VertexId> lowest_nonadjacent_pair(const Graph& g)
    {
        const auto& ids = g.vertices();
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                if (!g.adjacent(ids[i], ids[j]))
                    return {ids[i], ids[j]};
        throw GraphError("no non-adjacent pair: graph is a clique");
    }

    void search(const Graph& g, int level, EvenPairResult& result)
    {
        LevelRecord record;
        record.level = level;
        record.graph_size = g.vertex_count();

        if (is_disjoint_union_of_cliques(g)) {
            record.kase = PairCase::DisjointCliques;
            result.pair = lowest_nonadjacent_pair(g);
            result.levels.push_back(std::move(record));
            return;
        }

        InterestingSetContext ctx = maximal_interesting_set(g);
        auto z = shortest_outer_path(g, ctx);
        if (!z) {
            if (is_clique(g, ctx.c))
                throw NotInClassAError("common neighborhood of the interesting set is a clique");
            record.kase = PairCase::Case1Recursion;
            record.interesting = ctx;
            result.levels.push_back(std::move(record));
            result.recursion_depth = level + 1;
            search(induced_subgraph(g, ctx.c), level + 1, result);
            return;
        }

        record.kase = PairCase::Case2OuterPath;
        OuterPathContext opc = attachment_sets(g, ctx, *z);
        PrecedenceOrder oa = precedence_order(g, ctx, opc, Side::A);
        PrecedenceOrder ob = precedence_order(g, ctx, opc, Side::B);
        result.pair = {maximal_element(oa), maximal_element(ob)};
        record.interesting = std::move(ctx);
        record.outer = std::move(opc);
        record.order_a = std::move(oa);
        record.order_b = std::move(ob);
        result.levels.push_back(std::move(record));
    }

} // namespace

EvenPairResult find_special_even_pair(const Graph& g)
{
    if (is_clique(g, VertexSet(g.vertices())))
        throw GraphError("a clique has no even pair");
    EvenPairResult result;
    search(g, 0, result);
    result.top_case = result.levels.front().kase;
    if (g.adjacent(result.pair.first, result.pair.second))
        throw NotInClassAError("computed pair is adjacent"); // cannot happen
    return result;
}

} // namespace evenpair
