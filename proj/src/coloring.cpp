#include "evenpair/coloring.hpp"

#include "evenpair/oracles.hpp"

#include <algorithm>
#include <set>

namespace evenpair {

Coloring color_disjoint_cliques(const Graph& g)
{
    if (!is_disjoint_union_of_cliques(g))
        throw GraphError("graph is not a disjoint union of cliques");
    Coloring out;
    std::size_t largest = 0;
    for (const VertexSet& comp : connected_components(g)) {
        int next = 0;
        for (VertexId v : comp)
            out.colors[v] = next++;
        largest = std::max(largest, comp.size());
    }
    out.num_colors = static_cast<int>(largest);
    return out;
}

namespace {

    int distinct_colors(const Coloring& c)
    {
        std::set<int> used;
        for (const auto& [v, col] : c.colors)
            used.insert(col);
        return static_cast<int>(used.size());
    }

} // namespace

Coloring lift_coloring(const ContractionTrace& trace, const Coloring& terminal)
{
    Coloring out = terminal;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        auto found = out.colors.find(it->fresh);
        if (found == out.colors.end())
            throw GraphError("coloring does not cover the merged vertex "
                + std::to_string(it->fresh));
        int c = found->second;
        out.colors.erase(found);
        out.colors[it->merged.first] = c;
        out.colors[it->merged.second] = c;
    }
    out.num_colors = distinct_colors(out);
    return out;
}

bool verify_coloring(const Graph& g, const Coloring& c)
{
    for (VertexId v : g.vertices())
        if (c.colors.find(v) == c.colors.end())
            throw GraphError("coloring does not cover vertex " + std::to_string(v));
    for (auto [u, v] : g.edges())
        if (c.colors.at(u) == c.colors.at(v))
            return false;
    return true;
}

std::vector<Graph> replay_trace(const Graph& original, const ContractionTrace& trace)
{
    std::vector<Graph> out;
    Graph cur = original;
    for (const ContractionStep& step : trace.steps) {
        auto [next, fresh] = contract(cur, step.merged.first, step.merged.second);
        if (fresh != step.fresh || next.vertex_count() != step.graph_size_after)
            throw GraphError("trace replay mismatch at fresh vertex "
                + std::to_string(step.fresh));
        out.push_back(next);
        cur = std::move(next);
    }
    return out;
}

ColorResult color(const Graph& g, const ColorOptions& options)
{
    ColorResult result;
    result.trace.original_n = g.vertex_count();

    Graph cur = g;
    while (!is_disjoint_union_of_cliques(cur)) {
        EvenPairResult pair = find_special_even_pair(cur);
        auto [next, fresh] = contract(cur, pair.pair.first, pair.pair.second);
        result.trace.steps.push_back({pair.pair, fresh, next.vertex_count()});
        cur = std::move(next);
    }

    Coloring terminal = color_disjoint_cliques(cur);
    result.coloring = lift_coloring(result.trace, terminal);
    if (!verify_coloring(g, result.coloring))
        throw NotInClassAError("lifted coloring is not proper"); // contracted a non-even pair

    bool verify = options.verify_trace.value_or(g.vertex_count() <= 12);
    if (verify) {
        if (!class_a_witness(g)) {
            std::size_t step = 1;
            for (const Graph& inter : replay_trace(g, result.trace)) {
                if (auto w = class_a_witness(inter))
                    throw NotInClassAError("intermediate graph after step "
                        + std::to_string(step) + " acquired a " + to_string(w->kind));
                ++step;
            }
        }
        result.trace_verified = true;
    }
    return result;
}

} // namespace evenpair
