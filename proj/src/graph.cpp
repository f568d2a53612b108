#include "evenpair/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace evenpair {

// --- VertexSet ---------------------------------------------------------------

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet::VertexSet(std::initializer_list<VertexId> ids)
    : VertexSet(std::vector<VertexId>(ids))
{
}

bool VertexSet::contains(VertexId v) const
{
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::add(VertexId v)
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v)
        ids_.insert(it, v);
}

void VertexSet::remove(VertexId v)
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v)
        ids_.erase(it);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b)
{
    std::vector<VertexId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b)
{
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b)
{
    std::vector<VertexId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

// --- Graph -------------------------------------------------------------------

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    std::vector<VertexId> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        ids[static_cast<std::size_t>(i)] = i;
    return from_vertices(std::move(ids), edges);
}

Graph Graph::from_vertices(std::vector<VertexId> ids,
    const std::vector<std::pair<VertexId, VertexId>>& edges)
{
    Graph g;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw GraphError("duplicate vertex id");
    if (!ids.empty() && ids.front() < 0)
        throw GraphError("negative vertex id");
    g.ids_ = std::move(ids);
    g.adj_.assign(g.ids_.size(), Bitset64(g.ids_.size()));
    for (auto [u, v] : edges) {
        if (u == v)
            throw GraphError("self-loop on vertex " + std::to_string(u));
        int iu = g.index_of(u);
        int iv = g.index_of(v);
        g.adj_[static_cast<std::size_t>(iu)].set(static_cast<std::size_t>(iv));
        g.adj_[static_cast<std::size_t>(iv)].set(static_cast<std::size_t>(iu));
    }
    return g;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& row : adj_)
        twice += row.count();
    return twice / 2;
}

bool Graph::has_vertex(VertexId v) const
{
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

int Graph::index_of(VertexId v) const
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v)
        throw GraphError("unknown vertex id " + std::to_string(v));
    return static_cast<int>(it - ids_.begin());
}

bool Graph::adjacent(VertexId u, VertexId v) const
{
    return adj_[static_cast<std::size_t>(index_of(u))].test(
        static_cast<std::size_t>(index_of(v)));
}

int Graph::degree(VertexId v) const
{
    return static_cast<int>(adj_[static_cast<std::size_t>(index_of(v))].count());
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::size_t i = 0; i < ids_.size(); ++i)
        adj_[i].for_each([&](std::size_t j) {
            if (j > i)
                out.emplace_back(ids_[i], ids_[j]);
        });
    return out;
}

VertexId Graph::max_id() const
{
    if (ids_.empty())
        throw GraphError("empty graph has no max id");
    return ids_.back();
}

void Graph::set_label(VertexId v, std::string label)
{
    index_of(v);
    labels_[v] = std::move(label);
}

std::optional<std::string> Graph::label(VertexId v) const
{
    auto it = labels_.find(v);
    if (it == labels_.end())
        return std::nullopt;
    return it->second;
}

// --- operations ----------------------------------------------------------------

VertexSet neighbors(const Graph& g, VertexId v)
{
    std::vector<VertexId> out;
    g.row(g.index_of(v)).for_each([&](std::size_t j) {
        out.push_back(g.id_at(static_cast<int>(j)));
    });
    return VertexSet(std::move(out));
}

Graph complement(const Graph& g)
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    const auto& ids = g.vertices();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (!g.row(static_cast<int>(i)).test(j))
                edges.emplace_back(ids[i], ids[j]);
    Graph out = Graph::from_vertices(ids, edges);
    for (const auto& [v, lab] : g.labels())
        out.set_label(v, lab);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto it = s.begin(); it != s.end(); ++it) {
        int iu = g.index_of(*it); // validates membership
        for (auto jt = std::next(it); jt != s.end(); ++jt)
            if (g.row(iu).test(static_cast<std::size_t>(g.index_of(*jt))))
                edges.emplace_back(*it, *jt);
    }
    Graph out = Graph::from_vertices(s.ids(), edges);
    for (const auto& [v, lab] : g.labels())
        if (s.contains(v))
            out.set_label(v, lab);
    return out;
}

std::pair<Graph, VertexId> contract(const Graph& g, VertexId x, VertexId y)
{
    if (x == y)
        throw GraphError("cannot contract a vertex with itself");
    if (g.adjacent(x, y))
        throw GraphError("cannot contract adjacent vertices " + std::to_string(x) + ", "
            + std::to_string(y));
    VertexId fresh = g.max_id() + 1;

    std::vector<VertexId> ids;
    ids.reserve(g.vertex_count() - 1);
    for (VertexId v : g.vertices())
        if (v != x && v != y)
            ids.push_back(v);
    ids.push_back(fresh);

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [u, v] : g.edges()) {
        bool ux = (u == x || u == y);
        bool vx = (v == x || v == y);
        if (ux && vx)
            continue; // cannot happen: x, y non-adjacent
        if (ux)
            edges.emplace_back(fresh, v);
        else if (vx)
            edges.emplace_back(u, fresh);
        else
            edges.emplace_back(u, v);
    }
    Graph out = Graph::from_vertices(std::move(ids), edges);
    for (const auto& [v, lab] : g.labels())
        if (v != x && v != y)
            out.set_label(v, lab);
    return {std::move(out), fresh};
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    for (auto it = s.begin(); it != s.end(); ++it) {
        int iu = g.index_of(*it);
        for (auto jt = std::next(it); jt != s.end(); ++jt)
            if (!g.row(iu).test(static_cast<std::size_t>(g.index_of(*jt))))
                return false;
    }
    return true;
}

bool is_co_connected(const Graph& g, const VertexSet& t)
{
    if (t.empty())
        throw GraphError("co-connectivity of the empty set is undefined");
    // BFS in the complement restricted to t, without materializing it
    std::vector<int> idx;
    idx.reserve(t.size());
    for (VertexId v : t)
        idx.push_back(g.index_of(v));
    std::vector<bool> seen(t.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (seen[k] || k == cur)
                continue;
            if (!g.row(idx[cur]).test(static_cast<std::size_t>(idx[k]))) {
                seen[k] = true;
                ++reached;
                queue.push_back(k);
            }
        }
    }
    return reached == t.size();
}

VertexSet complete_set(const Graph& g, const VertexSet& t)
{
    if (t.empty())
        throw GraphError("complete set of the empty set is undefined");
    Bitset64 common(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        common.set(i);
    for (VertexId v : t)
        common &= g.row(g.index_of(v));
    std::vector<VertexId> out;
    common.for_each([&](std::size_t j) {
        VertexId v = g.id_at(static_cast<int>(j));
        if (!t.contains(v))
            out.push_back(v);
    });
    return VertexSet(std::move(out));
}

bool is_simplicial(const Graph& g, VertexId v)
{
    int iv = g.index_of(v);
    const Bitset64& nv = g.row(iv);
    bool ok = true;
    nv.for_each([&](std::size_t j) {
        if (!ok)
            return;
        // every other neighbor must be adjacent to j
        Bitset64 missing = nv;
        missing.setminus_with(g.row(static_cast<int>(j)));
        missing.reset(j);
        if (missing.any())
            ok = false;
    });
    return ok;
}

bool is_disjoint_union_of_cliques(const Graph& g)
{
    for (VertexId v : g.vertices())
        if (!is_simplicial(g, v))
            return false;
    return true;
}

std::optional<Path> shortest_path(const Graph& g, VertexId u, VertexId v,
    const VertexSet& forbidden)
{
    if (forbidden.contains(u) || forbidden.contains(v))
        throw GraphError("shortest_path endpoints must not be forbidden");
    int src = g.index_of(u);
    int dst = g.index_of(v);
    std::size_t n = g.vertex_count();

    Bitset64 allowed(n);
    for (std::size_t i = 0; i < n; ++i)
        allowed.set(i);
    for (VertexId w : forbidden)
        allowed.reset(static_cast<std::size_t>(g.index_of(w)));

    std::vector<int> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::deque<int> queue{src};
    seen[static_cast<std::size_t>(src)] = true;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == dst)
            break;
        // ascending index = ascending id: deterministic tie-break
        Bitset64 nxt = g.row(cur);
        nxt &= allowed;
        bool done = false;
        nxt.for_each([&](std::size_t j) {
            if (done || seen[j])
                return;
            seen[j] = true;
            parent[j] = cur;
            if (static_cast<int>(j) == dst)
                done = true;
            queue.push_back(static_cast<int>(j));
        });
        if (done)
            break;
    }
    if (!seen[static_cast<std::size_t>(dst)])
        return std::nullopt;
    std::vector<VertexId> verts;
    for (int cur = dst; cur != -1; cur = parent[static_cast<std::size_t>(cur)])
        verts.push_back(g.id_at(cur));
    std::reverse(verts.begin(), verts.end());
    return Path(std::move(verts));
}

bool is_path(const Graph& g, const Path& p)
{
    if (p.empty())
        return false;
    for (VertexId v : p.verts)
        g.index_of(v);
    std::vector<VertexId> sorted = p.verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (std::size_t i = 0; i + 1 < p.verts.size(); ++i)
        if (!g.adjacent(p.verts[i], p.verts[i + 1]))
            return false;
    return true;
}

bool is_chordless_path(const Graph& g, const Path& p)
{
    if (!is_path(g, p))
        return false;
    for (std::size_t i = 0; i < p.verts.size(); ++i)
        for (std::size_t j = i + 2; j < p.verts.size(); ++j)
            if (g.adjacent(p.verts[i], p.verts[j]))
                return false;
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<VertexId> comp;
        std::deque<std::size_t> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop_front();
            comp.push_back(g.id_at(static_cast<int>(cur)));
            g.row(static_cast<int>(cur)).for_each([&](std::size_t j) {
                if (!seen[j]) {
                    seen[j] = true;
                    queue.push_back(j);
                }
            });
        }
        out.emplace_back(std::move(comp));
    }
    return out;
}

} // namespace evenpair
