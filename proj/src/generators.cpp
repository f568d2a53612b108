#include "evenpair/generators.hpp"

#include <random>
#include <utility>

namespace evenpair {

std::string to_string(GenFamily f)
{
    switch (f) {
    case GenFamily::NamedInstance:
        return "named_instance";
    case GenFamily::Bipartite:
        return "bipartite";
    case GenFamily::RejectionClassA:
        return "rejection_class_a";
    case GenFamily::WeaklyTriangulatedPrismFree:
        return "weakly_triangulated_prism_free";
    case GenFamily::RandomGnp:
        return "random_gnp";
    }
    return "?";
}

GenFamily gen_family_from_string(const std::string& s)
{
    if (s == "named_instance")
        return GenFamily::NamedInstance;
    if (s == "bipartite")
        return GenFamily::Bipartite;
    if (s == "rejection_class_a")
        return GenFamily::RejectionClassA;
    if (s == "weakly_triangulated_prism_free")
        return GenFamily::WeaklyTriangulatedPrismFree;
    if (s == "random_gnp")
        return GenFamily::RandomGnp;
    throw GraphError("unknown generator family: " + s);
}

namespace {

    using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

    Graph cycle(int n)
    {
        EdgeList edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph::from_edges(n, edges);
    }

    Graph complete(int n)
    {
        EdgeList edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(i, j);
        return Graph::from_edges(n, edges);
    }

    Graph path_graph(int n)
    {
        EdgeList edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return Graph::from_edges(n, edges);
    }

    // triangles {0,1,2} and {3,4,5} joined by 0-3, 1-4 and the 3-edge path
    // 2-6-7-5: an odd prism on 8 vertices
    Graph odd_prism_8()
    {
        EdgeList edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4},
            {2, 6}, {6, 7}, {7, 5}};
        return Graph::from_edges(8, edges);
    }

    // triangles {0,1,2} and {3,4,5} joined by the length-2 paths 0-6-3,
    // 1-7-4, 2-8-5
    Graph even_prism_9()
    {
        EdgeList edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 6}, {6, 3},
            {1, 7}, {7, 4}, {2, 8}, {8, 5}};
        return Graph::from_edges(9, edges);
    }

    // triangles a c d = 0 1 2 and b c' d' = 5 3 4 with the end paths
    // degenerate: an (a,b)-snake that is not proper
    Graph snake_improper()
    {
        EdgeList edges = {{0, 1}, {0, 2}, {1, 2}, {5, 3}, {5, 4}, {3, 4},
            {1, 6}, {6, 7}, {7, 8}, {8, 3},     // c .. c'
            {2, 9}, {9, 10}, {10, 11}, {11, 4}}; // d .. d'
        Graph g = Graph::from_edges(12, edges);
        g.set_label(0, "a");
        g.set_label(1, "c");
        g.set_label(2, "d");
        g.set_label(3, "c'");
        g.set_label(4, "d'");
        g.set_label(5, "b");
        return g;
    }

    // a=0 a'=1, triangle a' c d = 1 2 3, triangle b' c' d' = 6 4 5, b=7;
    // s1 = 0-1, s2 = 7-8-6, s3 = 2-9-10-11-12-4, s4 = 3-13-5: proper
    Graph snake_proper()
    {
        EdgeList edges = {{0, 1},
            {1, 2}, {1, 3}, {2, 3}, {6, 4}, {6, 5}, {4, 5},
            {2, 9}, {9, 10}, {10, 11}, {11, 12}, {12, 4},
            {3, 13}, {13, 5},
            {7, 8}, {8, 6}};
        Graph g = Graph::from_edges(14, edges);
        g.set_label(0, "a");
        g.set_label(1, "a'");
        g.set_label(2, "c");
        g.set_label(3, "d");
        g.set_label(4, "c'");
        g.set_label(5, "d'");
        g.set_label(6, "b'");
        g.set_label(7, "b");
        return g;
    }

} // namespace

std::vector<std::string> named_instance_catalog()
{
    return {"c4", "c5", "c6", "c7bar", "even-prism-9", "k4", "odd-prism-8",
        "odd-prism-c6bar", "p3", "snake-improper", "snake-proper"};
}

Graph named_instance(const std::string& name)
{
    if (name == "p3")
        return path_graph(3);
    if (name == "c4")
        return cycle(4);
    if (name == "c5")
        return cycle(5);
    if (name == "c6")
        return cycle(6);
    if (name == "k4")
        return complete(4);
    if (name == "c7bar")
        return complement(cycle(7));
    if (name == "odd-prism-c6bar")
        return complement(cycle(6));
    if (name == "odd-prism-8")
        return odd_prism_8();
    if (name == "even-prism-9")
        return even_prism_9();
    if (name == "snake-improper")
        return snake_improper();
    if (name == "snake-proper")
        return snake_proper();
    throw GraphError("unknown named instance: " + name);
}

namespace {

    // one 64-bit word per draw, compared against p at 53-bit resolution;
    // identical across platforms since mt19937_64 is fully specified
    class EdgeCoin {
    public:
        explicit EdgeCoin(std::uint64_t seed) : rng_(seed) {}

        bool flip(double p)
        {
            double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
            return u < p;
        }

    private:
        std::mt19937_64 rng_;
    };

    Graph sample_bipartite(EdgeCoin& coin, int n, double p)
    {
        int left = (n + 1) / 2;
        EdgeList edges;
        for (int u = 0; u < left; ++u)
            for (int v = left; v < n; ++v)
                if (coin.flip(p))
                    edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }

    Graph sample_gnp(EdgeCoin& coin, int n, double p)
    {
        EdgeList edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin.flip(p))
                    edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }

} // namespace

Graph random_bipartite(int n, double p, std::uint64_t seed)
{
    if (n < 1)
        throw GraphError("bipartite generator needs n >= 1");
    EdgeCoin coin(seed);
    return sample_bipartite(coin, n, p);
}

Graph random_gnp(int n, double p, std::uint64_t seed)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    EdgeCoin coin(seed);
    return sample_gnp(coin, n, p);
}

std::optional<Graph> random_class_a(int n, double p, std::uint64_t seed, int max_tries,
    const OracleLimits& lim)
{
    EdgeCoin coin(seed);
    for (int t = 0; t < max_tries; ++t) {
        Graph g = sample_gnp(coin, n, p);
        if (!class_a_witness(g, lim))
            return g;
    }
    return std::nullopt;
}

std::optional<Graph> random_wt_prism_free(int n, double p, std::uint64_t seed, int max_tries,
    const OracleLimits& lim)
{
    EdgeCoin coin(seed);
    for (int t = 0; t < max_tries; ++t) {
        Graph g = sample_gnp(coin, n, p);
        if (is_weakly_triangulated(g, lim) && !find_prism(g, lim))
            return g;
    }
    return std::nullopt;
}

std::optional<Graph> generate(const GenSpec& spec, const OracleLimits& lim)
{
    switch (spec.family) {
    case GenFamily::NamedInstance:
        return named_instance(spec.name);
    case GenFamily::Bipartite:
        return random_bipartite(spec.n, spec.p, spec.seed);
    case GenFamily::RejectionClassA:
        return random_class_a(spec.n, spec.p, spec.seed, spec.max_tries, lim);
    case GenFamily::WeaklyTriangulatedPrismFree:
        return random_wt_prism_free(spec.n, spec.p, spec.seed, spec.max_tries, lim);
    case GenFamily::RandomGnp:
        return random_gnp(spec.n, spec.p, spec.seed);
    }
    throw GraphError("unknown generator family");
}

} // namespace evenpair
