#pragma once

#include "evenpair/graph.hpp"
#include "evenpair/oracles.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace evenpair {

enum class GenFamily {
    NamedInstance,
    Bipartite,
    RejectionClassA,
    WeaklyTriangulatedPrismFree,
    RandomGnp,
};

std::string to_string(GenFamily f);
GenFamily gen_family_from_string(const std::string& s);

/// Everything needed to reproduce an instance; identical specs generate
/// identical graphs on every platform (the stream is mt19937_64 and edge
/// draws consume one 64-bit word each, compared against p at 53-bit
/// resolution).
struct GenSpec {
    GenFamily family = GenFamily::RandomGnp;
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string name;       // NamedInstance only
    int max_tries = 1000;   // rejection families
};

std::vector<std::string> named_instance_catalog();

/// Exact labeled constructions used throughout the tests: small cycles and
/// cliques plus the prism and snake instances.
Graph named_instance(const std::string& name);

/// Balanced bipartition 0..ceil(n/2)-1 vs the rest; each cross pair is an
/// edge with probability p. Bipartite graphs are in the target class by
/// construction.
Graph random_bipartite(int n, double p, std::uint64_t seed);

Graph random_gnp(int n, double p, std::uint64_t seed);

/// Rejection-sample G(n,p) until the class witness oracle finds nothing;
/// absent after max_tries. Guarded by the witness oracle bound.
std::optional<Graph> random_class_a(int n, double p, std::uint64_t seed, int max_tries,
    const OracleLimits& = {});

/// As random_class_a with the weakly-triangulated and prism-free filters.
std::optional<Graph> random_wt_prism_free(int n, double p, std::uint64_t seed, int max_tries,
    const OracleLimits& = {});

/// Dispatch on the spec; rejection families may come back empty.
std::optional<Graph> generate(const GenSpec& spec, const OracleLimits& = {});

} // namespace evenpair
