#pragma once

#include "evenpair/graph.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace evenpair {

// A size guard tripped: the instance is too large for an exhaustive oracle.
struct OracleLimitError : std::runtime_error {
    explicit OracleLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// An oracle was called with inputs violating its stated preconditions.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Hard bounds for the exhaustive oracles. These are ground-truth checkers,
// not production paths; refusing loudly beats silently hanging.
struct OracleLimits {
    int max_n_enumeration = 20;         // chordless-path enumeration, even/2-pair
    std::uint64_t max_paths = 1'000'000; // enumeration abort threshold
    int max_n_snake = 14;
    int max_n_chromatic = 16;
    int max_n_witness = 32; // hole/antihole/prism detectors

    static OracleLimits with_max_n(int n)
    {
        OracleLimits lim;
        lim.max_n_enumeration = n;
        lim.max_n_snake = n;
        lim.max_n_chromatic = n;
        lim.max_n_witness = n;
        return lim;
    }
};

enum class WitnessKind { OddHole, Antihole, Prism };

std::string to_string(WitnessKind k);

/// Certificate that a graph lies outside the target class. Holes and
/// antiholes list their cycle in cyclic order (for antiholes, the cycle is
/// chordless in the complement). Prisms carry the two triangles plus the
/// three connecting paths; paths[i] runs from triangle_a[i] to triangle_b[i].
struct Witness {
    WitnessKind kind = WitnessKind::OddHole;
    std::vector<VertexId> vertices;
    std::array<VertexId, 3> triangle_a{};
    std::array<VertexId, 3> triangle_b{};
    std::array<Path, 3> paths{};
};

/// Re-derive the claimed structure from the graph; true iff it holds exactly.
bool validate_witness(const Graph& g, const Witness& w);

std::optional<Witness> find_odd_hole(const Graph& g, const OracleLimits& = {});
std::optional<Witness> find_long_antihole(const Graph& g, const OracleLimits& = {});
std::optional<Witness> find_prism(const Graph& g, const OracleLimits& = {});

/// Absent iff g has no odd hole, no antihole of length >= 5 and no prism;
/// otherwise one witness, searched in that order.
std::optional<Witness> class_a_witness(const Graph& g, const OracleLimits& = {});

/// All chordless x-y paths by exhaustive DFS; aborts once more than `cap`
/// paths have been produced.
std::vector<Path> enumerate_chordless_paths(const Graph& g, VertexId x, VertexId y,
    std::uint64_t cap, const OracleLimits& = {});

/// Every chordless path between x and y has even length (vacuously true).
bool is_even_pair(const Graph& g, VertexId x, VertexId y, const OracleLimits& = {});

/// Every chordless path between x and y has length exactly 2 (vacuously
/// true when none exists).
bool is_two_pair(const Graph& g, VertexId x, VertexId y, const OracleLimits& = {});

// Four disjoint chordless paths s1 = a..a', s2 = b..b', s3 = c..c',
// s4 = d..d' whose union carries exactly the path edges plus the two
// triangles a'cd and b'c'd'. s3, s4 have length >= 1; s1, s2 may be single
// vertices. Proper iff s1 or s2 has an edge.
struct Snake {
    Path s1, s2, s3, s4;
    VertexId a = -1, b = -1;

    bool proper() const { return s1.length() >= 1 || s2.length() >= 1; }
    std::vector<VertexId> all_vertices() const;
};

bool validate_snake(const Graph& g, const Snake& s);

std::optional<Snake> find_proper_snake(const Graph& g, VertexId a, VertexId b,
    const OracleLimits& = {});

/// Even pair with no proper (a,b)-snake anywhere in g.
bool is_special_even_pair(const Graph& g, VertexId a, VertexId b, const OracleLimits& = {});

/// Neither g nor its complement has a hole of length >= 5.
bool is_weakly_triangulated(const Graph& g, const OracleLimits& = {});

/// Exact maximum clique (branch and bound with a greedy coloring bound).
VertexSet max_clique(const Graph& g);

/// Exact chromatic number; guarded by max_n_chromatic.
int chromatic_number_exact(const Graph& g, const OracleLimits& = {});

/// Parity invariant: the number of edges of p whose two ends are t-complete
/// has the same parity as the length of p. Preconditions: p chordless and
/// disjoint from t, t nonempty co-connected, both endpoints of p t-complete.
bool check_parity_lemma(const Graph& g, const Path& p, const VertexSet& t);

/// Which of the four structural outcomes hold for a chordless path p with
/// t-complete endpoints and a co-connected t disjoint from p.
struct OutcomeReport {
    bool even_with_even_t_edges = false;
    bool odd_with_odd_t_edges = false;
    bool leap = false;
    bool complement_hop = false;
    std::optional<std::pair<VertexId, VertexId>> leap_pair;
    std::optional<Path> hop_path; // odd chordless path of the complement

    bool any() const
    {
        return even_with_even_t_edges || odd_with_odd_t_edges || leap || complement_hop;
    }
};

OutcomeReport check_roussel_rubio(const Graph& g, const Path& p, const VertexSet& t);

// Enumeration hook used by the detectors and exported for tests: visits
// chordless cycles of length >= 4 in deterministic order until the callback
// returns true.
void for_each_hole(const Graph& g, const std::function<bool(const std::vector<VertexId>&)>& visit);

} // namespace evenpair
