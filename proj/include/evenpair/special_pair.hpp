#pragma once

#include "evenpair/graph.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace evenpair {

// Raised when an internal structural invariant fails. The search is only
// guaranteed on graphs with no odd hole, no antihole of length >= 5 and no
// prism; on other inputs it either still returns a pair (to be checked by
// the oracles) or fails fast with one of these diagnostics.
struct NotInClassAError : std::runtime_error {
    explicit NotInClassAError(const std::string& detail)
        : std::runtime_error("input graph is outside the supported class: " + detail)
    {
    }
};

/// Maximal interesting set: t is co-connected, the common neighborhood c is
/// not a clique, and no further vertex can be absorbed. `provenance` lists
/// the vertices in the order the growth loop added them.
struct InterestingSetContext {
    VertexSet t;
    VertexSet c;
    std::vector<VertexId> provenance;
};

/// Shortest outer path (endpoints non-adjacent in c, interior outside t ∪ c)
/// together with the attachment sets at its two ends.
struct OuterPathContext {
    Path z_path;          // alpha z_1 .. z_n beta
    VertexSet z_interior; // z_1 .. z_n
    VertexSet a_set;      // sees z_1 only
    VertexSet b_set;      // sees z_n only
};

/// Strict partial order on an attachment set; pairs (u, v) mean u < v.
struct PrecedenceOrder {
    VertexSet ground;
    std::set<std::pair<VertexId, VertexId>> pairs;

    bool less(VertexId u, VertexId v) const { return pairs.count({u, v}) > 0; }
};

enum class PairCase { DisjointCliques, Case1Recursion, Case2OuterPath };

std::string to_string(PairCase c);

/// One level of the search; Case-2 levels carry the full derivation context.
struct LevelRecord {
    int level = 0;
    std::size_t graph_size = 0;
    PairCase kase = PairCase::DisjointCliques;
    std::optional<InterestingSetContext> interesting;
    std::optional<OuterPathContext> outer;
    std::optional<PrecedenceOrder> order_a;
    std::optional<PrecedenceOrder> order_b;
};

struct EvenPairResult {
    std::pair<VertexId, VertexId> pair{-1, -1};
    PairCase top_case = PairCase::DisjointCliques;
    int recursion_depth = 0;
    std::vector<LevelRecord> levels;
};

/// Grow a maximal interesting set from the lowest-id non-simplicial vertex.
/// Errors with GraphError when g is a disjoint union of cliques (no
/// interesting set exists).
InterestingSetContext maximal_interesting_set(const Graph& g);

/// Overall shortest outer path for the context, or absent when there is
/// none. Ties break on the lexicographically smallest endpoint pair, then
/// on the BFS expansion order. A result of odd length or length 2 is
/// structurally impossible inside the supported class and raises
/// NotInClassAError.
std::optional<Path> shortest_outer_path(const Graph& g, const InterestingSetContext& ctx);

/// Attachment sets of a shortest outer path. Establishes that both sets are
/// nonempty disjoint cliques with no edge between them; an edge between them
/// exhibits an odd hole and raises NotInClassAError.
OuterPathContext attachment_sets(const Graph& g, const InterestingSetContext& ctx,
    const Path& z);

enum class Side { A, B };

/// Precedence order on one attachment set: u < v iff some chordless path,
/// prefixed with u, forms an odd chordless path from u into the opposite
/// set with v as its second vertex. The search deletes the opposite set
/// (except the target), the neighbors of u (except v) and u itself. The
/// computed relation must be antisymmetric and transitive.
PrecedenceOrder precedence_order(const Graph& g, const InterestingSetContext& ctx,
    const OuterPathContext& opc, Side side);

/// Lowest-id element with no successor; the order must have passed its
/// antisymmetry and transitivity checks.
VertexId maximal_element(const PrecedenceOrder& order);

/// The constructive search for a special even pair (errors on cliques).
EvenPairResult find_special_even_pair(const Graph& g);

} // namespace evenpair
