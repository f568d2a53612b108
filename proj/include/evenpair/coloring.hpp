#pragma once

#include "evenpair/graph.hpp"
#include "evenpair/special_pair.hpp"

#include <map>
#include <optional>
#include <vector>

namespace evenpair {

struct ContractionStep {
    std::pair<VertexId, VertexId> merged{-1, -1};
    VertexId fresh = -1;
    std::size_t graph_size_after = 0;
};

/// Ordered merges from the input graph down to a disjoint union of cliques;
/// replaying them reproduces every intermediate graph.
struct ContractionTrace {
    std::vector<ContractionStep> steps;
    std::size_t original_n = 0;
};

struct Coloring {
    std::map<VertexId, int> colors; // 0-based color indices
    int num_colors = 0;
};

/// Within each component, colors 0,1,2,... by ascending id; the color count
/// is the size of the largest component. Errors unless every component is a
/// clique.
Coloring color_disjoint_cliques(const Graph& g);

struct ColorOptions {
    // run the class witness oracle on every intermediate graph; defaults to
    // on for n <= 12, off above
    std::optional<bool> verify_trace;
};

struct ColorResult {
    Coloring coloring;
    ContractionTrace trace;
    bool trace_verified = false;
};

/// Contract special even pairs until only cliques remain, color those, and
/// lift the colors back through the trace. On an in-class input the result
/// is a proper coloring with exactly as many colors as the largest clique.
ColorResult color(const Graph& g, const ColorOptions& options = {});

/// Walk the trace in reverse, giving both merged vertices the color of the
/// fresh vertex. Errors when the color map does not match the trace.
Coloring lift_coloring(const ContractionTrace& trace, const Coloring& terminal);

/// True iff no edge is monochromatic; errors on an uncovered vertex.
bool verify_coloring(const Graph& g, const Coloring& c);

/// All intermediate graphs, one per step (the last is the terminal graph).
std::vector<Graph> replay_trace(const Graph& original, const ContractionTrace& trace);

} // namespace evenpair
