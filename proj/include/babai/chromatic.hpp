#pragma once

#include "babai/graph_core.hpp"

#include <cstdint>
#include <vector>

namespace babai {

// Total map vertex -> color index in [0, color_count()).
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<int> colors);

    const std::vector<int>& colors() const { return colors_; }
    int size() const { return static_cast<int>(colors_.size()); }
    int operator[](Vertex v) const { return colors_.at(static_cast<std::size_t>(v)); }

    // Number of distinct colors actually used.
    int color_count() const;

    // Relabel so colors appear in first-use order along vertex index.
    Coloring canonical() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<int> colors_;
};

bool is_proper(const SimpleGraph& g, const Coloring& col);

// No two vertices exactly d apart share a color.
bool forbids_distance(const MetricSpace& space, const Coloring& col, int d);

struct ChromaticOptions {
    // Branch-and-bound node ceiling; 0 means unlimited.
    std::uint64_t node_budget = 0;
};

struct ChromaticResult {
    int chi = 0;
    Coloring witness; // canonical, proper, exactly chi colors
};

// Exact chromatic number: per component, greedy clique lower bound, DSATUR upper
// bound, then DSATUR branch and bound. Throws BudgetExceededError past node_budget.
ChromaticResult chromatic_number(const SimpleGraph& g, const ChromaticOptions& opts = {});

// v_i gets the smallest color absent among its earlier D-neighbours v_{i-d}.
Coloring greedy_path_coloring(int n, const DistanceSet& d);

} // namespace babai
