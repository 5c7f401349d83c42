#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace babai {

enum class Family { Path, Cycle };

const char* family_name(Family f);
Family parse_family(const std::string& s);

using Vertex = int;

// P_n (n >= 2) or C_n (n >= 3) with its graph distance.
class MetricSpace {
public:
    MetricSpace(Family family, int n);

    static MetricSpace path(int n) { return {Family::Path, n}; }
    static MetricSpace cycle(int n) { return {Family::Cycle, n}; }

    Family family() const { return family_; }
    int size() const { return n_; }

    // Largest realized distance: n-1 for paths, floor(n/2) for cycles.
    int diameter() const;

    // {1, ..., diameter()}.
    std::vector<int> realized_distances() const;

    int distance(Vertex i, Vertex j) const;

    friend bool operator==(const MetricSpace&, const MetricSpace&) = default;

private:
    Family family_;
    int n_;
};

// Strictly increasing list of positive distances.
class DistanceSet {
public:
    DistanceSet() = default;
    DistanceSet(std::initializer_list<int> ds);
    explicit DistanceSet(std::vector<int> ds);

    const std::vector<int>& values() const { return ds_; }
    std::size_t size() const { return ds_.size(); }
    bool empty() const { return ds_.empty(); }
    bool contains(int d) const;
    int max() const { return ds_.back(); }
    auto begin() const { return ds_.begin(); }
    auto end() const { return ds_.end(); }

    // Throws DomainError unless non-empty and every element is in 1..space.diameter().
    void check_valid_for(const MetricSpace& space) const;

    // "{1,2,4}"
    std::string to_string() const;

    friend bool operator==(const DistanceSet&, const DistanceSet&) = default;

private:
    std::vector<int> ds_;
};

// Colex comparison: compare by largest element first, then downward.
bool colex_less(const DistanceSet& a, const DistanceSet& b);

// Finite simple graph stored as sorted neighbor lists.
class SimpleGraph {
public:
    // Edges may repeat or appear in either orientation; loops are rejected.
    SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    // Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
    SimpleGraph induced(const std::vector<Vertex>& vertices) const;

    static SimpleGraph complete(int n);
    static SimpleGraph edgeless(int n);

private:
    SimpleGraph() = default;
    std::vector<std::vector<Vertex>> adj_;
};

SimpleGraph distance_graph(const MetricSpace& space, const DistanceSet& d);

// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const SimpleGraph& g);

bool max_clique_at_least(const SimpleGraph& g, int size);

// DIMACS edge format, 1-based vertices.
std::string to_dimacs(const SimpleGraph& g);

} // namespace babai
