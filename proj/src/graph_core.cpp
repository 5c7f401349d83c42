#include "babai/graph_core.hpp"

#include "babai/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace babai {

const char* family_name(Family f) {
    return f == Family::Path ? "path" : "cycle";
}

Family parse_family(const std::string& s) {
    if (s == "path") return Family::Path;
    if (s == "cycle") return Family::Cycle;
    throw DomainError("unknown family '" + s + "' (expected path or cycle)");
}

MetricSpace::MetricSpace(Family family, int n) : family_(family), n_(n) {
    if (family == Family::Path && n < 2)
        throw DomainError("path needs n >= 2, got " + std::to_string(n));
    if (family == Family::Cycle && n < 3)
        throw DomainError("cycle needs n >= 3, got " + std::to_string(n));
}

int MetricSpace::diameter() const {
    return family_ == Family::Path ? n_ - 1 : n_ / 2;
}

std::vector<int> MetricSpace::realized_distances() const {
    std::vector<int> r(static_cast<std::size_t>(diameter()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(i) + 1;
    return r;
}

int MetricSpace::distance(Vertex i, Vertex j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw DomainError("vertex out of range for n=" + std::to_string(n_));
    const int diff = std::abs(i - j);
    return family_ == Family::Path ? diff : std::min(diff, n_ - diff);
}

DistanceSet::DistanceSet(std::initializer_list<int> ds) : DistanceSet(std::vector<int>(ds)) {}

DistanceSet::DistanceSet(std::vector<int> ds) : ds_(std::move(ds)) {
    std::sort(ds_.begin(), ds_.end());
    if (std::adjacent_find(ds_.begin(), ds_.end()) != ds_.end())
        throw DomainError("distance set has repeated elements");
    if (!ds_.empty() && ds_.front() <= 0)
        throw DomainError("distances must be positive");
}

bool DistanceSet::contains(int d) const {
    return std::binary_search(ds_.begin(), ds_.end(), d);
}

void DistanceSet::check_valid_for(const MetricSpace& space) const {
    if (ds_.empty()) throw DomainError("distance set is empty");
    if (ds_.back() > space.diameter())
        throw DomainError("distance " + std::to_string(ds_.back()) + " exceeds diameter " +
                          std::to_string(space.diameter()) + " of " + family_name(space.family()) +
                          " n=" + std::to_string(space.size()));
}

std::string DistanceSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < ds_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ds_[i]);
    }
    return s + "}";
}

bool colex_less(const DistanceSet& a, const DistanceSet& b) {
    return std::lexicographical_compare(a.values().rbegin(), a.values().rend(), b.values().rbegin(),
                                        b.values().rend());
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 1) throw DomainError("graph needs at least one vertex");
    adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge endpoint out of range");
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return twice / 2;
}

int SimpleGraph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

SimpleGraph SimpleGraph::induced(const std::vector<Vertex>& vertices) const {
    std::vector<int> index(adj_.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    SimpleGraph g;
    g.adj_.resize(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : neighbors(vertices[i])) {
            const int j = index[static_cast<std::size_t>(w)];
            if (j >= 0) g.adj_[i].push_back(j);
        }
        std::sort(g.adj_[i].begin(), g.adj_[i].end());
    }
    return g;
}

SimpleGraph SimpleGraph::complete(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return SimpleGraph(n, e);
}

SimpleGraph SimpleGraph::edgeless(int n) {
    return SimpleGraph(n, {});
}

SimpleGraph distance_graph(const MetricSpace& space, const DistanceSet& d) {
    d.check_valid_for(space);
    const int n = space.size();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) {
        for (int dist : d) {
            if (space.family() == Family::Path) {
                if (i + dist < n) edges.emplace_back(i, i + dist);
            } else {
                // i ~ i+dist (mod n); the antipodal distance n/2 collapses to one edge.
                edges.emplace_back(i, (i + dist) % n);
            }
        }
    }
    return SimpleGraph(n, edges);
}

std::vector<std::vector<Vertex>> components(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool max_clique_at_least(const SimpleGraph& g, int size) {
    if (size <= 1) return size <= g.vertex_count();
    // Extend cliques through higher-indexed common neighbours only.
    std::function<bool(const std::vector<Vertex>&, int)> extend = [&](const std::vector<Vertex>& cand, int need) {
        if (need == 0) return true;
        if (static_cast<int>(cand.size()) < need) return false;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (static_cast<int>(cand.size() - i) < need) return false;
            std::vector<Vertex> next;
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (g.adjacent(cand[i], cand[j])) next.push_back(cand[j]);
            if (extend(next, need - 1)) return true;
        }
        return false;
    };
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < size - 1) continue;
        std::vector<Vertex> higher;
        for (Vertex w : g.neighbors(v))
            if (w > v && g.degree(w) >= size - 1) higher.push_back(w);
        if (extend(higher, size - 1)) return true;
    }
    return false;
}

std::string to_dimacs(const SimpleGraph& g) {
    std::ostringstream os;
    os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

} // namespace babai
