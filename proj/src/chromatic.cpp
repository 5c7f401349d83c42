#include "babai/chromatic.hpp"

#include "babai/errors.hpp"

#include <algorithm>
#include <string>

namespace babai {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
    for (int c : colors_)
        if (c < 0) throw DomainError("color indices must be non-negative");
}

int Coloring::color_count() const {
    std::vector<int> sorted = colors_;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Coloring Coloring::canonical() const {
    std::vector<int> relabel;
    std::vector<int> out(colors_.size());
    int next = 0;
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        const auto c = static_cast<std::size_t>(colors_[i]);
        if (c >= relabel.size()) relabel.resize(c + 1, -1);
        if (relabel[c] < 0) relabel[c] = next++;
        out[i] = relabel[c];
    }
    return Coloring(std::move(out));
}

bool is_proper(const SimpleGraph& g, const Coloring& col) {
    if (col.size() != g.vertex_count())
        throw DomainError("coloring covers " + std::to_string(col.size()) + " vertices, graph has " +
                          std::to_string(g.vertex_count()));
    for (int u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u))
            if (col[u] == col[v]) return false;
    return true;
}

bool forbids_distance(const MetricSpace& space, const Coloring& col, int d) {
    if (d < 1 || d > space.diameter())
        throw DomainError("distance " + std::to_string(d) + " is not realized");
    if (col.size() != space.size()) throw DomainError("coloring size does not match space");
    const int n = space.size();
    for (int i = 0; i < n; ++i) {
        const int j = i + d;
        if (space.family() == Family::Path) {
            if (j < n && col[i] == col[j]) return false;
        } else if (col[i] == col[j % n]) {
            return false;
        }
    }
    return true;
}

namespace {

int greedy_clique_bound(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    int best = 1;
    for (Vertex seed : order) {
        if (g.degree(seed) + 1 <= best) break;
        std::vector<Vertex> clique{seed};
        std::vector<Vertex> cand = g.neighbors(seed);
        std::stable_sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        for (Vertex v : cand) {
            bool ok = true;
            for (Vertex c : clique)
                if (!g.adjacent(v, c)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

// Exact DSATUR branch and bound on one connected graph.
class DsaturSearch {
public:
    DsaturSearch(const SimpleGraph& g, std::uint64_t budget)
        : g_(g), n_(g.vertex_count()), budget_(budget) {}

    std::vector<int> run(int& chi) {
        lower_ = greedy_clique_bound(g_);
        heuristic();
        if (best_ > lower_) {
            const auto un = static_cast<std::size_t>(n_);
            color_.assign(un, -1);
            count_.assign(un * static_cast<std::size_t>(best_), 0);
            sat_.assign(un, 0);
            search(0, 0);
        }
        chi = best_;
        return best_coloring_;
    }

private:
    // Plain DSATUR for the initial upper bound.
    void heuristic() {
        const auto un = static_cast<std::size_t>(n_);
        const auto width = static_cast<std::size_t>(n_) + 1;
        color_.assign(un, -1);
        count_.assign(un * width, 0);
        sat_.assign(un, 0);
        int used = 0;
        for (int step = 0; step < n_; ++step) {
            const Vertex v = pick();
            int c = 0;
            while (count_[idx(v, c, width)] != 0) ++c;
            assign(v, c, width, +1);
            used = std::max(used, c + 1);
        }
        best_ = used;
        best_coloring_ = color_;
    }

    std::size_t idx(Vertex v, int c, std::size_t width) const {
        return static_cast<std::size_t>(v) * width + static_cast<std::size_t>(c);
    }

    // Max saturation, ties to the lowest vertex index.
    Vertex pick() const {
        Vertex best = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] >= 0) continue;
            if (best < 0 || sat_[static_cast<std::size_t>(v)] > sat_[static_cast<std::size_t>(best)]) best = v;
        }
        return best;
    }

    void assign(Vertex v, int c, std::size_t width, int delta) {
        color_[static_cast<std::size_t>(v)] = delta > 0 ? c : -1;
        for (Vertex w : g_.neighbors(v)) {
            int& cnt = count_[idx(w, c, width)];
            if (delta > 0 && cnt++ == 0) ++sat_[static_cast<std::size_t>(w)];
            if (delta < 0 && --cnt == 0) --sat_[static_cast<std::size_t>(w)];
        }
    }

    // Returns true once the lower bound is met.
    bool search(int colored, int used) {
        if (budget_ != 0 && ++nodes_ > budget_)
            throw BudgetExceededError("chromatic search exceeded node budget of " + std::to_string(budget_));
        if (colored == n_) {
            best_ = used;
            best_coloring_ = color_;
            return best_ <= lower_;
        }
        const auto width = static_cast<std::size_t>(count_.size() / static_cast<std::size_t>(n_));
        const Vertex v = pick();
        // best_ can shrink while we iterate, so the bound is re-read each time.
        for (int c = 0; c < std::min(used + 1, best_ - 1); ++c) {
            if (count_[idx(v, c, width)] != 0) continue;
            assign(v, c, width, +1);
            const bool done = search(colored + 1, std::max(used, c + 1));
            assign(v, c, width, -1);
            if (done) return true;
        }
        return false;
    }

    const SimpleGraph& g_;
    int n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int lower_ = 1;
    int best_ = 0;
    std::vector<int> best_coloring_;
    std::vector<int> color_;
    std::vector<int> count_;
    std::vector<int> sat_;
};

} // namespace

ChromaticResult chromatic_number(const SimpleGraph& g, const ChromaticOptions& opts) {
    std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
    int chi = 1;
    for (const auto& comp : components(g)) {
        if (comp.size() == 1) continue;
        const SimpleGraph h = g.induced(comp);
        int local = 0;
        DsaturSearch search(h, opts.node_budget);
        const auto local_colors = search.run(local);
        chi = std::max(chi, local);
        for (std::size_t i = 0; i < comp.size(); ++i) colors[static_cast<std::size_t>(comp[i])] = local_colors[i];
    }
    return {chi, Coloring(std::move(colors)).canonical()};
}

Coloring greedy_path_coloring(int n, const DistanceSet& d) {
    d.check_valid_for(MetricSpace::path(n));
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    std::vector<char> taken;
    for (int i = 0; i < n; ++i) {
        taken.assign(d.size() + 2, 0);
        for (int dist : d) {
            const int j = i - dist;
            if (j < 0) continue;
            const auto c = static_cast<std::size_t>(colors[static_cast<std::size_t>(j)]);
            if (c < taken.size()) taken[c] = 1;
        }
        int c = 0;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        colors[static_cast<std::size_t>(i)] = c;
    }
    return Coloring(std::move(colors));
}

} // namespace babai
