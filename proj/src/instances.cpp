#include "balanced/instances.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace balanced {
namespace instances {

namespace {

void require_figure1_n(int n) {
    if (n < 8 || n % 4 != 0)
        throw std::invalid_argument("figure1 requires n >= 8 and n divisible by 4");
}

// Uniform in [0, 1) from the raw engine word; std::uniform_real_distribution
// is implementation-defined, this is not.
double next_unit(std::mt19937& rng) { return std::ldexp(static_cast<double>(rng()), -32); }

}  // namespace

Figure1Layout figure1_layout(int n) {
    require_figure1_n(n);
    Figure1Layout layout;
    layout.n = n;
    const int half = n / 2;
    layout.path.reserve(static_cast<std::size_t>(half) + 1);
    for (Vertex i = 0; i <= half; ++i) layout.path.push_back(i);
    layout.v = static_cast<Vertex>(n / 4);
    layout.u = static_cast<Vertex>(n - 1);
    // Cycle vertices q1..q_{half-1} take the ids after the path.
    layout.loop.push_back(layout.v);
    for (Vertex j = 1; j < half; ++j) layout.loop.push_back(static_cast<Vertex>(half + j));
    layout.loop.push_back(layout.v);
    return layout;
}

Instance gen_figure1(int n) {
    Figure1Layout layout = figure1_layout(n);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i + 1 < layout.path.size(); ++i)
        edges.push_back({layout.path[i], layout.path[i + 1]});
    // All cycle edges neutral except the lone directed edge (v, u).
    for (std::size_t i = 0; i + 1 < layout.loop.size(); ++i) {
        Vertex a = layout.loop[i], b = layout.loop[i + 1];
        if (a == layout.u && b == layout.v) {
            edges.push_back({layout.v, layout.u});
        } else {
            edges.push_back({a, b});
            edges.push_back({b, a});
        }
    }
    return Instance(DirectedGraph(n, std::move(edges)), layout.path.front(), layout.path.back());
}

Walk figure1_canonical_walk(int n) {
    Figure1Layout layout = figure1_layout(n);
    Walk walk(layout.path.begin(), layout.path.begin() + layout.v + 1);
    for (int lap = 0; lap < n / 2; ++lap)
        walk.insert(walk.end(), layout.loop.begin() + 1, layout.loop.end());
    walk.insert(walk.end(), layout.path.begin() + layout.v + 1, layout.path.end());
    return walk;
}

Instance gen_random(int n, double p_directed, double p_neutral, std::uint32_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random requires n >= 1");
    if (p_directed < 0 || p_directed > 1 || p_neutral < 0 || p_neutral > 1)
        throw std::invalid_argument("probabilities must lie in [0, 1]");

    std::mt19937 rng(seed);
    auto s = static_cast<Vertex>(rng() % static_cast<std::uint32_t>(n));
    auto t = static_cast<Vertex>(rng() % static_cast<std::uint32_t>(n));

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (next_unit(rng) < p_neutral) {
                edges.push_back({u, v});
                edges.push_back({v, u});
            } else if (next_unit(rng) < p_directed) {
                if (rng() & 1u) {
                    edges.push_back({u, v});
                } else {
                    edges.push_back({v, u});
                }
            }
        }
    }
    return Instance(DirectedGraph(n, std::move(edges)), s, t);
}

const char* to_string(DegenerateKind kind) {
    switch (kind) {
        case DegenerateKind::Tree: return "tree";
        case DegenerateKind::AllNeutral: return "all-neutral";
        case DegenerateKind::SingleDirectedCycle: return "single-directed-cycle";
        case DegenerateKind::Disconnected: return "disconnected";
    }
    return "?";
}

DegenerateKind degenerate_kind_from_string(const std::string& name) {
    if (name == "tree") return DegenerateKind::Tree;
    if (name == "all-neutral") return DegenerateKind::AllNeutral;
    if (name == "single-directed-cycle") return DegenerateKind::SingleDirectedCycle;
    if (name == "disconnected") return DegenerateKind::Disconnected;
    throw std::invalid_argument("unknown degenerate kind: " + name);
}

Instance gen_degenerate(DegenerateKind kind, int n) {
    if (n < 2) throw std::invalid_argument("degenerate families require n >= 2");
    std::vector<std::pair<Vertex, Vertex>> edges;
    switch (kind) {
        case DegenerateKind::Tree:
            for (Vertex i = 1; i < n; ++i) {
                Vertex parent = (i - 1) / 2;
                if (i % 2 == 1) {
                    edges.push_back({parent, i});
                } else {
                    edges.push_back({i, parent});
                }
            }
            return Instance(DirectedGraph(n, std::move(edges)), 0, static_cast<Vertex>(n - 1));
        case DegenerateKind::AllNeutral:
            for (Vertex i = 0; i + 1 < n; ++i) {
                edges.push_back({i, static_cast<Vertex>(i + 1)});
                edges.push_back({static_cast<Vertex>(i + 1), i});
            }
            return Instance(DirectedGraph(n, std::move(edges)), 0, static_cast<Vertex>(n - 1));
        case DegenerateKind::SingleDirectedCycle:
            // A directed 2-cycle collapses to a single neutral pair, which is
            // not a cycle in the undirected view; the family starts at n = 3.
            if (n < 3)
                throw std::invalid_argument("single-directed-cycle requires n >= 3");
            for (Vertex i = 0; i < n; ++i)
                edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
            return Instance(DirectedGraph(n, std::move(edges)), 0, 1);
        case DegenerateKind::Disconnected: {
            int half = (n + 1) / 2;
            for (Vertex i = 0; i + 1 < half; ++i) {
                edges.push_back({i, static_cast<Vertex>(i + 1)});
                edges.push_back({static_cast<Vertex>(i + 1), i});
            }
            for (Vertex i = static_cast<Vertex>(half); i + 1 < n; ++i) {
                edges.push_back({i, static_cast<Vertex>(i + 1)});
                edges.push_back({static_cast<Vertex>(i + 1), i});
            }
            return Instance(DirectedGraph(n, std::move(edges)), 0, static_cast<Vertex>(n - 1));
        }
    }
    throw std::invalid_argument("unknown degenerate kind");
}

}  // namespace instances
}  // namespace balanced
