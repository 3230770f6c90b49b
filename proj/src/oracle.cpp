#include "balanced/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace balanced {
namespace oracle {

namespace {

struct Search {
    // dist is indexed by state id v * (2B + 1) + (b + B); -1 means unvisited.
    std::vector<std::int32_t> dist;
    std::vector<std::int64_t> parent;  // filled only when keep_parents
    long long width = 0;               // 2B + 1
    long long bound = 0;

    std::int64_t state(Vertex v, long long b) const {
        return static_cast<std::int64_t>(v) * width + (b + bound);
    }
};

Search run_bfs(const DirectedGraph& graph, Vertex s, long long bound, const Limits& limits,
               bool keep_parents) {
    if (bound < 1) throw std::invalid_argument("oracle bound must be >= 1");
    ClassifiedView view(graph);
    const int n = view.vertex_count();
    if (s < 0 || s >= n) throw std::invalid_argument("source out of range");

    Search search;
    search.bound = bound;
    search.width = 2 * bound + 1;
    long long states = static_cast<long long>(n) * search.width;
    if (states > limits.state_cap)
        throw ResourceLimitError("oracle state space " + std::to_string(states) +
                                 " exceeds cap " + std::to_string(limits.state_cap));

    search.dist.assign(static_cast<std::size_t>(states), -1);
    if (keep_parents) search.parent.assign(static_cast<std::size_t>(states), -1);

    std::vector<std::int64_t> queue;
    queue.push_back(search.state(s, 0));
    search.dist[static_cast<std::size_t>(queue[0])] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::int64_t id = queue[head];
        Vertex u = static_cast<Vertex>(id / search.width);
        long long b = id % search.width - bound;
        std::int32_t d = search.dist[static_cast<std::size_t>(id)];
        for (const auto& [v, w] : view.neighbors(u)) {
            long long b2 = b + w;
            if (b2 < -bound || b2 > bound) continue;
            std::int64_t next = search.state(v, b2);
            if (search.dist[static_cast<std::size_t>(next)] >= 0) continue;
            search.dist[static_cast<std::size_t>(next)] = d + 1;
            if (keep_parents) search.parent[static_cast<std::size_t>(next)] = id;
            queue.push_back(next);
        }
    }
    return search;
}

}  // namespace

long long default_bound(int n) { return 3LL * n * n * n; }

long long escalated_bound(int n) { return 16LL * n * n * n; }

std::optional<long long> shortest_balanced(const Instance& instance, long long bound,
                                           const Limits& limits) {
    Search search = run_bfs(instance.graph, instance.s, bound, limits, false);
    std::int32_t d = search.dist[static_cast<std::size_t>(search.state(instance.t, 0))];
    if (d < 0) return std::nullopt;
    return static_cast<long long>(d);
}

std::optional<Walk> shortest_balanced_walk(const Instance& instance, long long bound,
                                           const Limits& limits) {
    Search search = run_bfs(instance.graph, instance.s, bound, limits, true);
    std::int64_t id = search.state(instance.t, 0);
    if (search.dist[static_cast<std::size_t>(id)] < 0) return std::nullopt;
    Walk walk;
    while (id >= 0) {
        walk.push_back(static_cast<Vertex>(id / search.width));
        id = search.parent[static_cast<std::size_t>(id)];
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

std::vector<std::optional<long long>> balanced_distances(const DirectedGraph& graph, Vertex s,
                                                         long long bound, const Limits& limits) {
    Search search = run_bfs(graph, s, bound, limits, false);
    std::vector<std::optional<long long>> out(static_cast<std::size_t>(graph.vertex_count()));
    for (Vertex t = 0; t < graph.vertex_count(); ++t) {
        std::int32_t d = search.dist[static_cast<std::size_t>(search.state(t, 0))];
        if (d >= 0) out[static_cast<std::size_t>(t)] = static_cast<long long>(d);
    }
    return out;
}

}  // namespace oracle
}  // namespace balanced
