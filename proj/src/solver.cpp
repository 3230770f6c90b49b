#include "balanced/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace balanced {

PotentialAssignment compute_potentials(const ClassifiedView& view, Vertex root,
                                       TieBreak tie_break) {
    const int n = view.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");

    PotentialAssignment out;
    out.root = root;
    out.parent.assign(static_cast<std::size_t>(n), -1);
    out.potential.assign(static_cast<std::size_t>(n), 0);
    out.depth.assign(static_cast<std::size_t>(n), -1);
    out.reached.assign(static_cast<std::size_t>(n), false);

    std::queue<Vertex> queue;
    out.reached[static_cast<std::size_t>(root)] = true;
    out.depth[static_cast<std::size_t>(root)] = 0;
    queue.push(root);
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        const auto& adjacent = view.neighbors(u);  // sorted ascending by id
        auto visit = [&](const std::pair<Vertex, int>& edge) {
            auto [v, w] = edge;
            auto vi = static_cast<std::size_t>(v);
            if (out.reached[vi]) return;
            out.reached[vi] = true;
            out.parent[vi] = u;
            out.potential[vi] = out.potential[static_cast<std::size_t>(u)] + w;
            out.depth[vi] = out.depth[static_cast<std::size_t>(u)] + 1;
            queue.push(v);
        };
        if (tie_break == TieBreak::AscendingIds) {
            for (const auto& edge : adjacent) visit(edge);
        } else {
            for (auto it = adjacent.rbegin(); it != adjacent.rend(); ++it) visit(*it);
        }
    }
    return out;
}

Walk tree_path(const PotentialAssignment& potentials, Vertex a, Vertex b) {
    if (!potentials.covers(a) || !potentials.covers(b))
        throw std::invalid_argument("tree_path endpoints must be reached");

    // Climb both endpoints to equal depth, then in lockstep to the meeting
    // point; the halves join there.
    Walk from_a{a};
    Walk from_b{b};
    Vertex x = a, y = b;
    auto depth = [&](Vertex v) { return potentials.depth[static_cast<std::size_t>(v)]; };
    auto parent = [&](Vertex v) { return potentials.parent[static_cast<std::size_t>(v)]; };
    while (depth(x) > depth(y)) from_a.push_back(x = parent(x));
    while (depth(y) > depth(x)) from_b.push_back(y = parent(y));
    while (x != y) {
        from_a.push_back(x = parent(x));
        from_b.push_back(y = parent(y));
    }
    from_a.insert(from_a.end(), from_b.rbegin() + 1, from_b.rend());
    return from_a;
}

CycleStructure cycle_gcd(const ClassifiedView& view, const PotentialAssignment& potentials) {
    CycleStructure out;
    const int n = view.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
        if (!potentials.covers(u)) continue;
        for (const auto& [v, w] : view.neighbors(u)) {
            if (u >= v) continue;  // one record per unordered pair
            if (potentials.parent[static_cast<std::size_t>(v)] == u ||
                potentials.parent[static_cast<std::size_t>(u)] == v)
                continue;
            long long delta = potentials.potential[static_cast<std::size_t>(u)] + w -
                              potentials.potential[static_cast<std::size_t>(v)];
            out.pairs.push_back({u, v, delta});
            out.g = std::gcd(out.g, std::abs(delta));
        }
    }
    return out;
}

Walk fundamental_cycle(const PotentialAssignment& potentials, const NonTreePair& pair) {
    Walk cycle{pair.u};
    Walk back = tree_path(potentials, pair.v, pair.u);
    cycle.insert(cycle.end(), back.begin(), back.end());
    return cycle;
}

const char* to_string(NoReason reason) {
    switch (reason) {
        case NoReason::Disconnected: return "disconnected";
        case NoReason::CosetMissesZero: return "coset-misses-zero";
    }
    return "?";
}

Verdict decide_balanced(const Instance& instance, TieBreak tie_break) {
    ClassifiedView view(instance.graph);
    PotentialAssignment potentials = compute_potentials(view, instance.s, tie_break);
    CycleStructure cycles = cycle_gcd(view, potentials);

    Verdict verdict;
    verdict.g = cycles.g;
    if (!potentials.covers(instance.t)) {
        verdict.yes = false;
        verdict.reason = NoReason::Disconnected;
        return verdict;
    }
    long long k0 = potentials.potential[static_cast<std::size_t>(instance.t)];
    verdict.k0 = k0;
    verdict.yes = cycles.g > 0 ? k0 % cycles.g == 0 : k0 == 0;
    if (!verdict.yes) verdict.reason = NoReason::CosetMissesZero;
    return verdict;
}

}  // namespace balanced
