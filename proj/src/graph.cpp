#include "balanced/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace balanced {

DirectedGraph::DirectedGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (const auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop rejected: (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate directed edge");
}

bool DirectedGraph::has_edge(Vertex u, Vertex v) const {
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

const char* to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::Neutral: return "neutral";
        case EdgeClass::Forward: return "forward";
        case EdgeClass::Backward: return "backward";
    }
    return "?";
}

ClassifiedView::ClassifiedView(const DirectedGraph& g)
    : n_(g.vertex_count()), pair_count_(0), adj_(static_cast<std::size_t>(g.vertex_count())) {
    for (const auto& [u, v] : g.edges()) {
        if (u < v) {
            int w = g.has_edge(v, u) ? 0 : +1;  // weight for u -> v
            adj_[static_cast<std::size_t>(u)].push_back({v, w});
            adj_[static_cast<std::size_t>(v)].push_back({u, -w});
            ++pair_count_;
        } else if (!g.has_edge(v, u)) {
            // (u, v) with u > v and no opposite edge: backward-only pair.
            adj_[static_cast<std::size_t>(v)].push_back({u, -1});
            adj_[static_cast<std::size_t>(u)].push_back({v, +1});
            ++pair_count_;
        }
        // u > v with the opposite edge present was handled when scanning (v, u).
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool ClassifiedView::has_pair(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& list = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const std::pair<Vertex, int>& e, Vertex x) { return e.first < x; });
    return it != list.end() && it->first == v;
}

int ClassifiedView::weight(Vertex u, Vertex v) const {
    if (u >= 0 && u < n_ && v >= 0 && v < n_) {
        const auto& list = adj_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(list.begin(), list.end(), v,
                                   [](const std::pair<Vertex, int>& e, Vertex x) { return e.first < x; });
        if (it != list.end() && it->first == v) return it->second;
    }
    throw NoSuchEdgeError("no such edge: {" + std::to_string(u) + ", " + std::to_string(v) + "}");
}

EdgeClass ClassifiedView::classify(Vertex u, Vertex v) const {
    switch (weight(u, v)) {
        case +1: return EdgeClass::Forward;
        case -1: return EdgeClass::Backward;
        default: return EdgeClass::Neutral;
    }
}

const std::vector<std::pair<Vertex, int>>& ClassifiedView::neighbors(Vertex u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("vertex id out of range: " + std::to_string(u));
    return adj_[static_cast<std::size_t>(u)];
}

long long walk_imbalance(const ClassifiedView& view, const Walk& walk) {
    if (walk.empty()) throw std::invalid_argument("walk must contain at least one vertex");
    if (walk[0] < 0 || walk[0] >= view.vertex_count())
        throw WalkError(0, "vertex id out of range: " + std::to_string(walk[0]));
    long long sum = 0;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        Vertex u = walk[i], v = walk[i + 1];
        if (v < 0 || v >= view.vertex_count())
            throw WalkError(i, "vertex id out of range: " + std::to_string(v));
        if (!view.has_pair(u, v))
            throw WalkError(i, "no such edge: {" + std::to_string(u) + ", " + std::to_string(v) + "}");
        sum += view.weight(u, v);
    }
    return sum;
}

bool is_valid_walk(const ClassifiedView& view, const Walk& walk) {
    if (walk.empty()) return false;
    if (walk[0] < 0 || walk[0] >= view.vertex_count()) return false;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        if (walk[i + 1] < 0 || walk[i + 1] >= view.vertex_count()) return false;
        if (!view.has_pair(walk[i], walk[i + 1])) return false;
    }
    return true;
}

Walk reversed_walk(const Walk& walk) { return Walk(walk.rbegin(), walk.rend()); }

Instance::Instance(DirectedGraph graph_, Vertex s_, Vertex t_)
    : graph(std::move(graph_)), s(s_), t(t_) {
    if (s < 0 || s >= graph.vertex_count()) throw std::invalid_argument("s out of range");
    if (t < 0 || t >= graph.vertex_count()) throw std::invalid_argument("t out of range");
}

}  // namespace balanced
