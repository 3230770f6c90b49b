#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "balanced/errors.hpp"

namespace balanced {

using Vertex = std::int32_t;

/// A walk is a vertex sequence v0, v1, ..., vL; its length is the number of
/// traversed edges (one less than the vertex count). Vertices and edges may
/// repeat. A single vertex is a walk of length 0.
using Walk = std::vector<Vertex>;

/// Directed graph on dense vertex ids 0..n-1 with set semantics on edges.
/// Self-loops and duplicate directed edges are rejected at construction.
class DirectedGraph {
  public:
    DirectedGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

    int vertex_count() const { return n_; }
    /// Sorted ascending by (u, v).
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_edge(Vertex u, Vertex v) const;

    friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

  private:
    int n_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// Traversal classification of a view pair in direction u -> v.
enum class EdgeClass { Neutral, Forward, Backward };

const char* to_string(EdgeClass c);

/// Undirected view of a DirectedGraph with a per-direction traversal weight:
///   +1 if only (u,v) is a directed edge, -1 if only (v,u) is, 0 if both are.
/// Skew symmetry w(u->v) == -w(v->u) holds for every present pair.
class ClassifiedView {
  public:
    explicit ClassifiedView(const DirectedGraph& g);

    int vertex_count() const { return n_; }
    std::size_t pair_count() const { return pair_count_; }
    bool has_pair(Vertex u, Vertex v) const;
    /// Weight of traversing u -> v; throws NoSuchEdgeError for absent pairs.
    int weight(Vertex u, Vertex v) const;
    EdgeClass classify(Vertex u, Vertex v) const;
    /// Neighbors of u as (vertex, weight of u -> neighbor), sorted by id.
    const std::vector<std::pair<Vertex, int>>& neighbors(Vertex u) const;

  private:
    int n_;
    std::size_t pair_count_;
    std::vector<std::vector<std::pair<Vertex, int>>> adj_;
};

/// Sum of traversal weights along the walk; 0 iff the walk is balanced.
/// Throws WalkError (naming the step) on an absent pair or bad vertex id,
/// std::invalid_argument on an empty vertex sequence.
long long walk_imbalance(const ClassifiedView& view, const Walk& walk);

/// True iff every consecutive pair is present and every id is in range.
bool is_valid_walk(const ClassifiedView& view, const Walk& walk);

Walk reversed_walk(const Walk& walk);

/// A decision problem: graph plus the two distinguished endpoints.
/// s == t is legal; the empty walk at s is balanced, so such queries are YES.
struct Instance {
    Instance(DirectedGraph graph, Vertex s, Vertex t);

    DirectedGraph graph;
    Vertex s;
    Vertex t;

    friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace balanced
