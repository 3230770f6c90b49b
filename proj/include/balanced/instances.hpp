#pragma once

#include <cstdint>
#include <string>

#include "balanced/graph.hpp"

namespace balanced {
namespace instances {

/// Vertex ids of the hard family: a directed path of n/2 forward edges from
/// s to t, and at its midpoint v a cycle of n/2 edges that are all neutral
/// except the single directed edge (v, u). One lap of `loop` (v, q1, ...,
/// u, v) ends by traversing u -> v against that directed edge, so each lap
/// has imbalance -1 and n/2 laps cancel the path.
struct Figure1Layout {
    int n = 0;
    Walk path;  // s = path.front(), t = path.back(), n/2 edges
    Walk loop;  // closed at v, n/2 edges, imbalance -1
    Vertex v = 0;
    Vertex u = 0;
};

/// Requires n >= 8 and n divisible by 4 (so the midpoint lands on a vertex).
/// The graph has exactly n vertices and 3n/2 - 1 directed edges.
Instance gen_figure1(int n);

Figure1Layout figure1_layout(int n);

/// The shortest balanced walk of the family: the path with n/2 compensating
/// laps inserted at v. Length n/2 + (n/2)^2.
Walk figure1_canonical_walk(int n);

/// Seeded Erdos-Renyi-style digraph, identical across platforms (mt19937
/// with fixed draw order; no library distributions). Per unordered pair:
/// neutral with probability p_neutral, otherwise a single directed edge with
/// probability p_directed (uniform direction). s and t are drawn first,
/// uniformly and independently.
Instance gen_random(int n, double p_directed, double p_neutral, std::uint32_t seed);

enum class DegenerateKind { Tree, AllNeutral, SingleDirectedCycle, Disconnected };

const char* to_string(DegenerateKind kind);
DegenerateKind degenerate_kind_from_string(const std::string& name);

/// Edge-case families, n >= 2:
///   tree                   heap-shaped tree, alternating edge directions; no cycles so g = 0
///   all-neutral            neutral path 0 - 1 - ... - n-1; every walk is balanced
///   single-directed-cycle  directed n-cycle with s = 0, t = 1; g = n
///   disconnected           two neutral paths with s and t in different halves
Instance gen_degenerate(DegenerateKind kind, int n);

}  // namespace instances
}  // namespace balanced
