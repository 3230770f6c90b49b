#pragma once

#include <optional>
#include <vector>

#include "balanced/graph.hpp"

namespace balanced {
namespace oracle {

/// Ceiling on the explored product space n * (2B + 1); exceeding it raises
/// ResourceLimitError rather than risking a wrong answer.
struct Limits {
    long long state_cap = 30'000'000;
};

/// 3*n^3: enough for routine differential tests.
long long default_bound(int n);
/// 16*n^3: covers every witness this library can construct, so a none at
/// this bound is a sound NO.
long long escalated_bound(int n);

/// Minimal length of a balanced s -> t walk whose every prefix imbalance
/// stays within [-B, B], or nullopt if none exists. Plain BFS over
/// (vertex, imbalance) states from (s, 0).
std::optional<long long> shortest_balanced(const Instance& instance, long long bound,
                                           const Limits& limits = {});

/// Same search, reconstructing one minimal walk from BFS parents.
std::optional<Walk> shortest_balanced_walk(const Instance& instance, long long bound,
                                           const Limits& limits = {});

/// One BFS from s answering all targets at once: entry t is the minimal
/// balanced s -> t walk length under the prefix bound, or nullopt.
std::vector<std::optional<long long>> balanced_distances(const DirectedGraph& graph, Vertex s,
                                                         long long bound,
                                                         const Limits& limits = {});

}  // namespace oracle
}  // namespace balanced
