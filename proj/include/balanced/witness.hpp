#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "balanced/graph.hpp"
#include "balanced/solver.hpp"

namespace balanced {

/// A simple closed walk excised during decomposition. excised_at is the index
/// into the original walk of the vertex that closed the cycle.
struct ExcisedCycle {
    Walk cycle;  // first == last, all other vertices distinct, 2..n edges
    std::size_t excised_at;
};

/// Walk rewritten as a repeat-free s -> t path plus simple cycles. Total
/// length and total imbalance are both conserved exactly.
struct Decomposition {
    Walk simple_path;
    std::vector<ExcisedCycle> cycles;
};

/// Stack scan over the walk: whenever the next vertex is already on the
/// stack, the segment above its first occurrence is excised as a simple
/// cycle. Throws WalkError on an invalid walk.
Decomposition decompose_walk(const ClassifiedView& view, const Walk& walk);

/// Rewrites a balanced s -> t walk into a balanced s -> t walk of length at
/// most 3*n^3: decompose, net the excised cycles by absolute imbalance value,
/// shrink the multipliers, then reattach one representative cycle per value
/// through out-and-back tree connectors from t. Throws std::invalid_argument
/// if the input is not a valid balanced s -> t walk.
Walk rebalance_existing(const Instance& instance, const Walk& walk);

/// Constructs a balanced s -> t walk of length at most 16*n^3, or nullopt
/// exactly when decide_balanced answers NO. Uses a t-rooted spanning tree:
/// the tree path s -> t as the spine, fundamental cycles with nonzero
/// discrepancy as the value pool, and bounded multipliers from solve_bounded.
std::optional<Walk> build_witness(const Instance& instance);

/// Independent re-check of a claimed witness against the instance, using only
/// edge-classification primitives. Never trusts solver or witness internals.
struct WalkReport {
    bool valid = false;      // every step is a present pair, ids in range
    long long length = 0;    // number of steps the walk claims
    long long imbalance = 0; // meaningful only when valid
    bool balanced = false;   // valid && imbalance == 0
    bool endpoints_ok = false;
};

WalkReport verify_walk(const Instance& instance, const Walk& walk);

}  // namespace balanced
