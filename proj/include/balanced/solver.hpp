#pragma once

#include <optional>
#include <vector>

#include "balanced/graph.hpp"

namespace balanced {

/// Neighbor visit order during spanning-tree construction. Fixed orders make
/// every tree, potential, and witness reproducible; Descending exists so
/// tests can check that answers do not depend on the choice.
enum class TieBreak { AscendingIds, DescendingIds };

/// Breadth-first spanning tree of root's component with an integer potential
/// per reached vertex: p(root) = 0 and p(child) = p(parent) + w(parent->child),
/// so p(v) is the imbalance of the tree path root -> v.
struct PotentialAssignment {
    Vertex root = 0;
    std::vector<Vertex> parent;        // -1 for the root and unreached vertices
    std::vector<long long> potential;  // meaningful where reached
    std::vector<int> depth;            // tree edges from root; -1 if unreached
    std::vector<bool> reached;

    bool covers(Vertex v) const { return reached[static_cast<std::size_t>(v)]; }
};

PotentialAssignment compute_potentials(const ClassifiedView& view, Vertex root,
                                       TieBreak tie_break = TieBreak::AscendingIds);

/// Unique tree walk a -> ... -> b (both endpoints reached). Simple; its
/// imbalance is p(b) - p(a).
Walk tree_path(const PotentialAssignment& potentials, Vertex a, Vertex b);

/// A present pair outside the spanning tree, with the discrepancy
/// delta = p(u) + w(u->v) - p(v). Closing the pair against the tree yields a
/// cycle of imbalance exactly delta.
struct NonTreePair {
    Vertex u, v;
    long long delta;
};

/// g is the gcd of |delta| over all non-tree pairs of the component
/// (g = 0 when there are none or all discrepancies vanish).
///
/// Every closed walk in the component has imbalance divisible by g: walking
/// any closed walk and repeatedly splicing tree detours shows its imbalance
/// is an integer combination of the fundamental discrepancies. Hence the
/// imbalances achievable by s -> t walks form exactly the coset p(t) + g*Z.
struct CycleStructure {
    long long g = 0;
    std::vector<NonTreePair> pairs;  // ascending (u, v), u < v
};

CycleStructure cycle_gcd(const ClassifiedView& view, const PotentialAssignment& potentials);

/// Materializes the closed walk for a non-tree pair: u -> v across the pair,
/// then back v -> u through the tree. Length <= 2(n-1) + 1, imbalance ==
/// pair.delta.
Walk fundamental_cycle(const PotentialAssignment& potentials, const NonTreePair& pair);

enum class NoReason { Disconnected, CosetMissesZero };

const char* to_string(NoReason reason);

struct Verdict {
    bool yes = false;
    std::optional<long long> k0;  // p(t) rooted at s; absent when disconnected
    long long g = 0;              // cycle gcd of s's component
    std::optional<NoReason> reason;
    std::optional<Walk> witness;  // attached by the witness layer when requested
};

/// YES iff t lies in s's component and the coset p(t) + g*Z contains 0,
/// i.e. g > 0 and g | p(t), or g == 0 and p(t) == 0. Does not build a witness.
Verdict decide_balanced(const Instance& instance, TieBreak tie_break = TieBreak::AscendingIds);

}  // namespace balanced
