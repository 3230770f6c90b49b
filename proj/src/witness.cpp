#include "balanced/witness.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "balanced/diophantine.hpp"

namespace balanced {

namespace {

// Rotates a closed walk so it starts and ends at anchor (which must occur on
// it). Rotation traverses the same directed steps, so imbalance is unchanged.
Walk rotate_closed_walk(const Walk& cycle, Vertex anchor) {
    assert(cycle.size() >= 2 && cycle.front() == cycle.back());
    auto it = std::find(cycle.begin(), cycle.end() - 1, anchor);
    assert(it != cycle.end() - 1);
    Walk rotated(it, cycle.end() - 1);
    rotated.insert(rotated.end(), cycle.begin(), it + 1);
    return rotated;
}

// Closed walk oriented so its imbalance is +value; reversing a walk negates
// its imbalance by skew symmetry.
Walk orient_positive(const ClassifiedView& view, Walk cycle, long long value) {
    long long imbalance = walk_imbalance(view, cycle);
    assert(std::abs(imbalance) == value);
    if (imbalance < 0) {
        cycle = reversed_walk(cycle);
        assert(walk_imbalance(view, cycle) == value);
    }
    return cycle;
}

struct Excursion {
    long long value = 0;       // c_i
    long long multiplier = 0;  // m'_i, nonzero
    Walk cycle;                // closed at anchor, imbalance +value
    Vertex anchor = 0;
};

// Spine first, then one out-and-back excursion per value in ascending order:
// tree connector from t to the anchor, |m| laps (reverse laps for negative
// multipliers), connector back. The connector halves cancel, so each
// excursion shifts the imbalance by exactly multiplier * value.
Walk assemble(const Walk& spine, const PotentialAssignment& t_rooted,
              const std::vector<Excursion>& excursions) {
    Walk q = spine;
    for (const Excursion& excursion : excursions) {
        assert(excursion.multiplier != 0);
        Walk connector = tree_path(t_rooted, t_rooted.root, excursion.anchor);
        q.insert(q.end(), connector.begin() + 1, connector.end());
        Walk lap = excursion.multiplier > 0 ? excursion.cycle : reversed_walk(excursion.cycle);
        for (long long i = std::abs(excursion.multiplier); i > 0; --i)
            q.insert(q.end(), lap.begin() + 1, lap.end());
        q.insert(q.end(), connector.rbegin() + 1, connector.rend());
    }
    return q;
}

long long cubic_bound(long long factor, int n) {
    return factor * static_cast<long long>(n) * n * n;
}

}  // namespace

Decomposition decompose_walk(const ClassifiedView& view, const Walk& walk) {
    const long long total_imbalance = walk_imbalance(view, walk);  // validates

    Decomposition out;
    std::vector<int> stack_pos(static_cast<std::size_t>(view.vertex_count()), -1);
    Walk& stack = out.simple_path;
    stack.push_back(walk[0]);
    stack_pos[static_cast<std::size_t>(walk[0])] = 0;

    for (std::size_t i = 1; i < walk.size(); ++i) {
        Vertex v = walk[i];
        int pos = stack_pos[static_cast<std::size_t>(v)];
        if (pos < 0) {
            stack_pos[static_cast<std::size_t>(v)] = static_cast<int>(stack.size());
            stack.push_back(v);
            continue;
        }
        ExcisedCycle cycle;
        cycle.cycle.assign(stack.begin() + pos, stack.end());
        cycle.cycle.push_back(v);
        cycle.excised_at = i;
        for (std::size_t j = stack.size(); j > static_cast<std::size_t>(pos) + 1; --j)
            stack_pos[static_cast<std::size_t>(stack[j - 1])] = -1;
        stack.resize(static_cast<std::size_t>(pos) + 1);
        out.cycles.push_back(std::move(cycle));
    }

#ifndef NDEBUG
    long long piece_imbalance = walk_imbalance(view, out.simple_path);
    std::size_t piece_length = out.simple_path.size() - 1;
    for (const ExcisedCycle& c : out.cycles) {
        piece_imbalance += walk_imbalance(view, c.cycle);
        piece_length += c.cycle.size() - 1;
    }
    assert(piece_imbalance == total_imbalance);
    assert(piece_length == walk.size() - 1);
#else
    (void)total_imbalance;
#endif
    return out;
}

Walk rebalance_existing(const Instance& instance, const Walk& walk) {
    ClassifiedView view(instance.graph);
    if (walk.empty() || walk.front() != instance.s || walk.back() != instance.t)
        throw std::invalid_argument("rebalance_existing requires an s -> t walk");
    if (!is_valid_walk(view, walk))
        throw std::invalid_argument("rebalance_existing requires a valid walk");
    if (long long imbalance = walk_imbalance(view, walk); imbalance != 0)
        throw std::invalid_argument("rebalance_existing requires a balanced walk, got imbalance " +
                                    std::to_string(imbalance));

    Decomposition decomposition = decompose_walk(view, walk);
    PotentialAssignment t_rooted = compute_potentials(view, instance.t);
    const long long k = -walk_imbalance(view, decomposition.simple_path);

    // Net the excised cycles per absolute imbalance value and keep the
    // shortest cycle of each value as the lap template (ties: smallest
    // anchor id, then excision order).
    struct Group {
        long long net = 0;
        std::size_t length = 0;
        Vertex anchor = 0;
        std::size_t order = 0;
        const Walk* cycle = nullptr;
    };
    std::map<long long, Group> groups;
    auto depth_of = [&](Vertex v) { return t_rooted.depth[static_cast<std::size_t>(v)]; };
    for (std::size_t index = 0; index < decomposition.cycles.size(); ++index) {
        const Walk& cycle = decomposition.cycles[index].cycle;
        long long imbalance = walk_imbalance(view, cycle);
        if (imbalance == 0) continue;
        long long value = std::abs(imbalance);

        Vertex anchor = cycle[0];
        for (std::size_t j = 1; j + 1 < cycle.size(); ++j) {
            Vertex v = cycle[j];
            if (depth_of(v) < depth_of(anchor) || (depth_of(v) == depth_of(anchor) && v < anchor))
                anchor = v;
        }

        Group& group = groups[value];
        group.net += imbalance > 0 ? 1 : -1;
        std::size_t length = cycle.size() - 1;
        bool better = group.cycle == nullptr || length < group.length ||
                      (length == group.length && anchor < group.anchor);
        if (better) {
            group.length = length;
            group.anchor = anchor;
            group.order = index;
            group.cycle = &cycle;
        }
    }

    std::vector<long long> values;
    std::vector<long long> multipliers;
    for (const auto& [value, group] : groups) {
        if (group.net == 0) continue;
        values.push_back(value);
        multipliers.push_back(group.net);
    }

    if (values.empty()) {
        if (k != 0) throw std::logic_error("balanced walk decomposed to nonzero residue");
        return decomposition.simple_path;
    }

    long long check = 0;
    for (std::size_t i = 0; i < values.size(); ++i) check += multipliers[i] * values[i];
    if (check != k) throw std::logic_error("cycle grouping lost the residue sum");

    ReducedSolution reduced = reduce_coefficients(ReductionProblem(values, k, multipliers));

    std::vector<Excursion> excursions;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (reduced.m_prime[i] == 0) continue;
        const Group& group = groups.at(values[i]);
        Excursion excursion;
        excursion.value = values[i];
        excursion.multiplier = reduced.m_prime[i];
        excursion.anchor = group.anchor;
        excursion.cycle =
            orient_positive(view, rotate_closed_walk(*group.cycle, group.anchor), values[i]);
        excursions.push_back(std::move(excursion));
    }

    Walk result = assemble(decomposition.simple_path, t_rooted, excursions);
    assert(walk_imbalance(view, result) == 0);
    assert(static_cast<long long>(result.size()) - 1 <= cubic_bound(3, view.vertex_count()));
    return result;
}

std::optional<Walk> build_witness(const Instance& instance) {
    if (!decide_balanced(instance).yes) return std::nullopt;

    ClassifiedView view(instance.graph);
    PotentialAssignment t_rooted = compute_potentials(view, instance.t);
    CycleStructure cycles = cycle_gcd(view, t_rooted);

    Walk spine = tree_path(t_rooted, instance.s, instance.t);
    const long long k = -walk_imbalance(view, spine);

    // One representative pair per nonzero |discrepancy| value; deduplication
    // keeps the value set, hence the gcd. Representative: shortest fundamental
    // cycle, ties by smaller anchor id, then pair order.
    auto depth_of = [&](Vertex v) { return t_rooted.depth[static_cast<std::size_t>(v)]; };
    auto lca_depth = [&](Vertex a, Vertex b) {
        while (depth_of(a) > depth_of(b)) a = t_rooted.parent[static_cast<std::size_t>(a)];
        while (depth_of(b) > depth_of(a)) b = t_rooted.parent[static_cast<std::size_t>(b)];
        while (a != b) {
            a = t_rooted.parent[static_cast<std::size_t>(a)];
            b = t_rooted.parent[static_cast<std::size_t>(b)];
        }
        return depth_of(a);
    };

    struct Candidate {
        std::size_t length = 0;
        Vertex anchor = 0;
        const NonTreePair* pair = nullptr;
    };
    std::map<long long, Candidate> candidates;
    for (const NonTreePair& pair : cycles.pairs) {
        if (pair.delta == 0) continue;
        long long value = std::abs(pair.delta);
        std::size_t length = 1 + static_cast<std::size_t>(depth_of(pair.u) + depth_of(pair.v) -
                                                          2 * lca_depth(pair.u, pair.v));
        Vertex anchor = depth_of(pair.u) < depth_of(pair.v)               ? pair.u
                        : depth_of(pair.v) < depth_of(pair.u)             ? pair.v
                        : std::min(pair.u, pair.v);
        Candidate& best = candidates[value];
        if (best.pair == nullptr || length < best.length ||
            (length == best.length && anchor < best.anchor)) {
            best = {length, anchor, &pair};
        }
    }

    std::vector<long long> values;
    values.reserve(candidates.size());
    for (const auto& [value, candidate] : candidates) values.push_back(value);

    std::optional<std::vector<long long>> multipliers = solve_bounded(values, k);
    if (!multipliers)
        throw std::logic_error("decision said YES but the residue is not representable");

    std::vector<Excursion> excursions;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if ((*multipliers)[i] == 0) continue;
        const Candidate& candidate = candidates.at(values[i]);
        Excursion excursion;
        excursion.value = values[i];
        excursion.multiplier = (*multipliers)[i];
        excursion.anchor = candidate.anchor;
        Walk cycle = fundamental_cycle(t_rooted, *candidate.pair);
        excursion.cycle =
            orient_positive(view, rotate_closed_walk(cycle, candidate.anchor), values[i]);
        excursions.push_back(std::move(excursion));
    }

    Walk result = assemble(spine, t_rooted, excursions);
    assert(walk_imbalance(view, result) == 0);
    assert(result.front() == instance.s && result.back() == instance.t);
    assert(static_cast<long long>(result.size()) - 1 <= cubic_bound(16, view.vertex_count()));
    return result;
}

WalkReport verify_walk(const Instance& instance, const Walk& walk) {
    ClassifiedView view(instance.graph);
    WalkReport report;
    report.length = walk.empty() ? 0 : static_cast<long long>(walk.size()) - 1;
    report.valid = is_valid_walk(view, walk);
    if (report.valid) report.imbalance = walk_imbalance(view, walk);
    report.balanced = report.valid && report.imbalance == 0;
    report.endpoints_ok = !walk.empty() && walk.front() == instance.s && walk.back() == instance.t;
    return report;
}

}  // namespace balanced
