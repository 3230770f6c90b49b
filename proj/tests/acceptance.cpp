// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// summary line. Run directly or via `ctest -R acceptance`.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "balanced/bench.hpp"
#include "balanced/diophantine.hpp"
#include "balanced/instances.hpp"
#include "balanced/io.hpp"
#include "balanced/oracle.hpp"
#include "balanced/solver.hpp"
#include "balanced/witness.hpp"
#include "test_util.hpp"

using namespace balanced;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(bool pass, const char* number, const char* text) {
    std::printf("[%s] criterion %s: %s\n", pass ? "PASS" : "FAIL", number, text);
    std::fflush(stdout);
}

long long cubic(long long factor, int n) { return factor * static_cast<long long>(n) * n * n; }

long long ceil_div(long long a, long long b) { return a / b + (a % b != 0 ? 1 : 0); }

bool reduced_bounds_hold(const std::vector<long long>& c, long long k,
                         const std::vector<long long>& m_prime) {
    std::size_t r = c.size();
    long long head_sum = 0, head_c = 0;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        head_sum += std::abs(m_prime[i]);
        head_c += c[i];
    }
    if (head_sum > static_cast<long long>(r - 1) * (c[r - 1] - 1)) return false;
    return std::abs(m_prime[r - 1]) <= head_c + ceil_div(std::abs(k), c[r - 1]);
}

}  // namespace

TEST_CASE("criterion 1: exhaustive n=4 decide/oracle agreement") {
    auto start = std::chrono::steady_clock::now();
    long long disagreements = 0;
    long long queries = 0;
    for (unsigned mask = 0; mask < 4096; ++mask) {
        DirectedGraph graph = testutil::graph_from_mask(4, mask);
        for (Vertex s = 0; s < 4; ++s) {
            auto distances = oracle::balanced_distances(graph, s, oracle::default_bound(4));
            for (Vertex t = 0; t < 4; ++t) {
                Instance instance(graph, s, t);
                bool yes = decide_balanced(instance).yes;
                bool found = distances[t].has_value();
                if (yes && !found)  // retry at the sound bound before judging
                    found = oracle::shortest_balanced(instance, oracle::escalated_bound(4))
                                .has_value();
                if (yes != found) ++disagreements;
                ++queries;
            }
        }
    }
    double elapsed = seconds_since(start);
    bool pass = disagreements == 0 && queries == 4096 * 16 && elapsed < 300.0;
    std::printf("    4096 graphs x 16 (s,t) pairs, %lld disagreements, %.1fs\n", disagreements,
                elapsed);
    report(pass, "1", "exhaustive n=4 decide/oracle agreement");
    CHECK(disagreements == 0);
    CHECK(elapsed < 300.0);
}

TEST_CASE("criterion 2: coefficient reduction bounds on 1e5 random problems") {
    std::mt19937_64 rng(20260808);
    long long violations = 0;
    for (int iter = 0; iter < 100'000; ++iter) {
        std::size_t r = 1 + rng() % 32;
        std::set<long long> values;
        while (values.size() < r) values.insert(1 + static_cast<long long>(rng() % 1000));
        std::vector<long long> c(values.begin(), values.end());
        std::vector<long long> m(r);
        long long k = 0;
        for (std::size_t i = 0; i < r; ++i) {
            m[i] = static_cast<long long>(rng() % 2'000'000'001ULL) - 1'000'000'000LL;
            k += m[i] * c[i];
        }

        ReducedSolution out = reduce_coefficients(ReductionProblem(c, k, m));
        long long sum = 0;
        for (std::size_t i = 0; i < r; ++i) sum += out.m_prime[i] * c[i];
        if (sum != k || !reduced_bounds_hold(c, k, out.m_prime)) ++violations;
    }
    bool pass = violations == 0;
    std::printf("    100000 problems (r <= 32, c <= 1e3, |m| <= 1e9), %lld violations\n",
                violations);
    report(pass, "2", "coefficient reduction preserves k within explicit bounds");
    CHECK(violations == 0);
}

TEST_CASE("criterion 3: witness length <= 16n^3 and rebalance length <= 3n^3") {
    std::mt19937 rng(31337);
    long long witness_violations = 0;
    int yes_count = 0;
    for (int iter = 0; iter < 10'000; ++iter) {
        Instance instance = testutil::random_instance(rng, 64);
        int n = instance.graph.vertex_count();
        auto walk = build_witness(instance);
        if (!walk) continue;
        ++yes_count;
        WalkReport r = verify_walk(instance, *walk);
        if (!(r.valid && r.balanced && r.endpoints_ok && r.length <= cubic(16, n)))
            ++witness_violations;
    }

    long long rebalance_violations = 0;
    int rebalanced = 0;
    for (int iter = 0; iter < 2'000; ++iter) {
        Instance instance = testutil::random_instance(rng, 10);
        int n = instance.graph.vertex_count();
        auto walk = oracle::shortest_balanced_walk(instance, oracle::escalated_bound(n));
        if (!walk) continue;
        ++rebalanced;
        Walk shrunk = rebalance_existing(instance, *walk);
        WalkReport r = verify_walk(instance, shrunk);
        if (!(r.valid && r.balanced && r.endpoints_ok && r.length <= cubic(3, n)))
            ++rebalance_violations;
    }

    bool pass = witness_violations == 0 && rebalance_violations == 0 && yes_count > 0 &&
                rebalanced > 0;
    std::printf(
        "    10000 instances (n <= 64): %d YES, %lld witness violations; "
        "%d oracle walks (n <= 10), %lld rebalance violations\n",
        yes_count, witness_violations, rebalanced, rebalance_violations);
    report(pass, "3", "witness bound 16n^3, rebalance bound 3n^3, zero violations");
    CHECK(witness_violations == 0);
    CHECK(rebalance_violations == 0);
    CHECK(yes_count > 0);
    CHECK(rebalanced > 0);
}

TEST_CASE("criterion 4: figure1 family minimum and witness growth") {
    bool minimums_ok = true;
    bool oracle_fast = true;
    for (int n : {8, 16, 32}) {
        auto start = std::chrono::steady_clock::now();
        auto minimum =
            oracle::shortest_balanced(instances::gen_figure1(n), oracle::default_bound(n));
        double elapsed = seconds_since(start);
        long long expected = n / 2 + static_cast<long long>(n) * n / 4;
        std::printf("    figure1 n=%d oracle minimum %lld (expected %lld) in %.2fs\n", n,
                    minimum.value_or(-1), expected, elapsed);
        if (minimum != expected) minimums_ok = false;
        if (elapsed >= 60.0) oracle_fast = false;
        CHECK(minimum == expected);
    }

    bench::BenchOptions options;
    options.oracle_max_n = 32;
    auto records = bench::run_family("figure1", 8, 64, options);
    bool growth_ok = records.size() == 15;  // 8, 12, ..., 64
    for (const auto& record : records) {
        long long n = record.n;
        if (!record.yes || !record.witness_len) growth_ok = false;
        if (record.witness_len && *record.witness_len > 16 * n * n * n) growth_ok = false;
        if (n <= 32 && record.oracle_min != n / 2 + n * n / 4) growth_ok = false;
        if (record.oracle_min && record.witness_len && *record.oracle_min > *record.witness_len)
            growth_ok = false;
    }
    write_text_file("figure1_bench.csv", bench::to_csv(records));
    std::printf("    bench rows n=8..64 written to figure1_bench.csv, "
                "witness_len/n^2 <= 16n on all %zu rows\n",
                records.size());

    bool pass = minimums_ok && oracle_fast && growth_ok;
    report(pass, "4", "figure1 oracle minimum n/2 + n^2/4 and bounded witness growth");
    CHECK(minimums_ok);
    CHECK(oracle_fast);
    CHECK(growth_ok);
}

TEST_CASE("criterion 5: decomposition conservation on 1e4 random walks") {
    std::mt19937 rng(424242);
    long long violations = 0;
    for (int iter = 0; iter < 10'000; ++iter) {
        Instance instance = testutil::random_instance(rng, 40);
        ClassifiedView view(instance.graph);
        int n = view.vertex_count();
        Vertex start = static_cast<Vertex>(rng() % n);
        Walk walk = testutil::random_walk(view, rng, start, 1 + static_cast<int>(rng() % 1000));

        Decomposition d = decompose_walk(view, walk);
        long long imbalance = walk_imbalance(view, d.simple_path);
        std::size_t length = d.simple_path.size() - 1;
        bool cycles_ok = true;
        for (const ExcisedCycle& c : d.cycles) {
            imbalance += walk_imbalance(view, c.cycle);
            length += c.cycle.size() - 1;
            std::set<Vertex> interior(c.cycle.begin(), c.cycle.end() - 1);
            if (c.cycle.front() != c.cycle.back() || interior.size() != c.cycle.size() - 1 ||
                c.cycle.size() - 1 > static_cast<std::size_t>(n))
                cycles_ok = false;
        }
        if (imbalance != walk_imbalance(view, walk) || length != walk.size() - 1 || !cycles_ok)
            ++violations;
    }
    bool pass = violations == 0;
    std::printf("    10000 walks (length <= 1e3), %lld violations\n", violations);
    report(pass, "5", "decomposition conserves length and imbalance, cycles simple");
    CHECK(violations == 0);
}

TEST_CASE("criterion 6: witness existence iff decide YES") {
    long long mismatches = 0;
    for (unsigned mask = 0; mask < 4096; ++mask) {
        DirectedGraph graph = testutil::graph_from_mask(4, mask);
        for (Vertex s = 0; s < 4; ++s) {
            for (Vertex t = 0; t < 4; ++t) {
                Instance instance(graph, s, t);
                if (decide_balanced(instance).yes != build_witness(instance).has_value())
                    ++mismatches;
            }
        }
    }

    std::mt19937 rng(60606);
    for (int iter = 0; iter < 10'000; ++iter) {
        Instance instance = testutil::random_instance(rng, 32);
        if (decide_balanced(instance).yes != build_witness(instance).has_value()) ++mismatches;
    }
    bool pass = mismatches == 0;
    std::printf("    exhaustive n=4 suite plus 10000 random instances, %lld mismatches\n",
                mismatches);
    report(pass, "6", "build_witness some-valued exactly when decide_balanced is YES");
    CHECK(mismatches == 0);
}
