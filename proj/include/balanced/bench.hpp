#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace balanced {
namespace bench {

/// One grid point of a growth run. witness_len is present exactly when the
/// verdict is YES; oracle_min when the oracle ran (n small enough) and found
/// a walk.
struct BenchRecord {
    std::string family;
    int n = 0;
    bool yes = false;
    std::optional<long long> witness_len;
    std::optional<long long> oracle_min;
    long long decide_ns = 0;
    long long witness_ns = 0;
};

struct BenchOptions {
    int oracle_max_n = 32;       // skip the oracle above this
    std::uint32_t seed = 42;     // random family: per-row seed = seed + n
};

/// Runs decide/witness (and the oracle at small n) for every valid n in
/// [n_lo, n_hi] of the family. Families: figure1 (multiples of 4, >= 8),
/// random, tree, all-neutral, single-directed-cycle, disconnected. Rows come
/// back sorted by n.
std::vector<BenchRecord> run_family(const std::string& family, int n_lo, int n_hi,
                                    const BenchOptions& options = {});

/// Header (exact): family,n,verdict,witness_len,oracle_min,decide_ns,witness_ns
std::string to_csv(const std::vector<BenchRecord>& records);

}  // namespace bench
}  // namespace balanced
