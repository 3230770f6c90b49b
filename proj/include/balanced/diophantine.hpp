#pragma once

#include <optional>
#include <span>
#include <vector>

namespace balanced {

/// A known solution of m1*c1 + m2*c2 + ... + mr*cr = k over the integers,
/// with 0 < c1 < c2 < ... < cr. Construction validates the identity exactly.
struct ReductionProblem {
    ReductionProblem(std::vector<long long> c, long long k, std::vector<long long> m);

    std::vector<long long> c;
    long long k;
    std::vector<long long> m;
};

/// Output of reduce_coefficients. The identity sum(m_prime[i] * c[i]) == k
/// still holds, and the multipliers obey
///   sum_{i < r-1} |m_prime[i]|  <=  (r - 1) * (c[r-1] - 1)
///   |m_prime[r-1]|              <=  sum_{i < r-1} c[i] + ceil(|k| / c[r-1])
/// quotients/remainders record the per-index division audit trail (size r-1):
/// m[i] = quotients[i] * c[r-1] + remainders[i] with 0 <= remainders[i] < c[r-1].
struct ReducedSolution {
    std::vector<long long> m_prime;
    std::vector<long long> quotients;
    std::vector<long long> remainders;
};

/// Shrinks the multipliers of a solution without changing the target:
/// each m[i] (i < r-1) is replaced by its Euclidean remainder modulo c[r-1]
/// and the folded quotients are absorbed into the last multiplier. Division
/// is Euclidean so remainders land in [0, c[r-1]) for negative inputs too.
/// r == 1 passes the input through unchanged. All arithmetic is overflow
/// checked; a violated input identity throws std::invalid_argument.
ReducedSolution reduce_coefficients(const ReductionProblem& problem);

/// Finds multipliers m with sum(m[i] * c[i]) == k meeting the ReducedSolution
/// bounds, or nullopt iff no integer solution exists (gcd(c) does not divide
/// k; for empty c, k != 0). k == 0 yields the all-zero vector. c must be
/// strictly increasing and positive.
std::optional<std::vector<long long>> solve_bounded(std::span<const long long> c, long long k);

/// g = a*x + b*y with g = gcd(a, b) >= 0; requires a, b >= 0.
struct ExtendedGcd {
    long long g, x, y;
};

ExtendedGcd extended_gcd(long long a, long long b);

}  // namespace balanced
