#include "balanced/diophantine.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "balanced/checked.hpp"

namespace balanced {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

namespace {

void validate_coefficients(std::span<const long long> c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 1) throw std::invalid_argument("coefficients must be positive");
        if (i > 0 && c[i] <= c[i - 1])
            throw std::invalid_argument("coefficients must be strictly increasing");
    }
}

long long weighted_sum(std::span<const long long> m, std::span<const long long> c) {
    long long sum = 0;
    for (std::size_t i = 0; i < m.size(); ++i) sum = checked_add(sum, checked_mul(m[i], c[i]));
    return sum;
}

// Euclidean division: remainder in [0, d), d > 0.
std::pair<long long, long long> divmod_euclid(long long value, long long d) {
    long long r = value % d;
    if (r < 0) r += d;
    long long q = (value - r) / d;
    return {q, r};
}

long long ceil_div_abs(long long value, long long d) {
    long long a = value < 0 ? -value : value;
    return a / d + (a % d != 0 ? 1 : 0);
}

}  // namespace

ReductionProblem::ReductionProblem(std::vector<long long> c_, long long k_,
                                   std::vector<long long> m_)
    : c(std::move(c_)), k(k_), m(std::move(m_)) {
    validate_coefficients(c);
    if (m.size() != c.size())
        throw std::invalid_argument("multiplier count must match coefficient count");
    if (weighted_sum(m, c) != k)
        throw std::invalid_argument("sum of m[i]*c[i] does not equal k");
}

ReducedSolution reduce_coefficients(const ReductionProblem& problem) {
    const std::size_t r = problem.c.size();
    if (r == 0) throw std::invalid_argument("reduce_coefficients requires r >= 1");

    ReducedSolution out;
    out.m_prime = problem.m;
    if (r == 1) return out;

    const long long cr = problem.c[r - 1];
    long long folded = problem.m[r - 1];
    out.quotients.reserve(r - 1);
    out.remainders.reserve(r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i) {
        auto [a, b] = divmod_euclid(problem.m[i], cr);
        out.quotients.push_back(a);
        out.remainders.push_back(b);
        out.m_prime[i] = b;
        folded = checked_add(folded, checked_mul(a, problem.c[i]));
    }
    out.m_prime[r - 1] = folded;

    if (weighted_sum(out.m_prime, problem.c) != problem.k)
        throw std::logic_error("reduction lost the target sum");

    // The last multiplier satisfies |m'| <= sum_{i<r-1} c[i] + ceil(|k|/c[r-1]):
    // from the identity, m' * cr = k - sum b[i]*c[i] with each b[i] < cr.
    long long head = 0;
    for (std::size_t i = 0; i + 1 < r; ++i) head = checked_add(head, problem.c[i]);
    if (std::abs(folded) > checked_add(head, ceil_div_abs(problem.k, cr)))
        throw std::logic_error("reduced multiplier exceeds its bound");

    return out;
}

ExtendedGcd extended_gcd(long long a, long long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("extended_gcd requires non-negative inputs");
    long long r0 = a, r1 = b;
    long long x0 = 1, x1 = 0;
    long long y0 = 0, y1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long x2 = checked_sub(x0, checked_mul(q, x1));
        long long y2 = checked_sub(y0, checked_mul(q, y1));
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    return {r0, x0, y0};
}

std::optional<std::vector<long long>> solve_bounded(std::span<const long long> c, long long k) {
    validate_coefficients(c);
    const std::size_t r = c.size();
    if (r == 0) {
        if (k == 0) return std::vector<long long>{};
        return std::nullopt;
    }

    std::vector<long long> prefix_gcd(r);
    prefix_gcd[0] = c[0];
    for (std::size_t i = 1; i < r; ++i) prefix_gcd[i] = std::gcd(prefix_gcd[i - 1], c[i]);
    if (k % prefix_gcd[r - 1] != 0) return std::nullopt;

    std::vector<long long> m(r, 0);
    if (k != 0) {
        // Peel coefficients from the back. At each step the remaining target is
        // divisible by the prefix gcd, and the chosen multiplier is normalized
        // into [0, prev_gcd / step_gcd) so intermediate values stay small.
        long long target = k;
        for (std::size_t i = r; i-- > 1;) {
            long long prev = prefix_gcd[i - 1];
            auto [g, x, y] = extended_gcd(prev, c[i]);
            (void)x;
            long long scale = target / g;
            long long modulus = prev / g;
            auto [unused, normalized] = divmod_euclid(checked_mul(y, scale) % modulus, modulus);
            (void)unused;
            m[i] = normalized;
            target = checked_sub(target, checked_mul(normalized, c[i]));
        }
        m[0] = target / c[0];
    }

    // The peeled solution is exact but the head multiplier may be large;
    // one reduction pass restores the advertised bounds.
    ReducedSolution reduced =
        reduce_coefficients(ReductionProblem(std::vector<long long>(c.begin(), c.end()), k, m));
    return reduced.m_prime;
}

}  // namespace balanced
