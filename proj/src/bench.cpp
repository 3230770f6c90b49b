#include "balanced/bench.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "balanced/instances.hpp"
#include "balanced/oracle.hpp"
#include "balanced/solver.hpp"
#include "balanced/witness.hpp"

namespace balanced {
namespace bench {

namespace {

long long elapsed_ns(const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
}

struct Family {
    std::function<bool(int)> valid_n;
    std::function<Instance(int, const BenchOptions&)> make;
};

Family family_for(const std::string& name) {
    using instances::DegenerateKind;
    if (name == "figure1")
        return {[](int n) { return n >= 8 && n % 4 == 0; },
                [](int n, const BenchOptions&) { return instances::gen_figure1(n); }};
    if (name == "random")
        return {[](int n) { return n >= 1; },
                [](int n, const BenchOptions& opt) {
                    return instances::gen_random(n, 0.3, 0.2,
                                                 opt.seed + static_cast<std::uint32_t>(n));
                }};
    for (DegenerateKind kind :
         {DegenerateKind::Tree, DegenerateKind::AllNeutral, DegenerateKind::SingleDirectedCycle,
          DegenerateKind::Disconnected}) {
        if (name == instances::to_string(kind)) {
            int min_n = kind == DegenerateKind::SingleDirectedCycle ? 3 : 2;
            return {[min_n](int n) { return n >= min_n; },
                    [kind](int n, const BenchOptions&) { return instances::gen_degenerate(kind, n); }};
        }
    }
    throw std::invalid_argument("unknown bench family: " + name);
}

}  // namespace

std::vector<BenchRecord> run_family(const std::string& family_name, int n_lo, int n_hi,
                                    const BenchOptions& options) {
    if (n_lo > n_hi) throw std::invalid_argument("empty n range");
    Family family = family_for(family_name);

    std::vector<BenchRecord> records;
    for (int n = n_lo; n <= n_hi; ++n) {
        if (!family.valid_n(n)) continue;
        Instance instance = family.make(n, options);

        BenchRecord record;
        record.family = family_name;
        record.n = n;

        Verdict verdict;
        record.decide_ns = elapsed_ns([&] { verdict = decide_balanced(instance); });
        record.yes = verdict.yes;

        if (verdict.yes) {
            std::optional<Walk> walk;
            record.witness_ns = elapsed_ns([&] { walk = build_witness(instance); });
            if (!walk) throw std::logic_error("decide YES but no witness");
            record.witness_len = static_cast<long long>(walk->size()) - 1;
        }

        if (n <= options.oracle_max_n) {
            try {
                record.oracle_min =
                    oracle::shortest_balanced(instance, oracle::default_bound(n));
            } catch (const ResourceLimitError&) {
                // leave the field empty; the CSV schema allows it
            }
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "family,n,verdict,witness_len,oracle_min,decide_ns,witness_ns\n";
    for (const BenchRecord& r : records) {
        out << r.family << ',' << r.n << ',' << (r.yes ? "YES" : "NO") << ',';
        if (r.witness_len) out << *r.witness_len;
        out << ',';
        if (r.oracle_min) out << *r.oracle_min;
        out << ',' << r.decide_ns << ',' << r.witness_ns << '\n';
    }
    return out.str();
}

}  // namespace bench
}  // namespace balanced
