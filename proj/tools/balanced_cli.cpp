#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "balanced/bench.hpp"
#include "balanced/checked.hpp"
#include "balanced/diophantine.hpp"
#include "balanced/graph.hpp"
#include "balanced/instances.hpp"
#include "balanced/io.hpp"
#include "balanced/oracle.hpp"
#include "balanced/solver.hpp"
#include "balanced/witness.hpp"

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kSchemaVersion = 1;

json base_record(const char* command) {
    return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

json verdict_json(const balanced::Verdict& verdict) {
    json record = base_record("decide");
    record["answer"] = verdict.yes ? "YES" : "NO";
    record["k0"] = verdict.k0 ? json(*verdict.k0) : json(nullptr);
    record["g"] = verdict.g;
    record["reason"] = verdict.reason ? json(balanced::to_string(*verdict.reason)) : json(nullptr);
    return record;
}

void print_verdict_text(const balanced::Verdict& verdict) {
    if (verdict.yes) {
        std::cout << "YES k0=" << *verdict.k0 << " g=" << verdict.g << "\n";
        return;
    }
    std::cout << "NO reason=" << balanced::to_string(*verdict.reason);
    if (verdict.k0) std::cout << " k0=" << *verdict.k0;
    std::cout << " g=" << verdict.g << "\n";
}

void emit_walk(const balanced::Walk& walk, const std::string& out_path) {
    std::string text = balanced::serialize_walk(walk);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        balanced::write_text_file(out_path, text);
    }
}

int cmd_decide(const std::string& instance_path, bool as_json) {
    balanced::Verdict verdict = balanced::decide_balanced(balanced::load_instance(instance_path));
    if (as_json) {
        std::cout << verdict_json(verdict).dump() << "\n";
    } else {
        print_verdict_text(verdict);
    }
    return verdict.yes ? kExitYes : kExitNo;
}

int cmd_witness(const std::string& instance_path, const std::string& out_path, bool as_json) {
    balanced::Instance instance = balanced::load_instance(instance_path);
    std::optional<balanced::Walk> walk = balanced::build_witness(instance);
    if (as_json) {
        json record = base_record("witness");
        record["found"] = walk.has_value();
        record["walk"] = walk ? json(*walk) : json(nullptr);
        record["length"] = walk ? json(static_cast<long long>(walk->size()) - 1) : json(nullptr);
        std::cout << record.dump() << "\n";
    } else if (walk) {
        emit_walk(*walk, out_path);
    } else {
        std::cerr << "no balanced walk exists\n";
    }
    return walk ? kExitYes : kExitNo;
}

int cmd_verify(const std::string& instance_path, const std::string& walk_path, bool as_json) {
    balanced::Instance instance = balanced::load_instance(instance_path);
    balanced::Walk walk = balanced::load_walk(walk_path);
    balanced::WalkReport report = balanced::verify_walk(instance, walk);
    bool ok = report.valid && report.balanced && report.endpoints_ok;
    if (as_json) {
        json record = base_record("verify");
        record["valid"] = report.valid;
        record["length"] = report.length;
        record["imbalance"] = report.imbalance;
        record["balanced"] = report.balanced;
        record["endpoints_ok"] = report.endpoints_ok;
        record["ok"] = ok;
        std::cout << record.dump() << "\n";
    } else {
        std::cout << "valid=" << (report.valid ? "true" : "false") << " length=" << report.length
                  << " imbalance=" << report.imbalance
                  << " balanced=" << (report.balanced ? "true" : "false")
                  << " endpoints_ok=" << (report.endpoints_ok ? "true" : "false") << "\n";
    }
    return ok ? kExitYes : kExitNo;
}

int cmd_rebalance(const std::string& instance_path, const std::string& walk_path,
                  const std::string& out_path, bool as_json) {
    balanced::Instance instance = balanced::load_instance(instance_path);
    balanced::Walk walk = balanced::load_walk(walk_path);
    balanced::Walk result = balanced::rebalance_existing(instance, walk);
    if (as_json) {
        json record = base_record("rebalance");
        record["walk"] = result;
        record["length"] = static_cast<long long>(result.size()) - 1;
        std::cout << record.dump() << "\n";
    } else {
        emit_walk(result, out_path);
    }
    return kExitYes;
}

int cmd_oracle(const std::string& instance_path, long long bound, bool want_walk, bool as_json) {
    balanced::Instance instance = balanced::load_instance(instance_path);
    if (bound <= 0) bound = balanced::oracle::default_bound(instance.graph.vertex_count());
    std::optional<balanced::Walk> walk;
    std::optional<long long> length;
    if (want_walk) {
        walk = balanced::oracle::shortest_balanced_walk(instance, bound);
        if (walk) length = static_cast<long long>(walk->size()) - 1;
    } else {
        length = balanced::oracle::shortest_balanced(instance, bound);
    }
    if (as_json) {
        json record = base_record("oracle");
        record["bound"] = bound;
        record["found"] = length.has_value();
        record["length"] = length ? json(*length) : json(nullptr);
        if (want_walk) record["walk"] = walk ? json(*walk) : json(nullptr);
        std::cout << record.dump() << "\n";
    } else if (length) {
        std::cout << *length << "\n";
        if (walk) std::cout << balanced::serialize_walk(*walk);
    } else {
        std::cout << "none\n";
    }
    return length ? kExitYes : kExitNo;
}

int cmd_reduce(const std::vector<long long>& c, const std::vector<long long>& m, bool as_json) {
    long long k = 0;
    for (std::size_t i = 0; i < c.size() && i < m.size(); ++i)
        k = balanced::detail::checked_add(k, balanced::detail::checked_mul(m[i], c[i]));
    balanced::ReducedSolution reduced =
        balanced::reduce_coefficients(balanced::ReductionProblem(c, k, m));
    if (as_json) {
        json record = base_record("reduce");
        record["c"] = c;
        record["k"] = k;
        record["m"] = m;
        record["m_prime"] = reduced.m_prime;
        record["quotients"] = reduced.quotients;
        record["remainders"] = reduced.remainders;
        std::cout << record.dump() << "\n";
        return kExitYes;
    }
    std::cout << "k = " << k << "\n";
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        std::cout << "i=" << i + 1 << " c=" << c[i] << " m=" << m[i]
                  << " a=" << reduced.quotients[i] << " b=" << reduced.remainders[i] << "\n";
    }
    std::cout << "m' =";
    for (long long value : reduced.m_prime) std::cout << ' ' << value;
    std::cout << "\n";
    return kExitYes;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int single = std::stoi(text);
        return {single, single};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced st-connectivity: decide, construct and check balanced walks"};
    app.require_subcommand(1);

    std::string instance_path, walk_path, out_path, family, range_text, kind_name;
    bool as_json = false, want_walk = false;
    long long bound = 0;
    int gen_n = 8;
    double p_directed = 0.3, p_neutral = 0.2;
    std::uint32_t seed = 42;
    balanced::bench::BenchOptions bench_options;
    std::vector<long long> reduce_c, reduce_m;

    auto* decide = app.add_subcommand("decide", "decide whether a balanced s-t walk exists");
    decide->add_option("instance", instance_path, "instance file")->required();
    decide->add_flag("--json", as_json, "machine-readable output");

    auto* witness = app.add_subcommand("witness", "construct a balanced walk");
    witness->add_option("instance", instance_path)->required();
    witness->add_option("-o,--output", out_path, "write the walk here instead of stdout");
    witness->add_flag("--json", as_json);

    auto* verify = app.add_subcommand("verify", "re-check a walk against an instance");
    verify->add_option("instance", instance_path)->required();
    verify->add_option("walk", walk_path, "walk file")->required();
    verify->add_flag("--json", as_json);

    auto* rebalance = app.add_subcommand("rebalance", "shrink a balanced walk to O(n^3) length");
    rebalance->add_option("instance", instance_path)->required();
    rebalance->add_option("walk", walk_path)->required();
    rebalance->add_option("-o,--output", out_path);
    rebalance->add_flag("--json", as_json);

    auto* oracle = app.add_subcommand("oracle", "exhaustive minimal balanced walk length");
    oracle->add_option("instance", instance_path)->required();
    oracle->add_option("-B,--bound", bound, "prefix imbalance bound (default 3n^3)");
    oracle->add_flag("--walk", want_walk, "also print one minimal walk");
    oracle->add_flag("--json", as_json);

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("family", family, "figure1 | random | degenerate")->required();
    gen->add_option("-n,--n", gen_n, "vertex count")->required();
    gen->add_option("--p-directed", p_directed, "random: directed pair probability");
    gen->add_option("--p-neutral", p_neutral, "random: neutral pair probability");
    gen->add_option("--seed", seed, "random: PRNG seed");
    gen->add_option("--kind", kind_name,
                    "degenerate: tree | all-neutral | single-directed-cycle | disconnected");
    gen->add_option("-o,--output", out_path, "write instance here instead of stdout");

    auto* bench = app.add_subcommand("bench", "growth data over an n range, CSV output");
    bench->add_option("family", family, "figure1 | random | tree | all-neutral | ...")->required();
    bench->add_option("range", range_text, "n range, e.g. 8..64")->required();
    bench->add_option("-o,--output", out_path, "CSV path (default stdout)");
    bench->add_option("--oracle-max-n", bench_options.oracle_max_n, "oracle cutoff (default 32)");
    bench->add_option("--seed", bench_options.seed, "random family base seed");

    auto* reduce = app.add_subcommand("reduce", "coefficient reduction with derivation trail");
    reduce->add_option("--c", reduce_c, "coefficients, ascending")->required()->delimiter(',');
    reduce->add_option("--m", reduce_m, "multipliers")->required()->delimiter(',');
    reduce->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*decide) return cmd_decide(instance_path, as_json);
        if (*witness) return cmd_witness(instance_path, out_path, as_json);
        if (*verify) return cmd_verify(instance_path, walk_path, as_json);
        if (*rebalance) return cmd_rebalance(instance_path, walk_path, out_path, as_json);
        if (*oracle) return cmd_oracle(instance_path, bound, want_walk, as_json);
        if (*gen) {
            balanced::Instance instance = [&] {
                if (family == "figure1") {
                    return balanced::instances::gen_figure1(gen_n);
                } else if (family == "random") {
                    return balanced::instances::gen_random(gen_n, p_directed, p_neutral, seed);
                } else if (family == "degenerate") {
                    if (kind_name.empty())
                        throw std::invalid_argument("degenerate family needs --kind");
                    return balanced::instances::gen_degenerate(
                        balanced::instances::degenerate_kind_from_string(kind_name), gen_n);
                }
                throw std::invalid_argument("unknown family: " + family);
            }();
            std::vector<std::string> comments;
            comments.push_back("generator: " + family +
                               (kind_name.empty() ? "" : " kind=" + kind_name));
            std::string params = "params: n=" + std::to_string(gen_n);
            if (family == "random")
                params += " p_directed=" + std::to_string(p_directed) +
                          " p_neutral=" + std::to_string(p_neutral) +
                          " seed=" + std::to_string(seed);
            comments.push_back(params);
            std::string text = balanced::serialize_instance(instance, comments);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                balanced::write_text_file(out_path, text);
            }
            return kExitYes;
        }
        if (*bench) {
            auto [lo, hi] = parse_range(range_text);
            auto records = balanced::bench::run_family(family, lo, hi, bench_options);
            std::string csv = balanced::bench::to_csv(records);
            if (out_path.empty()) {
                std::cout << csv;
            } else {
                balanced::write_text_file(out_path, csv);
            }
            return kExitYes;
        }
        if (*reduce) return cmd_reduce(reduce_c, reduce_m, as_json);
    } catch (const balanced::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const balanced::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
