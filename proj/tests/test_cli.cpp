#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "balanced/instances.hpp"
#include "balanced/io.hpp"
#include "test_util.hpp"

namespace {

std::string cli_path;
std::filesystem::path work_dir;

struct RunResult {
    int status = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    std::string command = cli_path + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, got);
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::string stash(const std::string& name, const std::string& content) {
    std::filesystem::path path = work_dir / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path.string();
}

}  // namespace

using namespace balanced;

TEST_CASE("decide exit codes and text output") {
    std::string figure = stash("figure1.graph", serialize_instance(instances::gen_figure1(8)));
    RunResult yes = run("decide " + figure);
    CHECK(yes.status == 0);
    CHECK(yes.output == "YES k0=4 g=1\n");

    std::string forward = stash("forward.graph", "2 1 0 1\n0 1\n");
    RunResult no = run("decide " + forward);
    CHECK(no.status == 1);
    CHECK(no.output == "NO reason=coset-misses-zero k0=1 g=0\n");

    std::string broken = stash("broken.graph", "2 1 0 1\n0 0\n");
    RunResult bad = run("decide " + broken);
    CHECK(bad.status == 2);
    CHECK(bad.output.find("line 2") != std::string::npos);

    RunResult missing = run("decide /no/such/file.graph");
    CHECK(missing.status == 2);
}

TEST_CASE("decide json record") {
    std::string figure = stash("figure1.graph", serialize_instance(instances::gen_figure1(8)));
    RunResult result = run("decide --json " + figure);
    CHECK(result.status == 0);
    auto record = nlohmann::json::parse(result.output);
    CHECK(record["schema_version"] == 1);
    CHECK(record["command"] == "decide");
    CHECK(record["answer"] == "YES");
    CHECK(record["k0"] == 4);
    CHECK(record["g"] == 1);
    CHECK(record["reason"].is_null());
}

TEST_CASE("witness then verify round trip") {
    std::string figure = stash("figure1.graph", serialize_instance(instances::gen_figure1(8)));
    std::string walk_path = (work_dir / "witness.walk").string();

    RunResult witness = run("witness " + figure + " -o " + walk_path);
    CHECK(witness.status == 0);

    Walk walk = load_walk(walk_path);
    CHECK(walk.size() - 1 >= 20);
    CHECK(walk.size() - 1 <= 16u * 8 * 8 * 8);

    RunResult verify = run("verify " + figure + " " + walk_path);
    CHECK(verify.status == 0);
    CHECK(verify.output.find("balanced=true") != std::string::npos);

    // a NO instance yields no witness
    std::string forward = stash("forward.graph", "2 1 0 1\n0 1\n");
    CHECK(run("witness " + forward).status == 1);
}

TEST_CASE("verify flags an unbalanced walk") {
    std::string forward = stash("forward.graph", "2 1 0 1\n0 1\n");
    std::string walk_path = stash("one_step.walk", "0 1\n");
    RunResult result = run("verify " + forward + " " + walk_path);
    CHECK(result.status == 1);
    CHECK(result.output.find("imbalance=1") != std::string::npos);
    CHECK(result.output.find("balanced=false") != std::string::npos);
}

TEST_CASE("rebalance pipeline") {
    std::string figure = stash("figure1.graph", serialize_instance(instances::gen_figure1(8)));
    Walk inflated = testutil::figure1_inflated_walk(8, 12, 8);
    std::string inflated_path = stash("inflated.walk", serialize_walk(inflated));
    std::string out_path = (work_dir / "rebalanced.walk").string();

    RunResult result = run("rebalance " + figure + " " + inflated_path + " -o " + out_path);
    CHECK(result.status == 0);
    Walk rebalanced = load_walk(out_path);
    CHECK(rebalanced.size() - 1 <= 3u * 8 * 8 * 8);
    CHECK(run("verify " + figure + " " + out_path).status == 0);

    // unbalanced input violates the contract: input error, not a crash
    std::string straight = stash("straight.walk", "0 1 2 3 4\n");
    CHECK(run("rebalance " + figure + " " + straight).status == 2);
}

TEST_CASE("oracle lengths and statuses") {
    std::string figure = stash("figure1.graph", serialize_instance(instances::gen_figure1(8)));
    RunResult twenty = run("oracle " + figure);
    CHECK(twenty.status == 0);
    CHECK(twenty.output == "20\n");

    RunResult with_walk = run("oracle --walk " + figure);
    CHECK(with_walk.status == 0);
    CHECK(with_walk.output.rfind("20\n", 0) == 0);

    std::string forward = stash("forward.graph", "2 1 0 1\n0 1\n");
    RunResult none = run("oracle " + forward);
    CHECK(none.status == 1);
    CHECK(none.output == "none\n");

    // a bound far past the state cap is a resource error, exit 3
    RunResult overflow = run("oracle -B 1000000000 " + figure);
    CHECK(overflow.status == 3);
    CHECK(overflow.output.find("resource limit") != std::string::npos);
}

TEST_CASE("gen emits provenance comments and parseable instances") {
    RunResult figure = run("gen figure1 -n 8");
    CHECK(figure.status == 0);
    CHECK(figure.output.rfind("# generator: figure1", 0) == 0);
    CHECK(parse_instance(figure.output) == instances::gen_figure1(8));

    RunResult again = run("gen figure1 -n 8");
    CHECK(again.output == figure.output);

    RunResult random1 = run("gen random -n 12 --seed 5");
    RunResult random2 = run("gen random -n 12 --seed 5");
    CHECK(random1.status == 0);
    CHECK(random1.output == random2.output);

    RunResult tree = run("gen degenerate -n 6 --kind tree");
    CHECK(tree.status == 0);
    CHECK(parse_instance(tree.output).graph.edge_count() == 5);

    CHECK(run("gen degenerate -n 6").status == 2);        // missing --kind
    CHECK(run("gen figure1 -n 7").status == 2);           // invalid n
    CHECK(run("gen nosuch -n 7").status == 2);
}

TEST_CASE("bench CSV schema") {
    RunResult result = run("bench figure1 8..16");
    CHECK(result.status == 0);
    CHECK(result.output.rfind("family,n,verdict,witness_len,oracle_min,decide_ns,witness_ns\n",
                              0) == 0);
    int rows = 0;
    std::size_t pos = result.output.find('\n');
    while ((pos = result.output.find('\n', pos + 1)) != std::string::npos) ++rows;
    CHECK(rows == 3);  // n = 8, 12, 16
    CHECK(result.output.find("figure1,8,YES,") != std::string::npos);

    CHECK(run("bench nosuch 2..4").status == 2);
}

TEST_CASE("decide, witness+verify and oracle agree on every committed fixture") {
    int seen = 0;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(BALANCED_FIXTURE_DIR))
        if (entry.path().extension() == ".graph") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    for (const auto& file : files) {
        CAPTURE(file.string());
        RunResult decide = run("decide " + file.string());
        REQUIRE((decide.status == 0 || decide.status == 1));

        std::string walk_path = (work_dir / "fixture.walk").string();
        RunResult witness = run("witness " + file.string() + " -o " + walk_path);
        CHECK(witness.status == decide.status);
        if (witness.status == 0) CHECK(run("verify " + file.string() + " " + walk_path).status == 0);

        RunResult oracle = run("oracle " + file.string());
        CHECK(oracle.status == decide.status);
        ++seen;
    }
    CHECK(seen >= 8);
}

TEST_CASE("reduce prints the derivation trail") {
    RunResult result = run("reduce --c 2,3 --m -100,67");
    CHECK(result.status == 0);
    CHECK(result.output.find("k = 1") != std::string::npos);
    CHECK(result.output.find("a=-34 b=2") != std::string::npos);
    CHECK(result.output.find("m' = 2 -1") != std::string::npos);

    RunResult as_json = run("reduce --json --c 2,3 --m -100,67");
    auto record = nlohmann::json::parse(as_json.output);
    CHECK(record["m_prime"] == nlohmann::json::array({2, -1}));

    CHECK(run("reduce --c 3,2 --m 1,1").status == 2);  // not increasing
}

int main(int argc, char** argv) {
    if (const char* env = std::getenv("BALANCED_CLI")) cli_path = env;
    int doctest_argc = argc;
    if (argc > 1 && argv[argc - 1][0] != '-') {
        cli_path = argv[argc - 1];
        --doctest_argc;
    }
    if (cli_path.empty()) {
        std::fprintf(stderr, "pass the CLI path as the last argument or set BALANCED_CLI\n");
        return 1;
    }

    work_dir = std::filesystem::temp_directory_path() /
               ("balanced_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(work_dir);

    doctest::Context context;
    context.applyCommandLine(doctest_argc, argv);
    int rc = context.run();

    std::error_code ec;
    std::filesystem::remove_all(work_dir, ec);
    return rc;
}
