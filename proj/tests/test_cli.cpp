#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "graphiq/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = graphiq::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

long count_lines(const std::string& text) {
    long n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

const fs::path kTmp = fs::temp_directory_path();

}  // namespace

TEST_CASE("generate writes count-per-class rows of each label") {
    const auto path = (kTmp / "cli_gen.csv").string();
    const auto r = cli({"generate", "--count-per-class", "5", "--noise", "1.0", "--seed", "11",
                        "--out", path});
    REQUIRE(r.code == 0);
    const std::string body = slurp(path);
    CHECK(count_lines(body) == 10);
    std::istringstream lines(body);
    std::string line;
    long happy = 0, sad = 0, fields_ok = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("happy,", 0) == 0) ++happy;
        if (line.rfind("sad,", 0) == 0) ++sad;
        if (std::count(line.begin(), line.end(), ',') == 136) ++fields_ok;
    }
    CHECK(happy == 5);
    CHECK(sad == 5);
    CHECK(fields_ok == 10);
}

TEST_CASE("generate is idempotent for a fixed seed") {
    const auto p1 = (kTmp / "cli_gen_a.csv").string();
    const auto p2 = (kTmp / "cli_gen_b.csv").string();
    REQUIRE(cli({"generate", "--count-per-class", "3", "--seed", "4", "--out", p1}).code == 0);
    REQUIRE(cli({"generate", "--count-per-class", "3", "--seed", "4", "--out", p2}).code == 0);
    CHECK(slurp(p1) == slurp(p2));
}

TEST_CASE("generate at noise 0 repeats the class prototype row") {
    const auto path = (kTmp / "cli_gen0.csv").string();
    REQUIRE(cli({"generate", "--count-per-class", "3", "--noise", "0", "--seed", "2", "--out",
                 path})
                .code == 0);
    std::istringstream lines(slurp(path));
    std::string line, first_happy;
    std::getline(lines, first_happy);
    std::getline(lines, line);
    CHECK(line == first_happy);
}

TEST_CASE("classify reports happy when the test row is the happy row") {
    const auto path = (kTmp / "cli_cls.csv").string();
    REQUIRE(cli({"generate", "--count-per-class", "3", "--noise", "1.5", "--seed", "21", "--out",
                 path})
                .code == 0);
    const auto r = cli({"classify", "--data", path, "--test-row", "0", "--sad-row", "3",
                        "--happy-row", "0", "--backend", "classical", "--n", "8", "--seed", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"decision\":\"happy\"") != std::string::npos);
    CHECK(r.out.find("\"distance_to_happy\":0.0") != std::string::npos);
}

TEST_CASE("classify --verbose embeds the three graphs as JSON") {
    const auto path = (kTmp / "cli_clsv.csv").string();
    REQUIRE(cli({"generate", "--count-per-class", "3", "--noise", "1.0", "--seed", "6", "--out",
                 path})
                .code == 0);
    const auto r = cli({"classify", "--data", path, "--test-row", "0", "--sad-row", "4",
                        "--happy-row", "1", "--strategy", "meshed", "--n", "6", "--seed", "2",
                        "--verbose"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"graphs\"") != std::string::npos);
    CHECK(r.out.find("\"edges\"") != std::string::npos);
}

TEST_CASE("experiment --verbose streams row progress to stderr") {
    const auto data = (kTmp / "cli_expv.csv").string();
    REQUIRE(cli({"generate", "--count-per-class", "5", "--noise", "1.0", "--seed", "3", "--out",
                 data})
                .code == 0);
    const auto prefix = (kTmp / "cli_expv_report").string();
    const auto r = cli({"experiment", "--data", data, "--out", prefix, "--n-values", "4",
                        "--subsets", "1", "--test-faces", "2", "--pairs", "2", "--backend",
                        "classical", "--strategy", "complete", "--seed", "1", "--verbose"});
    REQUIRE(r.code == 0);
    CHECK(r.err.find("done n=4") != std::string::npos);
}

TEST_CASE("classify quantum backends emit a probability") {
    const auto path = (kTmp / "cli_clsq.csv").string();
    REQUIRE(cli({"generate", "--count-per-class", "3", "--noise", "1.5", "--seed", "31", "--out",
                 path})
                .code == 0);
    const auto exact = cli({"classify", "--data", path, "--test-row", "1", "--sad-row", "4",
                            "--happy-row", "2", "--backend", "quantum-exact", "--n", "6",
                            "--seed", "5"});
    REQUIRE(exact.code == 0);
    CHECK(exact.out.find("\"p\":") != std::string::npos);
    const auto shots = cli({"classify", "--data", path, "--test-row", "1", "--sad-row", "4",
                            "--happy-row", "2", "--backend", "quantum-shots", "--shots", "512",
                            "--n", "6", "--seed", "5"});
    REQUIRE(shots.code == 0);
    CHECK(shots.out.find("\"shots_total\":512") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    const auto path = (kTmp / "cli_usage.csv").string();
    REQUIRE(cli({"generate", "--count-per-class", "3", "--seed", "1", "--out", path}).code == 0);
    CHECK(cli({"classify", "--data", path, "--strategy", "hexagonal"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"generate"}).code == 2);  // missing --out
}

TEST_CASE("runtime errors exit with code 1") {
    const auto r = cli({"classify", "--data", (kTmp / "missing_file.csv").string()});
    CHECK(r.code == 1);
    CHECK(!r.err.empty());
}

TEST_CASE("classify rejects role/label mismatches") {
    const auto path = (kTmp / "cli_roles.csv").string();
    REQUIRE(cli({"generate", "--count-per-class", "2", "--seed", "1", "--out", path}).code == 0);
    // rows 0-1 happy, 2-3 sad; swap the roles
    const auto r = cli({"classify", "--data", path, "--test-row", "0", "--sad-row", "1",
                        "--happy-row", "2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--sad-row") != std::string::npos);
}

TEST_CASE("help exits zero") {
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("GRAPHIQ_SEED supplies the seed when the flag is absent") {
    const auto with_flag = (kTmp / "cli_seed_flag.csv").string();
    const auto with_env = (kTmp / "cli_seed_env.csv").string();
    REQUIRE(cli({"generate", "--count-per-class", "2", "--seed", "777", "--out", with_flag})
                .code == 0);
    setenv("GRAPHIQ_SEED", "777", 1);
    REQUIRE(cli({"generate", "--count-per-class", "2", "--out", with_env}).code == 0);
    unsetenv("GRAPHIQ_SEED");
    CHECK(slurp(with_flag) == slurp(with_env));
}

TEST_CASE("experiment writes reports with the full grid and is reproducible") {
    const auto data = (kTmp / "cli_exp.csv").string();
    REQUIRE(cli({"generate", "--count-per-class", "6", "--noise", "1.4", "--seed", "8", "--out",
                 data})
                .code == 0);
    const auto prefix = (kTmp / "cli_exp_report").string();
    const std::vector<std::string> args = {
        "experiment",    "--data", data, "--out",     prefix, "--n-values", "4,6",
        "--subsets",     "2",      "--test-faces",    "2",    "--pairs",    "3",
        "--backend",     "classical",    "--strategy", "complete,meshed",
        "--seed",        "13",     "--threads",       "2"};
    const auto r1 = cli(args);
    REQUIRE(r1.code == 0);
    const std::string csv = slurp(prefix + ".csv");
    CHECK(count_lines(csv) == 1 + 2 * 2);  // header + n-values x strategies x 1 backend
    CHECK(!slurp(prefix + ".json").empty());
    const auto r2 = cli(args);
    REQUIRE(r2.code == 0);
    CHECK(slurp(prefix + ".csv") == csv);
    CHECK(r1.out == r2.out);
}
