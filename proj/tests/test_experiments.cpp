#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "anyonwalk/experiments.hpp"

using namespace anyonwalk;
namespace fs = std::filesystem;

namespace {
fs::path temp_dir(const std::string& tag) {
    auto p = fs::temp_directory_path() / ("anyonwalk_test_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}
}  // namespace

TEST_CASE("validate reports all problems at once") {
    ExperimentConfig cfg;
    cfg.experiment = "mixing";
    cfg.model = "bogus";
    cfg.sites = 6;  // even N -> warning
    cfg.s0 = 99;
    auto diags = validate(cfg);
    CHECK(diags.size() >= 3);
    bool warned = false;
    for (const auto& d : diags) warned = warned || d.rfind("warning:", 0) == 0;
    CHECK(warned);
}

TEST_CASE("memory budget diagnostic includes the required bytes") {
    ExperimentConfig cfg;
    cfg.experiment = "walk";
    cfg.model = "ising";
    cfg.t_max = 26;
    cfg.memory_budget = 1 << 20;
    auto diags = validate(cfg);
    REQUIRE(!diags.empty());
    CHECK(diags[0].find("bytes") != std::string::npos);
}

TEST_CASE("runs emit manifests and are byte-identical across reruns") {
    ExperimentConfig cfg;
    cfg.experiment = "mixing";
    cfg.model = "ising";
    cfg.sites = 5;
    cfg.t_max = 60;

    cfg.output_dir = temp_dir("a").string();
    auto m1 = run_experiment(cfg);
    cfg.output_dir = temp_dir("b").string();
    auto m2 = run_experiment(cfg);

    REQUIRE(m1.output_digests.size() == m2.output_digests.size());
    for (std::size_t i = 0; i < m1.output_digests.size(); ++i)
        CHECK(m1.output_digests[i].second == m2.output_digests[i].second);
    CHECK(fs::exists(fs::path(cfg.output_dir) / "mixing_manifest.json"));
}

TEST_CASE("entropy experiment emits the sweep csv") {
    ExperimentConfig cfg;
    cfg.experiment = "entropy";
    cfg.levels = {1, 2, 3, 4};
    cfg.output_dir = temp_dir("c").string();
    run_experiment(cfg);
    std::ifstream in(fs::path(cfg.output_dir) / "entropy.csv");
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "k,Q,leakage");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 4);
}

TEST_CASE("invalid configs are rejected before any computation") {
    ExperimentConfig cfg;
    cfg.experiment = "exit";
    cfg.sites = 12;
    cfg.s0 = 40;
    cfg.output_dir = temp_dir("d").string();
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}
