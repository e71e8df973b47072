#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "graphiq/classifier.hpp"
#include "graphiq/landmarks.hpp"

namespace graphiq {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct ExperimentConfig {
    std::vector<int> n_values = {4, 6, 8, 10, 12, 14, 16, 18, 20};
    int subsets_per_n = 20;
    int test_faces = 10;
    int training_pairs = 25;
    long shots = 1024;
    std::vector<Strategy> strategies = {Strategy::complete, Strategy::meshed};
    std::vector<Backend> backends = {Backend::classical, Backend::quantum_exact};
    std::uint64_t seed = kDefaultSeed;
    int threads = 0;  // 0 = hardware concurrency

    void validate() const;
};

enum class Decision { happy, sad, unknown };

std::string to_string(Decision decision);

// One item {test, sad, happy}: classical backend compares raw Frobenius
// distances with the 0.001 tie band; quantum backends run the interference
// classifier (label +1 = happy) with the kQuantumTieBand band. rng is
// consumed only in shots mode.
Decision classify_wrt_single_face(const AdjacencyVector& test, const AdjacencyVector& sad,
                                  const AdjacencyVector& happy, Backend backend, long shots,
                                  Rng& rng);

using GraphDataset = std::vector<std::pair<AdjacencyVector, Label>>;
using DecideFn = std::function<Decision(const AdjacencyVector& test, const AdjacencyVector& sad,
                                        const AdjacencyVector& happy)>;

struct AccuracyCounts {
    long correct = 0;
    long wrong = 0;    // includes unknown outcomes
    long unknown = 0;
    double accuracy() const {
        return correct + wrong == 0 ? 0.0
                                    : static_cast<double>(correct) / (correct + wrong);
    }
};

// Every dataset member as test against every (sad, happy) product pair;
// unknown counts as wrong. Requires both labels present.
AccuracyCounts accuracy_wrt_single_face(const GraphDataset& dataset, const DecideFn& decide);

// Majority vote of the single-face decision over all (sad, happy) product
// pairs; equal counters give unknown.
Decision classify_wrt_whole_set(const AdjacencyVector& test, const GraphDataset& dataset,
                                const DecideFn& decide);

// Every dataset member classified against the whole set; unknown counts wrong.
AccuracyCounts accuracy_whole_set(const GraphDataset& dataset, const DecideFn& decide);

struct ReportRow {
    int n = 0;
    Strategy strategy = Strategy::complete;
    Backend backend = Backend::classical;
    double single_mean = 0.0, single_min = 0.0, single_max = 0.0;
    double whole_mean = 0.0, whole_min = 0.0, whole_max = 0.0;
    double unknown_rate = 0.0;
    long item_count = 0;  // test_faces * training_pairs per subset
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<ReportRow> rows;

    std::string to_json() const;
    std::string to_csv() const;  // one row per (n, strategy, backend)
};

// Full protocol: per n, subsets_per_n vertex index sets shared by every face,
// strategy and backend; per subset, test_faces x training_pairs items with
// test and training faces drawn disjointly; accuracies reduced to
// mean/min/max over subsets. Deterministic given config.seed, including
// under parallel execution. Completed rows are streamed to on_row.
ExperimentReport run_experiment(const ExperimentConfig& config,
                                const std::vector<PointCloud>& faces,
                                const std::function<void(const ReportRow&)>& on_row = {});

}  // namespace graphiq
