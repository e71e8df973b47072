#include "graphiq/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <json.hpp>
#include <map>
#include <set>
#include <thread>

#include "graphiq/graphs.hpp"

namespace graphiq {

void ExperimentConfig::validate() const {
    if (n_values.empty()) throw ContractError("ExperimentConfig: n_values must not be empty");
    for (int n : n_values)
        if (n < 3 || n > kMouthPointCount)
            throw ContractError("ExperimentConfig: n must be in [3, 20], got " + std::to_string(n));
    if (subsets_per_n < 1 || test_faces < 1 || training_pairs < 1 || shots < 1)
        throw ContractError("ExperimentConfig: counts must be >= 1");
    if (strategies.empty() || backends.empty())
        throw ContractError("ExperimentConfig: need at least one strategy and backend");
}

std::string to_string(Decision decision) {
    switch (decision) {
        case Decision::happy: return "happy";
        case Decision::sad: return "sad";
        default: return "unknown";
    }
}

Decision classify_wrt_single_face(const AdjacencyVector& test, const AdjacencyVector& sad,
                                  const AdjacencyVector& happy, Backend backend, long shots,
                                  Rng& rng) {
    if (backend == Backend::classical) {
        const double d = frobenius_distance(test, sad) - frobenius_distance(test, happy);
        if (std::abs(d) < kClassicalTieTolerance) return Decision::unknown;
        return d > 0.0 ? Decision::happy : Decision::sad;
    }
    TrainingSet train;
    train.members = {{sad, -1}, {happy, +1}};
    const AmplitudeVector test_state = encode(test);
    const ClassificationOutcome outcome =
        backend == Backend::quantum_exact
            ? classify_quantum_exact(test_state, train)
            : classify_quantum_shots(test_state, train, shots, rng);
    if (outcome.decision == 0) return Decision::unknown;
    return outcome.decision > 0 ? Decision::happy : Decision::sad;
}

namespace {

Decision to_decision(Label label) {
    return label == Label::happy ? Decision::happy : Decision::sad;
}

void split_by_label(const GraphDataset& dataset, std::vector<std::size_t>& sad,
                    std::vector<std::size_t>& happy) {
    for (std::size_t i = 0; i < dataset.size(); ++i)
        (dataset[i].second == Label::sad ? sad : happy).push_back(i);
    if (sad.empty() || happy.empty())
        throw ContractError("dataset must contain both labels");
}

}  // namespace

AccuracyCounts accuracy_wrt_single_face(const GraphDataset& dataset, const DecideFn& decide) {
    std::vector<std::size_t> sads, happys;
    split_by_label(dataset, sads, happys);
    AccuracyCounts counts;
    for (const auto& [test, label] : dataset) {
        for (std::size_t s : sads) {
            for (std::size_t h : happys) {
                const Decision d = decide(test, dataset[s].first, dataset[h].first);
                if (d == Decision::unknown) ++counts.unknown;
                if (d == to_decision(label))
                    ++counts.correct;
                else
                    ++counts.wrong;
            }
        }
    }
    return counts;
}

Decision classify_wrt_whole_set(const AdjacencyVector& test, const GraphDataset& dataset,
                                const DecideFn& decide) {
    std::vector<std::size_t> sads, happys;
    split_by_label(dataset, sads, happys);
    long happy_counter = 0, sad_counter = 0;
    for (std::size_t s : sads)
        for (std::size_t h : happys) {
            if (decide(test, dataset[s].first, dataset[h].first) == Decision::happy)
                ++happy_counter;
            else
                ++sad_counter;
        }
    if (happy_counter == sad_counter) return Decision::unknown;
    return happy_counter > sad_counter ? Decision::happy : Decision::sad;
}

AccuracyCounts accuracy_whole_set(const GraphDataset& dataset, const DecideFn& decide) {
    AccuracyCounts counts;
    for (const auto& [test, label] : dataset) {
        const Decision d = classify_wrt_whole_set(test, dataset, decide);
        if (d == Decision::unknown) ++counts.unknown;
        if (d == to_decision(label))
            ++counts.correct;
        else
            ++counts.wrong;
    }
    return counts;
}

namespace {

constexpr std::uint64_t kStreamSubset = 0xA1;
constexpr std::uint64_t kStreamItems = 0xB2;
constexpr std::uint64_t kStreamShots = 0xC3;

struct ItemSet {
    std::vector<std::size_t> test_faces;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (sad face, happy face)
};

// Test faces drawn without replacement; training pairs drawn as distinct
// (sad, happy) combinations from the remaining faces, so a face never serves
// as both test and training inside one item.
ItemSet draw_items(const std::vector<Label>& labels, int test_count, int pair_count, Rng& rng) {
    const std::size_t total = labels.size();
    if (static_cast<std::size_t>(test_count) >= total)
        throw ContractError("run_experiment: not enough faces for the requested test set");
    std::vector<std::size_t> order(total);
    for (std::size_t i = 0; i < total; ++i) order[i] = i;
    for (int k = 0; k < test_count; ++k) {
        const std::size_t j = k + rng.below(total - k);
        std::swap(order[k], order[j]);
    }
    ItemSet items;
    items.test_faces.assign(order.begin(), order.begin() + test_count);
    std::sort(items.test_faces.begin(), items.test_faces.end());

    std::vector<std::size_t> pool_sad, pool_happy;
    for (std::size_t i = test_count; i < total; ++i) {
        (labels[order[i]] == Label::sad ? pool_sad : pool_happy).push_back(order[i]);
    }
    if (pool_sad.empty() || pool_happy.empty())
        throw ContractError("run_experiment: training pool lacks a label after the test draw");
    std::sort(pool_sad.begin(), pool_sad.end());
    std::sort(pool_happy.begin(), pool_happy.end());
    if (static_cast<std::size_t>(pair_count) > pool_sad.size() * pool_happy.size())
        throw ContractError("run_experiment: not enough faces for distinct training pairs");

    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (items.pairs.size() < static_cast<std::size_t>(pair_count)) {
        const std::size_t s = pool_sad[rng.below(pool_sad.size())];
        const std::size_t h = pool_happy[rng.below(pool_happy.size())];
        if (seen.insert({s, h}).second) items.pairs.emplace_back(s, h);
    }
    return items;
}

struct CellStats {
    double single_acc = 0.0;
    double whole_acc = 0.0;
    long unknowns = 0;
    long items = 0;
};

// One (n, subset) unit of work: shared vertex sample, per-face graphs for
// both strategies, then all item decisions per strategy and backend.
std::map<std::pair<Strategy, Backend>, CellStats> evaluate_subset(
    const ExperimentConfig& config, const std::vector<PointCloud>& mouths,
    const std::vector<Label>& labels, int n, int subset_idx) {
    Rng subset_rng = derive_rng(config.seed, {kStreamSubset, static_cast<std::uint64_t>(n),
                                              static_cast<std::uint64_t>(subset_idx)});
    const std::vector<int> indices =
        n == kMouthPointCount
            ? [] {
                  std::vector<int> all(kMouthPointCount);
                  for (int i = 0; i < kMouthPointCount; ++i) all[i] = i;
                  return all;
              }()
            : sample_vertex_indices(kMouthPointCount, n, subset_rng);

    Rng item_rng = derive_rng(config.seed, {kStreamItems, static_cast<std::uint64_t>(n),
                                            static_cast<std::uint64_t>(subset_idx)});
    const ItemSet items = draw_items(labels, config.test_faces, config.training_pairs, item_rng);

    std::map<Strategy, std::vector<AdjacencyVector>> vectors;
    for (Strategy strategy : config.strategies) {
        std::vector<AdjacencyVector> per_face;
        per_face.reserve(mouths.size());
        for (const auto& mouth : mouths) {
            const PointCloud sub = select_vertices(mouth, indices);
            per_face.push_back(adjacency_vector(
                strategy == Strategy::complete ? complete_graph(sub) : delaunay_graph(sub)));
        }
        vectors.emplace(strategy, std::move(per_face));
    }

    std::map<std::pair<Strategy, Backend>, CellStats> cells;
    for (Strategy strategy : config.strategies) {
        const auto& vecs = vectors.at(strategy);
        for (Backend backend : config.backends) {
            CellStats stats;
            long correct_single = 0;
            long correct_whole = 0;
            for (std::size_t t = 0; t < items.test_faces.size(); ++t) {
                const std::size_t test_face = items.test_faces[t];
                long happy_votes = 0, sad_votes = 0;
                for (std::size_t p = 0; p < items.pairs.size(); ++p) {
                    const auto [sad_face, happy_face] = items.pairs[p];
                    const std::uint64_t item_idx = p * items.test_faces.size() + t;
                    Rng shot_rng = derive_rng(
                        config.seed,
                        {kStreamShots, static_cast<std::uint64_t>(n),
                         static_cast<std::uint64_t>(subset_idx), item_idx,
                         static_cast<std::uint64_t>(strategy == Strategy::complete ? 0 : 1)});
                    Decision d;
                    try {
                        d = classify_wrt_single_face(vecs[test_face], vecs[sad_face],
                                                     vecs[happy_face], backend, config.shots,
                                                     shot_rng);
                    } catch (...) {
                        std::throw_with_nested(Error(
                            "item " + std::to_string(item_idx) + " (test face " +
                            std::to_string(test_face) + ", pair " + std::to_string(sad_face) +
                            "/" + std::to_string(happy_face) + ", " + to_string(strategy) + ", " +
                            to_string(backend) + ")"));
                    }
                    ++stats.items;
                    if (d == Decision::unknown) ++stats.unknowns;
                    if (d == to_decision(labels[test_face])) ++correct_single;
                    if (d == Decision::happy)
                        ++happy_votes;
                    else
                        ++sad_votes;
                }
                Decision vote = Decision::unknown;
                if (happy_votes > sad_votes) vote = Decision::happy;
                if (sad_votes > happy_votes) vote = Decision::sad;
                if (vote == to_decision(labels[test_face])) ++correct_whole;
            }
            stats.single_acc = static_cast<double>(correct_single) / stats.items;
            stats.whole_acc =
                static_cast<double>(correct_whole) / items.test_faces.size();
            cells.emplace(std::make_pair(strategy, backend), stats);
        }
    }
    return cells;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config,
                                const std::vector<PointCloud>& faces,
                                const std::function<void(const ReportRow&)>& on_row) {
    config.validate();
    if (faces.empty()) throw ContractError("run_experiment: dataset is empty");

    std::vector<PointCloud> mouths;
    std::vector<Label> labels;
    mouths.reserve(faces.size());
    for (const auto& face : faces) {
        mouths.push_back(extract_mouth(face));
        labels.push_back(face.label);
    }

    struct Task {
        int n;
        int subset;
    };
    std::vector<Task> tasks;
    for (int n : config.n_values) {
        const int subsets = n == kMouthPointCount ? 1 : config.subsets_per_n;
        for (int s = 0; s < subsets; ++s) tasks.push_back({n, s});
    }

    using Cells = std::map<std::pair<Strategy, Backend>, CellStats>;
    std::vector<Cells> results(tasks.size());
    std::vector<std::exception_ptr> failures(tasks.size());
    std::atomic<std::size_t> next{0};
    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                                : std::max(1u, hw);
    auto work = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            try {
                results[k] = evaluate_subset(config, mouths, labels, tasks[k].n, tasks[k].subset);
            } catch (...) {
                try {
                    std::throw_with_nested(
                        Error("experiment item failed at n=" + std::to_string(tasks[k].n) +
                              " subset=" + std::to_string(tasks[k].subset)));
                } catch (...) {
                    failures[k] = std::current_exception();
                }
            }
        }
    };
    if (workers <= 1 || tasks.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(workers, tasks.size()); ++w)
            pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    ExperimentReport report;
    report.config = config;
    std::size_t cursor = 0;
    for (int n : config.n_values) {
        const int subsets = n == kMouthPointCount ? 1 : config.subsets_per_n;
        for (int s = 0; s < subsets; ++s)
            if (failures[cursor + s]) std::rethrow_exception(failures[cursor + s]);
        for (Strategy strategy : config.strategies) {
            for (Backend backend : config.backends) {
                ReportRow row;
                row.n = n;
                row.strategy = strategy;
                row.backend = backend;
                row.single_min = row.whole_min = 1.0;
                long unknowns = 0, items = 0;
                double single_sum = 0.0, whole_sum = 0.0;
                for (int s = 0; s < subsets; ++s) {
                    const CellStats& cell = results[cursor + s].at({strategy, backend});
                    single_sum += cell.single_acc;
                    whole_sum += cell.whole_acc;
                    row.single_min = std::min(row.single_min, cell.single_acc);
                    row.single_max = std::max(row.single_max, cell.single_acc);
                    row.whole_min = std::min(row.whole_min, cell.whole_acc);
                    row.whole_max = std::max(row.whole_max, cell.whole_acc);
                    unknowns += cell.unknowns;
                    items += cell.items;
                }
                row.single_mean = single_sum / subsets;
                row.whole_mean = whole_sum / subsets;
                row.unknown_rate = items == 0 ? 0.0 : static_cast<double>(unknowns) / items;
                row.item_count = static_cast<long>(config.test_faces) * config.training_pairs;
                report.rows.push_back(row);
                if (on_row) on_row(row);
            }
        }
        cursor += subsets;
    }
    return report;
}

std::string ExperimentReport::to_json() const {
    nlohmann::json j;
    j["config"] = {{"n_values", config.n_values},
                   {"subsets_per_n", config.subsets_per_n},
                   {"test_faces", config.test_faces},
                   {"training_pairs", config.training_pairs},
                   {"shots", config.shots},
                   {"seed", config.seed}};
    std::vector<std::string> strategy_names, backend_names;
    for (auto s : config.strategies) strategy_names.push_back(to_string(s));
    for (auto b : config.backends) backend_names.push_back(to_string(b));
    j["config"]["strategies"] = strategy_names;
    j["config"]["backends"] = backend_names;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        j["rows"].push_back({{"n", r.n},
                             {"strategy", to_string(r.strategy)},
                             {"backend", to_string(r.backend)},
                             {"single_mean", r.single_mean},
                             {"single_min", r.single_min},
                             {"single_max", r.single_max},
                             {"whole_mean", r.whole_mean},
                             {"whole_min", r.whole_min},
                             {"whole_max", r.whole_max},
                             {"unknown_rate", r.unknown_rate},
                             {"item_count", r.item_count}});
    }
    return j.dump(2);
}

std::string ExperimentReport::to_csv() const {
    std::string out =
        "n,strategy,backend,single_mean,single_min,single_max,whole_mean,whole_min,whole_max,"
        "unknown_rate,item_count\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + to_string(r.strategy) + ',' + to_string(r.backend) +
               ',' + format_double(r.single_mean) + ',' + format_double(r.single_min) + ',' +
               format_double(r.single_max) + ',' + format_double(r.whole_mean) + ',' +
               format_double(r.whole_min) + ',' + format_double(r.whole_max) + ',' +
               format_double(r.unknown_rate) + ',' + std::to_string(r.item_count) + '\n';
    }
    return out;
}

}  // namespace graphiq
