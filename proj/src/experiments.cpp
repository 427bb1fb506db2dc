// Copyright 2026 The tascope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tascope/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "tascope/errors.hpp"
#include "tascope/parallel.hpp"
#include "tascope/rng.hpp"
#include "tascope/summation.hpp"

namespace tascope {

std::vector<ScalingPoint> scaling_experiment(std::span<const int> sizes, double max_spacing,
                                             KernelMethod method, std::size_t workers) {
    for (int n : sizes) {
        require_valid_toy_spec({n});
    }
    std::vector<ScalingPoint> out;
    out.reserve(sizes.size());
    for (int n : sizes) {
        const auto l = sweep(build_toy_dataset({n}), toy_period_grid(n, max_spacing), method,
                             workers);
        out.push_back({n, landscape_mean(l)});
    }
    return out;
}

GammaGrid IncrementalConfig::resolved_grid() const {
    const double start = gamma_start.value_or(0.0);
    const double end = gamma_end.value_or(
        2.0 * std::numbers::pi * static_cast<double>(pool.size() - 1));
    return GammaGrid::with_max_spacing(start, end, max_spacing, true);
}

std::vector<std::uint64_t> seed_range(std::size_t count, std::uint64_t base) {
    std::vector<std::uint64_t> seeds(count);
    for (std::size_t i = 0; i < count; ++i) {
        seeds[i] = base + i;
    }
    return seeds;
}

namespace {

void require_valid_config(const IncrementalConfig &cfg) {
    require_valid(cfg.pool);
    if (!cfg.pool.is_balanced()) {
        throw ConfigurationError("incremental pool must be balanced (" +
                                 std::to_string(cfg.pool.count(+1)) + " vs " +
                                 std::to_string(cfg.pool.count(-1)) + ")");
    }
    if (cfg.pool.count(+1) < 2) {
        throw ConfigurationError("incremental pool needs at least 2 points per class");
    }
    if (cfg.seeds.empty()) {
        throw ConfigurationError("incremental experiment needs at least one seed");
    }
    if (cfg.points_per_class_per_iteration < 1) {
        throw ConfigurationError("points per class per iteration must be >= 1");
    }
}

ExperimentTrace run_seed(const IncrementalConfig &cfg, const GammaGrid &grid,
                         std::uint64_t seed, std::size_t workers) {
    std::vector<std::size_t> positive;
    std::vector<std::size_t> negative;
    for (std::size_t i = 0; i < cfg.pool.size(); ++i) {
        (cfg.pool.labels[i] == 1 ? positive : negative).push_back(i);
    }
    // A shuffled class list consumed front to back is a sequence of
    // uniform draws without replacement.
    Rng rng(seed);
    rng.shuffle(positive);
    rng.shuffle(negative);

    ExperimentTrace trace;
    trace.seed = seed;
    std::vector<std::size_t> selected; // kept in pool order
    const auto take = [&](std::size_t from, std::size_t count) {
        for (std::size_t k = from; k < from + count; ++k) {
            for (std::size_t idx : {positive[k], negative[k]}) {
                selected.insert(std::upper_bound(selected.begin(), selected.end(), idx), idx);
                trace.draw_order.push_back(idx);
            }
        }
    };

    const std::size_t per_class = positive.size();
    const auto step = static_cast<std::size_t>(cfg.points_per_class_per_iteration);
    std::size_t used = 0;
    int iteration = 0;
    while (used < per_class) {
        const std::size_t count = used == 0 ? 1 : std::min(step, per_class - used);
        take(used, count);
        used += count;
        const double mean =
            landscape_mean(sweep(cfg.pool.subset(selected), grid, cfg.method, workers));
        trace.records.push_back({iteration, selected.size(), mean, seed});
        ++iteration;
    }
    return trace;
}

} // namespace

std::vector<ExperimentTrace> incremental_experiment(const IncrementalConfig &cfg,
                                                    std::size_t workers) {
    require_valid_config(cfg);
    const GammaGrid grid = cfg.resolved_grid();
    workers = std::max<std::size_t>(workers, 1);
    const std::size_t outer = std::min(workers, cfg.seeds.size());
    const std::size_t inner = std::max<std::size_t>(1, workers / outer);

    std::vector<ExperimentTrace> traces(cfg.seeds.size());
    parallel_for(cfg.seeds.size(), outer, [&](std::size_t s) {
        traces[s] = run_seed(cfg, grid, cfg.seeds[s], inner);
    });
    return traces;
}

std::vector<EnsemblePoint> summarize(std::span<const ExperimentTrace> traces) {
    std::map<std::size_t, std::vector<double>> by_size;
    for (const auto &t : traces) {
        for (const auto &r : t.records) {
            by_size[r.subset_size].push_back(r.mean_ta);
        }
    }
    std::vector<EnsemblePoint> out;
    out.reserve(by_size.size());
    for (const auto &[size, values] : by_size) {
        const auto m = static_cast<double>(values.size());
        const double mean = compensated_sum(values) / m;
        double se = 0.0;
        if (values.size() > 1) {
            CompensatedSum ss;
            for (double v : values) {
                ss.add((v - mean) * (v - mean));
            }
            se = std::sqrt(ss.value() / (m - 1.0)) / std::sqrt(m);
        }
        out.push_back({size, mean, se, values.size()});
    }
    return out;
}

TrendCheck decreasing_within_noise(std::span<const EnsemblePoint> curve,
                                   std::size_t from_size, double z) {
    TrendCheck check;
    for (std::size_t k = 0; k + 1 < curve.size(); ++k) {
        if (curve[k].subset_size < from_size) {
            continue;
        }
        const double tolerance =
            z * std::hypot(curve[k].std_error, curve[k + 1].std_error);
        if (!(curve[k + 1].mean < curve[k].mean + tolerance)) {
            check.holds = false;
            check.first_violation = curve[k + 1].subset_size;
            break;
        }
    }
    return check;
}

} // namespace tascope
