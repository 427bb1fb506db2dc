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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tascope/dataset.hpp"
#include "tascope/landscape.hpp"
#include "tascope/quantum_kernel.hpp"

namespace tascope {

struct ScalingPoint {
    int n_points = 0;
    double mean_ta = 0.0;
};

/// One-period mean alignment of the toy model for each size.
std::vector<ScalingPoint> scaling_experiment(std::span<const int> sizes,
                                             double max_spacing = kDefaultGammaSpacing,
                                             KernelMethod method = KernelMethod::closed_form,
                                             std::size_t workers = 1);

inline constexpr std::size_t kDefaultSeedCount = 10;

struct IncrementalConfig {
    LabeledDataset pool;
    std::vector<std::uint64_t> seeds;
    int points_per_class_per_iteration = 1;
    /// Averaging range; defaults to [0, 2 pi (pool size - 1)].
    std::optional<double> gamma_start;
    std::optional<double> gamma_end;
    double max_spacing = kDefaultGammaSpacing;
    KernelMethod method = KernelMethod::closed_form;

    /// Range and grid actually used, after applying defaults.
    [[nodiscard]] GammaGrid resolved_grid() const;
};

/// Seeds 0..count-1 shifted by `base`.
std::vector<std::uint64_t> seed_range(std::size_t count, std::uint64_t base = 0);

struct TraceRecord {
    int iteration = 0;
    std::size_t subset_size = 0;
    double mean_ta = 0.0;
    std::uint64_t seed = 0;
};

struct ExperimentTrace {
    std::uint64_t seed = 0;
    std::vector<TraceRecord> records;
    /// Pool indices in the order they were drawn.
    std::vector<std::size_t> draw_order;
};

/**
 * Introduces pool points gradually, one seed per trace.
 *
 * Each trace starts from one random point per class, then adds
 * `points_per_class_per_iteration` points from each class until the pool
 * is exhausted; a final short draw takes whatever remains. After every
 * addition the mean alignment of the subset is recorded. Subsets keep
 * pool order, so the last record equals the full-pool mean exactly.
 * Seeds run on up to `workers` threads; traces are identical for any
 * worker count.
 */
std::vector<ExperimentTrace> incremental_experiment(const IncrementalConfig &cfg,
                                                    std::size_t workers = 1);

struct EnsemblePoint {
    std::size_t subset_size = 0;
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n_seeds = 0;
};

/// Seed-averaged curve: mean and standard error of the mean per subset size.
std::vector<EnsemblePoint> summarize(std::span<const ExperimentTrace> traces);

struct TrendCheck {
    bool holds = true;
    /// Subset size at which the tolerance was exceeded, if any.
    std::optional<std::size_t> first_violation;
};

/// Checks mean[k+1] < mean[k] + z * sqrt(se[k]^2 + se[k+1]^2) for every
/// consecutive pair with subset size >= from_size.
TrendCheck decreasing_within_noise(std::span<const EnsemblePoint> curve,
                                   std::size_t from_size, double z = 3.0);

} // namespace tascope
