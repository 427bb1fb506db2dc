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
#include <span>
#include <string>
#include <vector>

namespace tascope {

/// Class labels are the integers +1 and -1 so the ideal kernel is the
/// plain product y_i * y_j.
using Label = int;

/**
 * Ordered feature vectors with one +/-1 label each.
 *
 * Features are stored row-major, `dimension` values per point. The type
 * does not enforce its invariants on construction; `validate_dataset`
 * reports violations and `require_valid` turns them into exceptions at
 * the boundaries that need them.
 */
struct LabeledDataset {
    std::size_t dimension = 1;
    std::vector<double> features;
    std::vector<Label> labels;

    /// One-dimensional dataset from parallel lists.
    static LabeledDataset from_scalars(std::vector<double> xs,
                                       std::vector<Label> labels);

    [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }

    [[nodiscard]] std::span<const double> point(std::size_t i) const {
        return {features.data() + i * dimension, dimension};
    }

    [[nodiscard]] std::size_t count(Label label) const noexcept;

    [[nodiscard]] bool is_balanced() const noexcept {
        return count(+1) == count(-1);
    }

    /// Points at the given indices, in the order given.
    [[nodiscard]] LabeledDataset subset(std::span<const std::size_t> indices) const;

    bool operator==(const LabeledDataset &) const = default;
};

/// Toy dataset size N. Valid values are even and at least 2.
struct ToyDatasetSpec {
    int n_points = 2;
};

/// x_i = (i-1)/(N-1), y_i = (-1)^(i-1) for i = 1..N.
LabeledDataset build_toy_dataset(ToyDatasetSpec spec);

/// Throws InvalidSpecError unless N is even and >= 2.
void require_valid_toy_spec(ToyDatasetSpec spec);

struct ValidationReport {
    bool length_mismatch = false;
    bool too_few_points = false;
    bool zero_dimension = false;
    std::vector<std::size_t> out_of_range_points;
    std::vector<std::size_t> bad_label_points;
    bool balanced = false;

    [[nodiscard]] bool valid() const noexcept {
        return !length_mismatch && !too_few_points && !zero_dimension &&
               out_of_range_points.empty() && bad_label_points.empty();
    }

    /// Human-readable list of violations, empty when valid.
    [[nodiscard]] std::vector<std::string> messages() const;
};

ValidationReport validate_dataset(const LabeledDataset &d);

/// Throws DataError listing every violation found by validate_dataset.
void require_valid(const LabeledDataset &d);

/// Rotation scales, one per feature dimension, in radians per unit feature.
struct FeatureMapParams {
    std::vector<double> gamma;

    static FeatureMapParams uniform(double gamma, std::size_t dimension = 1) {
        return FeatureMapParams{std::vector<double>(dimension, gamma)};
    }

    [[nodiscard]] std::size_t dimension() const noexcept { return gamma.size(); }
};

/// Symmetric N x N matrix of fidelities, row-major.
class KernelMatrix {
  public:
    KernelMatrix() = default;
    explicit KernelMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {}
    KernelMatrix(std::size_t n, std::vector<double> values);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    double &operator()(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const {
        return values_[i * n_ + j];
    }

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

  private:
    std::size_t n_ = 0;
    std::vector<double> values_;
};

/**
 * Uniform grid over [start, end] with n_samples points.
 *
 * Only (start, end, n_samples) are stored; value(k) derives each point
 * with the same expression every time so grids are bit-identical across
 * runs and workers. The last point is exactly `end`.
 */
class GammaGrid {
  public:
    GammaGrid(double start, double end, std::size_t n_samples);

    /// Smallest grid over [start, end] whose spacing is <= max_spacing.
    /// With `odd` set, the sample count is bumped to the next odd number
    /// so the grid is usable by composite Simpson.
    static GammaGrid with_max_spacing(double start, double end,
                                      double max_spacing, bool odd = true);

    [[nodiscard]] double start() const noexcept { return start_; }
    [[nodiscard]] double end() const noexcept { return end_; }
    [[nodiscard]] std::size_t size() const noexcept { return n_samples_; }
    [[nodiscard]] double spacing() const noexcept {
        return (end_ - start_) / static_cast<double>(n_samples_ - 1);
    }
    [[nodiscard]] double value(std::size_t k) const noexcept;
    [[nodiscard]] std::vector<double> values() const;

  private:
    double start_;
    double end_;
    std::size_t n_samples_;
};

} // namespace tascope
