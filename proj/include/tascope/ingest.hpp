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
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tascope/dataset.hpp"

namespace tascope {

/// Band values plus a +/-1 label per row, row-major.
struct RawSampleTable {
    std::size_t n_bands = 0;
    std::vector<double> bands;
    std::vector<Label> labels;
    std::vector<std::string> band_names;

    [[nodiscard]] std::size_t rows() const noexcept { return labels.size(); }
    [[nodiscard]] double at(std::size_t row, std::size_t band) const {
        return bands[row * n_bands + band];
    }
};

struct LoadOptions {
    char delimiter = ',';
    bool has_header = true;
    /// Column holding the label: a 0-based index, a negative index counted
    /// from the end, or a header name. Defaults to the last column.
    std::optional<std::string> label_column;
};

/// Delimited text: band columns and one label column. Labels 0/1 or -1/+1;
/// 0 maps to -1. Blank lines are skipped.
RawSampleTable parse_samples(std::istream &in, const LoadOptions &options = {});
RawSampleTable load_samples(const std::filesystem::path &path,
                            const LoadOptions &options = {});

struct PcaModel {
    std::vector<double> mean;
    std::vector<double> component; // unit norm, largest |entry| positive
    double eigenvalue = 0.0;
    std::size_t iterations = 0;
};

/// Sample covariance (divisor N-1), row-major d x d.
std::vector<double> sample_covariance(const RawSampleTable &table,
                                      std::span<const double> mean);

/**
 * Leading principal component by power iteration on the sample covariance.
 *
 * Iterates until the direction changes by less than 1e-12 (infinity norm).
 * Throws DegenerateDataError if every row is identical.
 */
PcaModel fit_pca(const RawSampleTable &table);

/// Projections of the centred rows onto the component.
std::vector<double> project(const RawSampleTable &table, const PcaModel &model);

/// Projects, then min-max rescales to [0, 1]. Labels carried through.
LabeledDataset project_and_rescale(const RawSampleTable &table,
                                   const PcaModel &model);

/// Uniform draw of per_class points from each class without replacement.
/// The result keeps the input order of the selected points.
LabeledDataset balanced_subsample(const LabeledDataset &d, std::size_t per_class,
                                  std::uint64_t seed);

/// Two overlapping 4-band Gaussian blobs, seeded. Class +1 is centred at
/// `separation` along every band, class -1 at the origin, unit variance.
RawSampleTable synthetic_two_blob_table(std::size_t per_class, std::uint64_t seed,
                                        double separation = 1.5);

} // namespace tascope
