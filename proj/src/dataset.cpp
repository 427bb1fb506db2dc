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

#include "tascope/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tascope/errors.hpp"

namespace tascope {

LabeledDataset LabeledDataset::from_scalars(std::vector<double> xs,
                                            std::vector<Label> labels) {
    return LabeledDataset{1, std::move(xs), std::move(labels)};
}

std::size_t LabeledDataset::count(Label label) const noexcept {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), label));
}

LabeledDataset LabeledDataset::subset(std::span<const std::size_t> indices) const {
    LabeledDataset out;
    out.dimension = dimension;
    out.features.reserve(indices.size() * dimension);
    out.labels.reserve(indices.size());
    for (std::size_t i : indices) {
        const auto p = point(i);
        out.features.insert(out.features.end(), p.begin(), p.end());
        out.labels.push_back(labels[i]);
    }
    return out;
}

void require_valid_toy_spec(ToyDatasetSpec spec) {
    if (spec.n_points < 2 || spec.n_points % 2 != 0) {
        throw InvalidSpecError("n must be even and >= 2, got " +
                               std::to_string(spec.n_points));
    }
}

LabeledDataset build_toy_dataset(ToyDatasetSpec spec) {
    require_valid_toy_spec(spec);
    const auto n = static_cast<std::size_t>(spec.n_points);
    const double denom = static_cast<double>(n - 1);
    LabeledDataset d;
    d.features.resize(n);
    d.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.features[i] = static_cast<double>(i) / denom;
        d.labels[i] = (i % 2 == 0) ? +1 : -1;
    }
    return d;
}

ValidationReport validate_dataset(const LabeledDataset &d) {
    ValidationReport r;
    r.zero_dimension = d.dimension == 0;
    r.too_few_points = d.size() < 2;
    r.length_mismatch = d.features.size() != d.size() * d.dimension;
    if (!r.length_mismatch && !r.zero_dimension) {
        for (std::size_t i = 0; i < d.size(); ++i) {
            for (double v : d.point(i)) {
                if (!(v >= 0.0 && v <= 1.0)) {
                    r.out_of_range_points.push_back(i);
                    break;
                }
            }
        }
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d.labels[i] != 1 && d.labels[i] != -1) {
            r.bad_label_points.push_back(i);
        }
    }
    r.balanced = d.is_balanced();
    return r;
}

std::vector<std::string> ValidationReport::messages() const {
    std::vector<std::string> out;
    if (zero_dimension) {
        out.emplace_back("feature dimension is zero");
    }
    if (too_few_points) {
        out.emplace_back("fewer than 2 points");
    }
    if (length_mismatch) {
        out.emplace_back("feature count does not match labels x dimension");
    }
    const auto list = [](std::string_view what, const std::vector<std::size_t> &idx) {
        std::ostringstream os;
        os << what << " at point(s)";
        for (std::size_t k = 0; k < idx.size() && k < 8; ++k) {
            os << ' ' << idx[k];
        }
        if (idx.size() > 8) {
            os << " ... (" << idx.size() << " total)";
        }
        return os.str();
    };
    if (!out_of_range_points.empty()) {
        out.push_back(list("feature outside [0, 1]", out_of_range_points));
    }
    if (!bad_label_points.empty()) {
        out.push_back(list("label not +1/-1", bad_label_points));
    }
    return out;
}

void require_valid(const LabeledDataset &d) {
    const auto report = validate_dataset(d);
    if (report.valid()) {
        return;
    }
    std::string msg = "invalid dataset:";
    for (const auto &m : report.messages()) {
        msg += " " + m + ";";
    }
    throw DataError(msg);
}

KernelMatrix::KernelMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
    if (values_.size() != n_ * n_) {
        throw ConfigurationError("kernel matrix needs n*n values");
    }
}

GammaGrid::GammaGrid(double start, double end, std::size_t n_samples)
    : start_(start), end_(end), n_samples_(n_samples) {
    if (!std::isfinite(start) || !std::isfinite(end)) {
        throw ConfigurationError("gamma grid bounds must be finite");
    }
    if (!(end > start)) {
        throw ConfigurationError("gamma grid needs end > start");
    }
    if (n_samples < 2) {
        throw ConfigurationError("gamma grid needs at least 2 samples");
    }
}

GammaGrid GammaGrid::with_max_spacing(double start, double end, double max_spacing,
                                      bool odd) {
    if (!(max_spacing > 0.0) || !std::isfinite(max_spacing)) {
        throw ConfigurationError("grid spacing must be positive");
    }
    if (!(end > start)) {
        throw ConfigurationError("gamma grid needs end > start");
    }
    auto intervals = static_cast<std::size_t>(std::ceil((end - start) / max_spacing));
    intervals = std::max<std::size_t>(intervals, 1);
    if (odd && intervals % 2 != 0) {
        ++intervals;
    }
    return GammaGrid(start, end, intervals + 1);
}

double GammaGrid::value(std::size_t k) const noexcept {
    if (k + 1 >= n_samples_) {
        return end_;
    }
    return start_ + (end_ - start_) * (static_cast<double>(k) /
                                       static_cast<double>(n_samples_ - 1));
}

std::vector<double> GammaGrid::values() const {
    std::vector<double> out(n_samples_);
    for (std::size_t k = 0; k < n_samples_; ++k) {
        out[k] = value(k);
    }
    return out;
}

} // namespace tascope
