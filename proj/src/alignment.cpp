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

#include "tascope/alignment.hpp"

#include <cmath>
#include <string>

#include "tascope/errors.hpp"
#include "tascope/summation.hpp"

namespace tascope {

FrobeniusSums frobenius_sums(const KernelMatrix &k, std::span<const Label> labels) {
    const std::size_t n = k.size();
    if (labels.size() != n) {
        throw ConfigurationError("kernel is " + std::to_string(n) + "x" +
                                 std::to_string(n) + " but there are " +
                                 std::to_string(labels.size()) + " labels");
    }
    CompensatedSum kernel_ideal;
    CompensatedSum kernel_kernel;
    CompensatedSum ideal_ideal;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double kij = k(i, j);
            const double ideal = static_cast<double>(labels[i] * labels[j]);
            kernel_ideal.add(kij * ideal);
            kernel_kernel.add(kij * kij);
            ideal_ideal.add(ideal * ideal);
        }
    }
    return {kernel_ideal.value(), kernel_kernel.value(), ideal_ideal.value()};
}

double target_alignment_general(const KernelMatrix &k, std::span<const Label> labels) {
    const FrobeniusSums s = frobenius_sums(k, labels);
    if (!(s.kernel_kernel > 0.0)) {
        throw DegenerateDataError("kernel has zero Frobenius norm");
    }
    if (!(s.ideal_ideal > 0.0)) {
        throw DegenerateDataError("ideal kernel has zero Frobenius norm");
    }
    return s.kernel_ideal / std::sqrt(s.kernel_kernel * s.ideal_ideal);
}

FrobeniusSums toy_frobenius_sums(ToyDatasetSpec spec, double gamma) {
    require_valid_toy_spec(spec);
    if (!std::isfinite(gamma)) {
        throw DomainError("gamma must be finite");
    }
    const int half = spec.n_points / 2;
    const double scale = gamma / static_cast<double>(spec.n_points - 1);

    // alpha = 0 pairs two points of one class, alpha = 1 one point of each.
    CompensatedSum kernel_ideal;
    CompensatedSum kernel_kernel;
    for (int alpha = 0; alpha <= 1; ++alpha) {
        const double sign = alpha == 0 ? 1.0 : -1.0;
        for (int k = 1; k <= half; ++k) {
            for (int l = 1; l <= half; ++l) {
                const double c = std::cos(scale * (static_cast<double>(k - l) + 0.5 * alpha));
                const double c2 = c * c;
                kernel_ideal.add(sign * c2);
                kernel_kernel.add(c2 * c2);
            }
        }
    }
    const double n = static_cast<double>(spec.n_points);
    return {2.0 * kernel_ideal.value(), 2.0 * kernel_kernel.value(), n * n};
}

double target_alignment_toy(ToyDatasetSpec spec, double gamma) {
    const FrobeniusSums s = toy_frobenius_sums(spec, gamma);
    return s.kernel_ideal /
           (static_cast<double>(spec.n_points) * std::sqrt(s.kernel_kernel));
}

} // namespace tascope
