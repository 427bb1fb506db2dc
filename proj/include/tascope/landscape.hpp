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
#include <vector>

#include "tascope/dataset.hpp"
#include "tascope/quantum_kernel.hpp"

namespace tascope {

/// Grid spacing used when none is given, in radians.
inline constexpr double kDefaultGammaSpacing = 0.01;

struct AlignmentLandscape {
    GammaGrid grid;
    std::vector<double> values;
};

/// Gaussian G(gamma) = amplitude * exp(-((gamma - mu)/sigma)^2 / 2).
struct GaussianPeak {
    double mu = 0.0;
    double sigma = 1.0;
    double amplitude = 0.0;

    [[nodiscard]] double operator()(double gamma) const noexcept;
    /// Integral over the whole real line.
    [[nodiscard]] double area() const noexcept;
};

struct PowerLawFit {
    double exponent = 0.0;
    double prefactor = 0.0;
    double r_squared = 0.0;
};

struct PeakLocation {
    std::size_t index = 0;
    double gamma = 0.0;
    double value = 0.0;
};

/// Alignment at every grid point. Points are evaluated independently,
/// so the result does not depend on `workers`.
AlignmentLandscape sweep(const LabeledDataset &d, const GammaGrid &grid,
                         KernelMethod method = KernelMethod::closed_form,
                         std::size_t workers = 1);

/// Alignment of `d` at a scalar gamma shared by all feature dimensions.
double alignment_at(const LabeledDataset &d, double gamma,
                    KernelMethod method = KernelMethod::closed_form);

/// One period [0, 2 pi (N-1)] of the toy landscape.
GammaGrid toy_period_grid(int n_points, double max_spacing = kDefaultGammaSpacing);

/// mu = pi (N-1), sigma = 2 sqrt(3) (N-1) / sqrt(N^2 + 2), amplitude 1/sqrt(2).
GaussianPeak analytic_gaussian_peak(int n_points);

/**
 * Peak width implied by the measured curvature of the toy alignment at
 * gamma = pi (N-1): sqrt(-T / T''), with T'' from a five-point central
 * stencil of half-width `step`.
 */
double curvature_sigma(ToyDatasetSpec spec, double step = 1e-3);

/// Composite Simpson mean of the landscape over its grid range.
/// The grid must have an odd number (>= 3) of samples.
double landscape_mean(const AlignmentLandscape &l);

/// Simpson mean of alignment over [gamma_start, gamma_end].
double mean_alignment(const LabeledDataset &d, double gamma_start,
                      double gamma_end, std::size_t n_samples,
                      KernelMethod method = KernelMethod::closed_form,
                      std::size_t workers = 1);

/// Least-squares line through (log N, log mean); exponent is the slope.
PowerLawFit fit_power_law(std::span<const double> sizes,
                          std::span<const double> means);

/// First grid point attaining the maximum.
PeakLocation find_global_peak(const AlignmentLandscape &l);

/// sigma(N) / (2 pi (N-1))
double relative_peak_width(int n_points);

} // namespace tascope
