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

#include "tascope/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tascope/alignment.hpp"
#include "tascope/errors.hpp"
#include "tascope/parallel.hpp"
#include "tascope/summation.hpp"

namespace tascope {

namespace {

// Out-of-range features are allowed here; the kernel formula is total.
void require_sweepable(const LabeledDataset &d) {
    const auto r = validate_dataset(d);
    if (r.length_mismatch || r.too_few_points || r.zero_dimension ||
        !r.bad_label_points.empty()) {
        require_valid(d);
    }
}

} // namespace

double GaussianPeak::operator()(double gamma) const noexcept {
    const double z = (gamma - mu) / sigma;
    return amplitude * std::exp(-0.5 * z * z);
}

double GaussianPeak::area() const noexcept {
    return amplitude * sigma * std::sqrt(2.0 * std::numbers::pi);
}

double alignment_at(const LabeledDataset &d, double gamma, KernelMethod method) {
    const KernelMatrix k =
        kernel_matrix(d, FeatureMapParams::uniform(gamma, d.dimension), method);
    return target_alignment_general(k, d.labels);
}

AlignmentLandscape sweep(const LabeledDataset &d, const GammaGrid &grid,
                         KernelMethod method, std::size_t workers) {
    require_sweepable(d);
    AlignmentLandscape l{grid, std::vector<double>(grid.size())};
    parallel_for(grid.size(), workers, [&](std::size_t k) {
        l.values[k] = alignment_at(d, grid.value(k), method);
    });
    return l;
}

GammaGrid toy_period_grid(int n_points, double max_spacing) {
    require_valid_toy_spec({n_points});
    const double period = 2.0 * std::numbers::pi * static_cast<double>(n_points - 1);
    return GammaGrid::with_max_spacing(0.0, period, max_spacing, true);
}

GaussianPeak analytic_gaussian_peak(int n_points) {
    require_valid_toy_spec({n_points});
    const double n = n_points;
    return {std::numbers::pi * (n - 1.0),
            2.0 * std::sqrt(3.0) * (n - 1.0) / std::sqrt(n * n + 2.0),
            1.0 / std::numbers::sqrt2};
}

double curvature_sigma(ToyDatasetSpec spec, double step) {
    require_valid_toy_spec(spec);
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw ConfigurationError("curvature step must be positive and finite");
    }
    const double mu = std::numbers::pi * static_cast<double>(spec.n_points - 1);
    const auto t = [&](double gamma) { return target_alignment_toy(spec, gamma); };
    const double center = t(mu);
    const double second =
        (-t(mu + 2 * step) + 16 * t(mu + step) - 30 * center + 16 * t(mu - step) -
         t(mu - 2 * step)) /
        (12 * step * step);
    if (!(second < 0.0)) {
        throw NotAMaximumError("alignment curvature at pi(N-1) is not negative");
    }
    return std::sqrt(-center / second);
}

double landscape_mean(const AlignmentLandscape &l) {
    const std::size_t n = l.values.size();
    if (n != l.grid.size()) {
        throw ConfigurationError("landscape values do not match its grid");
    }
    if (n < 3 || n % 2 == 0) {
        throw ConfigurationError("Simpson quadrature needs an odd sample count >= 3, got " +
                                 std::to_string(n));
    }
    // integral / length = (h/3) sum w_k f_k / ((n-1) h)
    CompensatedSum s;
    for (std::size_t k = 0; k < n; ++k) {
        const double w = (k == 0 || k + 1 == n) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        s.add(w * l.values[k]);
    }
    return s.value() / (3.0 * static_cast<double>(n - 1));
}

double mean_alignment(const LabeledDataset &d, double gamma_start, double gamma_end,
                      std::size_t n_samples, KernelMethod method, std::size_t workers) {
    if (n_samples < 3 || n_samples % 2 == 0) {
        throw ConfigurationError("mean alignment needs an odd sample count >= 3, got " +
                                 std::to_string(n_samples));
    }
    return landscape_mean(sweep(d, GammaGrid(gamma_start, gamma_end, n_samples), method,
                                workers));
}

PowerLawFit fit_power_law(std::span<const double> sizes, std::span<const double> means) {
    if (sizes.size() != means.size()) {
        throw ConfigurationError("power-law fit needs equally long size and mean lists");
    }
    if (sizes.size() < 2) {
        throw ConfigurationError("power-law fit needs at least 2 points");
    }
    const std::size_t m = sizes.size();
    std::vector<double> lx(m);
    std::vector<double> ly(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!(sizes[i] > 0.0) || !std::isfinite(sizes[i])) {
            throw DomainError("power-law fit needs positive sizes");
        }
        if (!(means[i] > 0.0) || !std::isfinite(means[i])) {
            throw DomainError("power-law fit needs positive means, got " +
                              std::to_string(means[i]));
        }
        lx[i] = std::log(sizes[i]);
        ly[i] = std::log(means[i]);
    }
    const double mx = compensated_sum(lx) / static_cast<double>(m);
    const double my = compensated_sum(ly) / static_cast<double>(m);
    CompensatedSum sxx;
    CompensatedSum sxy;
    CompensatedSum syy;
    for (std::size_t i = 0; i < m; ++i) {
        const double dx = lx[i] - mx;
        const double dy = ly[i] - my;
        sxx.add(dx * dx);
        sxy.add(dx * dy);
        syy.add(dy * dy);
    }
    if (!(sxx.value() > 0.0)) {
        throw ConfigurationError("power-law fit needs at least 2 distinct sizes");
    }
    PowerLawFit fit;
    fit.exponent = sxy.value() / sxx.value();
    fit.prefactor = std::exp(my - fit.exponent * mx);
    CompensatedSum ss_res;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = ly[i] - (my + fit.exponent * (lx[i] - mx));
        ss_res.add(r * r);
    }
    const double ss_tot = syy.value();
    fit.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res.value() / ss_tot, 0.0, 1.0) : 1.0;
    return fit;
}

PeakLocation find_global_peak(const AlignmentLandscape &l) {
    if (l.values.empty()) {
        throw ConfigurationError("cannot locate the peak of an empty landscape");
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < l.values.size(); ++k) {
        if (l.values[k] > l.values[best]) {
            best = k;
        }
    }
    return {best, l.grid.value(best), l.values[best]};
}

double relative_peak_width(int n_points) {
    const GaussianPeak g = analytic_gaussian_peak(n_points);
    return g.sigma / (2.0 * std::numbers::pi * static_cast<double>(n_points - 1));
}

} // namespace tascope
