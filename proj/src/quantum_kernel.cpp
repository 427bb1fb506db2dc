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

#include "tascope/quantum_kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tascope/errors.hpp"

namespace tascope {

namespace {

void require_finite(double v, const char *what) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

double closed_form_unchecked(double xi, double xj, double gamma) noexcept {
    const double c = std::cos(0.5 * gamma * (xi - xj));
    return c * c;
}

Statevector2 encode_unchecked(double x, double gamma) noexcept {
    static const Gate2 h = gates::hadamard();
    return apply(h, apply(gates::rz(gamma * x), apply(h, Statevector2{})));
}

} // namespace

namespace gates {

Gate2 hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return {Complex{s, 0.0}, Complex{s, 0.0}, Complex{s, 0.0}, Complex{-s, 0.0}};
}

Gate2 rz(double theta) {
    const Complex phase = std::polar(1.0, 0.5 * theta);
    return {std::conj(phase), Complex{0.0, 0.0}, Complex{0.0, 0.0}, phase};
}

} // namespace gates

Statevector2 apply(const Gate2 &gate, const Statevector2 &psi) noexcept {
    return {gate[0] * psi.a0 + gate[1] * psi.a1, gate[2] * psi.a0 + gate[3] * psi.a1};
}

double fidelity(const Statevector2 &phi, const Statevector2 &psi) noexcept {
    return std::norm(std::conj(phi.a0) * psi.a0 + std::conj(phi.a1) * psi.a1);
}

Statevector2 encode_point(double x, double gamma) {
    require_finite(x, "feature");
    require_finite(gamma, "gamma");
    return encode_unchecked(x, gamma);
}

double kernel_entry_closed_form(double xi, double xj, double gamma) {
    require_finite(xi, "feature");
    require_finite(xj, "feature");
    require_finite(gamma, "gamma");
    return closed_form_unchecked(xi, xj, gamma);
}

double kernel_entry_statevector(double xi, double xj, double gamma) {
    return fidelity(encode_point(xj, gamma), encode_point(xi, gamma));
}

std::string_view to_string(KernelMethod method) noexcept {
    switch (method) {
    case KernelMethod::closed_form:
        return "closed";
    case KernelMethod::statevector:
        return "statevector";
    }
    return "closed";
}

KernelMethod parse_kernel_method(std::string_view name) {
    if (name == "closed" || name == "closed_form" || name == "closed-form") {
        return KernelMethod::closed_form;
    }
    if (name == "statevector") {
        return KernelMethod::statevector;
    }
    throw ConfigurationError("unknown kernel method '" + std::string(name) +
                             "' (expected closed or statevector)");
}

KernelMatrix kernel_matrix(const LabeledDataset &d, const FeatureMapParams &params,
                           KernelMethod method) {
    if (params.dimension() != d.dimension) {
        throw ConfigurationError("feature map has " + std::to_string(params.dimension()) +
                                 " scales but data has dimension " +
                                 std::to_string(d.dimension));
    }
    if (d.features.size() != d.size() * d.dimension) {
        throw ConfigurationError("dataset features do not match its size");
    }
    for (double g : params.gamma) {
        require_finite(g, "gamma");
    }
    for (double x : d.features) {
        require_finite(x, "feature");
    }

    const std::size_t n = d.size();
    const std::size_t dim = d.dimension;
    KernelMatrix k(n);

    if (method == KernelMethod::closed_form) {
        for (std::size_t i = 0; i < n; ++i) {
            k(i, i) = 1.0;
            const auto pi = d.point(i);
            for (std::size_t j = i + 1; j < n; ++j) {
                const auto pj = d.point(j);
                double entry = 1.0;
                for (std::size_t q = 0; q < dim; ++q) {
                    entry *= closed_form_unchecked(pi[q], pj[q], params.gamma[q]);
                }
                k(i, j) = entry;
                k(j, i) = entry;
            }
        }
        return k;
    }

    // One encoded qubit per (point, feature), reused across all pairs.
    std::vector<Statevector2> states(n * dim);
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = d.point(i);
        for (std::size_t q = 0; q < dim; ++q) {
            states[i * dim + q] = encode_unchecked(p[q], params.gamma[q]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double entry = 1.0;
            for (std::size_t q = 0; q < dim; ++q) {
                entry *= fidelity(states[j * dim + q], states[i * dim + q]);
            }
            k(i, j) = entry;
            k(j, i) = entry;
        }
    }
    return k;
}

} // namespace tascope
