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

#include <array>
#include <complex>
#include <string_view>

#include "tascope/dataset.hpp"

namespace tascope {

using Complex = std::complex<double>;
using Gate2 = std::array<Complex, 4>; // row-major 2x2

/// Single-qubit pure state (a0 |0> + a1 |1>).
struct Statevector2 {
    Complex a0{1.0, 0.0};
    Complex a1{0.0, 0.0};

    [[nodiscard]] double norm_squared() const noexcept {
        return std::norm(a0) + std::norm(a1);
    }
};

namespace gates {
Gate2 hadamard();
/// diag(e^{-i theta/2}, e^{+i theta/2})
Gate2 rz(double theta);
} // namespace gates

Statevector2 apply(const Gate2 &gate, const Statevector2 &psi) noexcept;

/// |<phi|psi>|^2
double fidelity(const Statevector2 &phi, const Statevector2 &psi) noexcept;

/// H . RZ(gamma * x) . H |0>. Throws DomainError on non-finite input.
Statevector2 encode_point(double x, double gamma);

/// cos^2[(gamma/2)(xi - xj)]
double kernel_entry_closed_form(double xi, double xj, double gamma);

/// Fidelity of the two simulated encodings.
double kernel_entry_statevector(double xi, double xj, double gamma);

enum class KernelMethod { closed_form, statevector };

std::string_view to_string(KernelMethod method) noexcept;
/// Accepts "closed", "closed_form", "closed-form" and "statevector".
KernelMethod parse_kernel_method(std::string_view name);

/**
 * Fidelity kernel of a product-state feature map.
 *
 * Each feature q is encoded on its own qubit with scale gamma[q]; the
 * entry is the product of the per-qubit fidelities. Only the upper
 * triangle is evaluated and then mirrored, and the diagonal is set to 1.
 * Throws ConfigurationError when params.dimension() != d.dimension.
 */
KernelMatrix kernel_matrix(const LabeledDataset &d,
                           const FeatureMapParams &params,
                           KernelMethod method = KernelMethod::closed_form);

} // namespace tascope
