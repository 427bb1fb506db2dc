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

#include <span>

#include "tascope/dataset.hpp"

namespace tascope {

/// Frobenius inner products entering the alignment.
struct FrobeniusSums {
    double kernel_ideal = 0.0;  // <K, Kbar>_F
    double kernel_kernel = 0.0; // <K, K>_F
    double ideal_ideal = 0.0;   // <Kbar, Kbar>_F
};

FrobeniusSums frobenius_sums(const KernelMatrix &k, std::span<const Label> labels);

/// <K,Kbar>_F / sqrt(<K,K>_F <Kbar,Kbar>_F) with Kbar_ij = y_i y_j.
/// All N^2 entries take part, diagonal included; no centering.
double target_alignment_general(const KernelMatrix &k,
                                std::span<const Label> labels);

/// Toy-model sums: the alternating labels let both inner products be
/// written over half-size index pairs (k, l) and an offset alpha in
/// {0, 1/2}. `kernel_kernel` here is <K,K>_F itself, not its square.
FrobeniusSums toy_frobenius_sums(ToyDatasetSpec spec, double gamma);

/// (1/N) <K,Kbar>_F / sqrt(<K,K>_F) for the toy dataset.
double target_alignment_toy(ToyDatasetSpec spec, double gamma);

} // namespace tascope
