// Copyright 2026 The OHHC Sort Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdint>

namespace ohhc::analytics {

// Closed-form cost model of the OHHC parallel Quick Sort. Logarithms are
// base 2 throughout.

/// (n/P) * log2(n/P); 0 when n/P <= 1. Requires n >= P >= 1.
double parallel_time_model(double n, double processors);

/// P * log2(n) / (log2(n) - log2(P)). Throws std::domain_error unless 1 <= P < n.
double speedup_model(double n, double processors);

/// log2(n) / (log2(n) - log2(P)), i.e. speedup_model / P.
double efficiency_model(double n, double processors);

/// Longest gather path in links: source group diameter + destination group
/// diameter + one optical hop.
inline std::int64_t path_links(int dimension) { return 2 * std::int64_t{dimension} + 3; }

/// Store-and-forward delay t * (2d + 3), or n * (2d + 3) in the worst case.
double message_delay_model(double chunk_size, int dimension, bool worst_case, double n);

/// T_S / T_P. Throws std::domain_error when parallel_cost <= 0.
double measured_speedup(double baseline_cost, double parallel_cost);

/// S / P. Throws std::domain_error when processors < 1.
double measured_efficiency(double speedup, double processors);

/// Closed-form step count 12 * G * d - 2.
std::int64_t comm_steps_formula(std::int64_t groups, int dimension);

}  // namespace ohhc::analytics
