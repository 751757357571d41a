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

#include "ohhc/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace ohhc::analytics {

double parallel_time_model(double n, double processors) {
    if (processors < 1 || n < processors) throw std::domain_error("parallel_time_model needs n >= P >= 1");
    const double chunk = n / processors;
    if (chunk <= 1.0) return 0.0;
    return chunk * std::log2(chunk);
}

double speedup_model(double n, double processors) {
    if (processors < 1 || processors >= n) throw std::domain_error("speedup model undefined unless 1 <= P < n");
    return efficiency_model(n, processors) * processors;
}

double efficiency_model(double n, double processors) {
    if (processors < 1 || processors >= n) throw std::domain_error("efficiency model undefined unless 1 <= P < n");
    return std::log2(n) / (std::log2(n) - std::log2(processors));
}

double message_delay_model(double chunk_size, int dimension, bool worst_case, double n) {
    if (chunk_size < 0) throw std::domain_error("chunk size must be >= 0");
    const double links = static_cast<double>(path_links(dimension));
    return (worst_case ? n : chunk_size) * links;
}

double measured_speedup(double baseline_cost, double parallel_cost) {
    if (!(parallel_cost > 0)) throw std::domain_error("parallel cost must be positive");
    return baseline_cost / parallel_cost;
}

double measured_efficiency(double speedup, double processors) {
    if (processors < 1) throw std::domain_error("processor count must be >= 1");
    return speedup / processors;
}

std::int64_t comm_steps_formula(std::int64_t groups, int dimension) { return 12 * groups * dimension - 2; }

}  // namespace ohhc::analytics
