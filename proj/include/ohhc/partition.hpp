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
#include <span>
#include <string_view>
#include <vector>

namespace ohhc {

using Value = std::int64_t;

enum class Distribution { Random, Sorted, ReversedSorted, Local };

std::string_view to_string(Distribution kind);
Distribution parse_distribution(std::string_view text);

struct DistributionSpec {
    Distribution kind = Distribution::Random;
    std::int64_t element_count = 0;
    std::uint64_t seed = 0;
    Value lo = 0;
    Value hi = 1'000'000'000;
    // Number of equal segments used by Local; set to the processor count of
    // the network the array is destined for.
    std::int64_t segment_count = 1;

    void validate() const;
};

/// Deterministic input generator; identical specs give identical arrays.
///
///   Random          i.i.d. uniform over [lo, hi]
///   Sorted          the Random draws in ascending order
///   ReversedSorted  the Random draws in descending order
///   Local           segment_count equal runs, run k drawn uniformly from the
///                   k-th of segment_count equal bands of [lo, hi]
std::vector<Value> generate(const DistributionSpec& spec);

/// Exact rational step (max - min) / processor_count.
struct SubDivider {
    Value min_value = 0;
    Value max_value = 0;
    std::int64_t processor_count = 1;

    double as_double() const {
        return static_cast<double>(max_value - min_value) / static_cast<double>(processor_count);
    }
    /// floor((v - min) / step) clamped to [0, processor_count - 1]; everything
    /// maps to 0 when max == min.
    std::int64_t bucket_of(Value v) const;
};

struct BucketSet {
    std::vector<std::vector<Value>> buckets;
    SubDivider subdivider;
};

/// Splits master into processor_count value-range buckets. Element order
/// inside a bucket follows master. Throws std::invalid_argument on an empty
/// array or processor_count < 1.
BucketSet split(std::span<const Value> master, std::int64_t processor_count);

}  // namespace ohhc
