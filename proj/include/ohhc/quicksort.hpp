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
#include <vector>

#include "ohhc/partition.hpp"

namespace ohhc {

/// Work counters for one sort invocation.
///
/// recursion_calls counts every invocation of the recursive routine, base
/// cases included. iterations counts pointer advances of the Hoare scan, and
/// each advance performs exactly one key comparison, so for this kernel
/// comparisons == iterations. swaps counts element exchanges.
struct SortMetrics {
    std::uint64_t recursion_calls = 0;
    std::uint64_t iterations = 0;
    std::uint64_t swaps = 0;
    std::uint64_t comparisons = 0;

    /// comparisons + swaps; the deterministic cost unit used for modeled speedup.
    std::uint64_t cost_units() const { return comparisons + swaps; }

    SortMetrics& operator+=(const SortMetrics& other);
    friend SortMetrics operator+(SortMetrics a, const SortMetrics& b) { return a += b; }
    friend bool operator==(const SortMetrics&, const SortMetrics&) = default;
};

/// In-place Quick Sort: middle-element pivot, Hoare two-pointer partition.
SortMetrics quicksort_in_place(std::span<Value> values);

struct SortResult {
    std::vector<Value> sorted;
    SortMetrics metrics;
};

SortResult quicksort(std::vector<Value> values);

struct BaselineResult {
    std::vector<Value> sorted;
    SortMetrics metrics;
    std::uint64_t cost_units = 0;
    double wall_ms = 0.0;  // filled only when timed
};

/// Whole-array sequential run used as the speedup reference. Throws
/// std::invalid_argument on an empty array.
BaselineResult sequential_baseline(std::span<const Value> master, bool timed = false);

}  // namespace ohhc
