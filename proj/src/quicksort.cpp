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

#include "ohhc/quicksort.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

namespace ohhc {

SortMetrics& SortMetrics::operator+=(const SortMetrics& other) {
    recursion_calls += other.recursion_calls;
    iterations += other.iterations;
    swaps += other.swaps;
    comparisons += other.comparisons;
    return *this;
}

namespace {

// Hoare partition of [lo, hi]; returns j such that [lo, j] <= pivot <= [j+1, hi].
std::size_t partition(std::span<Value> a, std::size_t lo, std::size_t hi, SortMetrics& m) {
    const Value pivot = a[lo + (hi - lo) / 2];
    std::size_t i = lo;
    std::size_t j = hi;
    bool first = true;
    for (;;) {
        if (!first) {
            ++i;
            --j;
        }
        first = false;
        for (;; ++i) {
            ++m.iterations;
            ++m.comparisons;
            if (!(a[i] < pivot)) break;
        }
        for (;; --j) {
            ++m.iterations;
            ++m.comparisons;
            if (!(a[j] > pivot)) break;
        }
        if (i >= j) return j;
        std::swap(a[i], a[j]);
        ++m.swaps;
    }
}

// Equivalent to the textbook double recursion, but recurses only into the
// smaller side so the stack stays O(log n). Every range visited, including
// ranges of size <= 1, counts as one invocation.
void sort_range(std::span<Value> a, std::size_t lo, std::size_t hi, SortMetrics& m) {
    for (;;) {
        ++m.recursion_calls;
        if (lo >= hi) return;
        const std::size_t j = partition(a, lo, hi, m);
        if (j - lo < hi - j - 1) {
            sort_range(a, lo, j, m);
            lo = j + 1;
        } else {
            sort_range(a, j + 1, hi, m);
            hi = j;
        }
    }
}

}  // namespace

SortMetrics quicksort_in_place(std::span<Value> values) {
    SortMetrics m;
    if (values.empty()) return m;
    sort_range(values, 0, values.size() - 1, m);
    return m;
}

SortResult quicksort(std::vector<Value> values) {
    SortResult r;
    r.metrics = quicksort_in_place(values);
    r.sorted = std::move(values);
    return r;
}

BaselineResult sequential_baseline(std::span<const Value> master, bool timed) {
    if (master.empty()) throw std::invalid_argument("baseline needs a non-empty array");
    BaselineResult r;
    r.sorted.assign(master.begin(), master.end());
    const auto start = std::chrono::steady_clock::now();
    r.metrics = quicksort_in_place(r.sorted);
    if (timed)
        r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.cost_units = r.metrics.cost_units();
    return r;
}

}  // namespace ohhc
