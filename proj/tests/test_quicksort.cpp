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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ohhc/partition.hpp"
#include "ohhc/quicksort.hpp"

using namespace ohhc;

namespace {

std::vector<Value> insertion_sort(std::vector<Value> a) {
    for (std::size_t i = 1; i < a.size(); ++i) {
        const Value key = a[i];
        std::size_t j = i;
        for (; j > 0 && a[j - 1] > key; --j) a[j] = a[j - 1];
        a[j] = key;
    }
    return a;
}

}  // namespace

TEST_CASE("empty and tiny inputs") {
    const auto empty = quicksort({});
    CHECK(empty.sorted.empty());
    CHECK(empty.metrics == SortMetrics{});

    const auto one = quicksort({42});
    CHECK(one.metrics.recursion_calls == 1);
    CHECK(one.metrics.swaps == 0);

    // Trace: pivot 2; left scan stops at 2, right scan stops at 1, exchange;
    // the next scans cross, giving ranges [0,0] and [1,1].
    const auto two = quicksort({2, 1});
    CHECK(two.sorted == std::vector<Value>{1, 2});
    CHECK(two.metrics.swaps == 1);
    CHECK(two.metrics.recursion_calls == 3);
    CHECK(two.metrics.iterations == 4);
    CHECK(two.metrics.comparisons == two.metrics.iterations);

    CHECK(quicksort({1, 2}).metrics.swaps == 0);
}

TEST_CASE("matches an insertion-sort oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = std::uniform_int_distribution<std::size_t>(0, 1000)(rng);
        const Value span = std::uniform_int_distribution<Value>(1, 1'000'000)(rng);
        std::uniform_int_distribution<Value> draw(-span, span);
        std::vector<Value> a(n);
        for (auto& v : a) v = draw(rng);
        REQUIRE(quicksort(a).sorted == insertion_sort(a));
    }
}

TEST_CASE("heavy duplicates and adversarial shapes") {
    std::vector<Value> organ;
    for (int i = 0; i < 5000; ++i) organ.push_back(i);
    for (int i = 5000; i > 0; --i) organ.push_back(i);
    for (const auto& a : {std::vector<Value>(10'000, 3), organ}) {
        auto expected = a;
        std::sort(expected.begin(), expected.end());
        CHECK(quicksort(a).sorted == expected);
    }
}

TEST_CASE("metrics are additive over disjoint sorts") {
    const auto master = generate({Distribution::Random, 50'000, 8});
    const auto set = split(master, 36);
    SortMetrics sum;
    for (const auto& b : set.buckets) sum += quicksort(b).metrics;
    SortMetrics again;
    for (const auto& b : set.buckets) again = again + quicksort(b).metrics;
    CHECK(sum == again);
    std::uint64_t calls = 0;
    for (const auto& b : set.buckets) calls += quicksort(b).metrics.recursion_calls;
    CHECK(sum.recursion_calls == calls);
}

TEST_CASE("sequential baseline") {
    CHECK_THROWS_AS(sequential_baseline(std::vector<Value>{}), std::invalid_argument);
    const auto single = sequential_baseline(std::vector<Value>{5});
    CHECK(single.metrics.recursion_calls == 1);
    CHECK(single.metrics.swaps == 0);

    const std::int64_t n = 100'000;
    const auto random = sequential_baseline(generate({Distribution::Random, n, 4}));
    const auto sorted = sequential_baseline(generate({Distribution::Sorted, n, 4}));
    const auto reversed = sequential_baseline(generate({Distribution::ReversedSorted, n, 4}));
    CHECK(sorted.metrics.iterations < random.metrics.iterations);
    CHECK(reversed.sorted == sorted.sorted);
    CHECK(random.sorted == sorted.sorted);
    CHECK(random.cost_units == random.metrics.comparisons + random.metrics.swaps);

    const auto timed = sequential_baseline(generate({Distribution::Random, 1000, 1}), true);
    CHECK(timed.wall_ms >= 0.0);
}

TEST_CASE("sorted and reversed inputs stay n log n") {
    // Middle pivot on ordered input halves every range: about n*log2(n)
    // pointer advances. c = 2 leaves room for duplicate-induced imbalance.
    constexpr double c = 2.0;
    for (std::int64_t n : {1'000, 65'536, 1'000'000}) {
        for (auto kind : {Distribution::Sorted, Distribution::ReversedSorted}) {
            const auto r = quicksort(generate({kind, n, 13}));
            CHECK(static_cast<double>(r.metrics.iterations) <= c * n * std::log2(static_cast<double>(n)));
        }
        std::vector<Value> ramp(static_cast<std::size_t>(n));
        std::iota(ramp.begin(), ramp.end(), 0);
        CHECK(quicksort(ramp).metrics.swaps == 0);
    }
}
