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
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>

#include "ohhc/array_io.hpp"
#include "ohhc/partition.hpp"

using namespace ohhc;

namespace {

void check_bucket_invariants(std::span<const Value> master, const BucketSet& set, std::int64_t n) {
    REQUIRE(set.buckets.size() == static_cast<std::size_t>(n));
    std::vector<Value> joined;
    for (const auto& b : set.buckets) joined.insert(joined.end(), b.begin(), b.end());
    std::vector<Value> expected(master.begin(), master.end());
    std::sort(joined.begin(), joined.end());
    std::sort(expected.begin(), expected.end());
    CHECK(joined == expected);

    std::optional<Value> prev_max;
    for (const auto& b : set.buckets) {
        if (b.empty()) continue;
        const auto [lo, hi] = std::minmax_element(b.begin(), b.end());
        if (prev_max) CHECK(*prev_max <= *lo);
        prev_max = *hi;
    }
}

}  // namespace

TEST_CASE("split worked examples") {
    const std::vector<Value> a{1, 5, 9, 3};
    const auto set = split(a, 2);
    CHECK(set.subdivider.as_double() == doctest::Approx(4.0));
    CHECK(set.buckets[0] == std::vector<Value>{1, 3});
    CHECK(set.buckets[1] == std::vector<Value>{5, 9});

    const std::vector<Value> same{7, 7, 7};
    const auto flat = split(same, 3);
    CHECK(flat.buckets[0] == same);
    CHECK(flat.buckets[1].empty());
    CHECK(flat.buckets[2].empty());

    const std::vector<Value> any{4, -2, 8, 8, 0};
    CHECK(split(any, 1).buckets[0] == any);
}

TEST_CASE("split errors") {
    CHECK_THROWS_AS(split(std::vector<Value>{}, 4), std::invalid_argument);
    CHECK_THROWS_AS(split(std::vector<Value>{1}, 0), std::invalid_argument);
}

TEST_CASE("maximum value is clamped into the last bucket") {
    const std::vector<Value> a{0, 10, 20, 30};
    const auto set = split(a, 3);
    CHECK(set.buckets[2].back() == 30);
    CHECK(set.subdivider.bucket_of(30) == 2);
    CHECK(set.subdivider.bucket_of(0) == 0);
}

TEST_CASE("extreme values do not overflow the bucket index") {
    const std::vector<Value> a{std::numeric_limits<Value>::min(), 0, std::numeric_limits<Value>::max()};
    const auto set = split(a, 2304);
    CHECK(set.buckets.front() == std::vector<Value>{std::numeric_limits<Value>::min()});
    CHECK(set.buckets.back() == std::vector<Value>{std::numeric_limits<Value>::max()});
    check_bucket_invariants(a, set, 2304);
}

TEST_CASE("split invariants on random inputs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const auto size = std::uniform_int_distribution<std::size_t>(1, 2000)(rng);
        const auto n = std::uniform_int_distribution<std::int64_t>(1, 300)(rng);
        const Value lo = std::uniform_int_distribution<Value>(-1000, 1000)(rng);
        const Value hi = lo + std::uniform_int_distribution<Value>(0, 5000)(rng);
        std::uniform_int_distribution<Value> draw(lo, hi);
        std::vector<Value> a(size);
        for (auto& v : a) v = draw(rng);
        const auto set = split(a, n);
        check_bucket_invariants(a, set, n);
        CHECK(split(a, n).buckets == set.buckets);
    }
}

TEST_CASE("generate") {
    const auto sorted = generate({Distribution::Sorted, 5, 9, 1, 100});
    CHECK(sorted.size() == 5);
    CHECK(std::is_sorted(sorted.begin(), sorted.end()));
    CHECK(std::all_of(sorted.begin(), sorted.end(), [](Value v) { return v >= 1 && v <= 100; }));

    const auto asc = generate({Distribution::Sorted, 1000, 3});
    auto desc = generate({Distribution::ReversedSorted, 1000, 3});
    std::reverse(desc.begin(), desc.end());
    CHECK(desc == asc);

    const DistributionSpec big{Distribution::Random, 1'000'000, 77};
    CHECK(generate(big) == generate(big));
    CHECK(generate(big) != generate({Distribution::Random, 1'000'000, 78}));

    CHECK_THROWS_AS(generate({Distribution::Random, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Distribution::Random, 10, 1, 5, 4}), std::invalid_argument);
}

TEST_CASE("local distribution fills ascending bands") {
    const std::int64_t segments = 36;
    const DistributionSpec spec{Distribution::Local, 36'000, 5, 0, 35'999, segments};
    const auto a = generate(spec);
    for (std::int64_t k = 0; k < segments; ++k) {
        for (std::int64_t i = k * 1000; i < (k + 1) * 1000; ++i) {
            REQUIRE(a[i] >= k * 1000);
            REQUIRE(a[i] <= k * 1000 + 999);
        }
    }
    CHECK_FALSE(std::is_sorted(a.begin(), a.end()));
    // Tiny ranges still produce valid bands.
    const auto narrow = generate({Distribution::Local, 100, 1, 0, 3, 10});
    CHECK(std::all_of(narrow.begin(), narrow.end(), [](Value v) { return v >= 0 && v <= 3; }));
}

TEST_CASE("array files round-trip in text and binary form") {
    const auto dir = std::filesystem::temp_directory_path() / "ohhc_partition_test";
    std::filesystem::create_directories(dir);
    const auto values = generate({Distribution::Random, 500, 11, -1'000'000'000'000, 1'000'000'000'000});
    for (const char* name : {"a.txt", "a.bin"}) {
        write_array(dir / name, values);
        CHECK(read_array(dir / name) == values);
    }
    CHECK(std::filesystem::file_size(dir / "a.bin") == 500 * 8);

    {
        std::ofstream bad(dir / "bad.txt");
        bad << "12\n\n  -4 \nx9\n";
    }
    CHECK_THROWS_AS(read_array(dir / "bad.txt"), std::runtime_error);
    {
        std::ofstream odd(dir / "odd.bin", std::ios::binary);
        odd << "abc";
    }
    CHECK_THROWS_AS(read_array(dir / "odd.bin"), std::runtime_error);
    CHECK_THROWS_AS(read_array(dir / "missing.txt"), std::runtime_error);
    std::filesystem::remove_all(dir);
}
