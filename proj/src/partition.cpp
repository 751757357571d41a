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

#include "ohhc/partition.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace ohhc {

std::string_view to_string(Distribution kind) {
    switch (kind) {
        case Distribution::Random: return "random";
        case Distribution::Sorted: return "sorted";
        case Distribution::ReversedSorted: return "reversed";
        case Distribution::Local: return "local";
    }
    return "?";
}

Distribution parse_distribution(std::string_view text) {
    if (text == "random") return Distribution::Random;
    if (text == "sorted") return Distribution::Sorted;
    if (text == "reversed") return Distribution::ReversedSorted;
    if (text == "local") return Distribution::Local;
    throw std::invalid_argument("unknown distribution: " + std::string(text));
}

void DistributionSpec::validate() const {
    if (element_count <= 0) throw std::invalid_argument("element count must be positive");
    if (lo > hi) throw std::invalid_argument("value range is empty (lo > hi)");
    if (segment_count < 1) throw std::invalid_argument("segment count must be >= 1");
}

std::vector<Value> generate(const DistributionSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    std::vector<Value> out(static_cast<std::size_t>(spec.element_count));

    if (spec.kind != Distribution::Local) {
        std::uniform_int_distribution<Value> draw(spec.lo, spec.hi);
        for (auto& v : out) v = draw(rng);
        if (spec.kind == Distribution::Sorted) std::sort(out.begin(), out.end());
        if (spec.kind == Distribution::ReversedSorted) std::sort(out.begin(), out.end(), std::greater<>{});
        return out;
    }

    // Band k is [lo + k*span/S, lo + (k+1)*span/S - 1] in 128-bit arithmetic,
    // the last band closing at hi. Run k covers elements [k*n/S, (k+1)*n/S).
    const auto segments = static_cast<__int128>(spec.segment_count);
    const auto span = static_cast<__int128>(spec.hi) - spec.lo + 1;
    const auto n = static_cast<__int128>(spec.element_count);
    for (__int128 k = 0; k < segments; ++k) {
        const auto band_lo = static_cast<Value>(spec.lo + k * span / segments);
        auto band_hi = static_cast<Value>(spec.lo + (k + 1) * span / segments - 1);
        band_hi = std::max(band_lo, band_hi);
        std::uniform_int_distribution<Value> draw(band_lo, band_hi);
        const auto first = static_cast<std::size_t>(k * n / segments);
        const auto last = static_cast<std::size_t>((k + 1) * n / segments);
        for (std::size_t i = first; i < last; ++i) out[i] = draw(rng);
    }
    return out;
}

std::int64_t SubDivider::bucket_of(Value v) const {
    if (max_value == min_value) return 0;
    const auto offset = static_cast<__int128>(v) - min_value;
    const auto range = static_cast<__int128>(max_value) - min_value;
    const auto index = static_cast<std::int64_t>(offset * processor_count / range);
    return std::clamp<std::int64_t>(index, 0, processor_count - 1);
}

BucketSet split(std::span<const Value> master, std::int64_t processor_count) {
    if (master.empty()) throw std::invalid_argument("cannot split an empty array");
    if (processor_count < 1) throw std::invalid_argument("processor count must be >= 1");

    const auto [lo, hi] = std::minmax_element(master.begin(), master.end());
    BucketSet set;
    set.subdivider = SubDivider{*lo, *hi, processor_count};
    set.buckets.resize(static_cast<std::size_t>(processor_count));

    std::vector<std::int64_t> index(master.size());
    std::vector<std::size_t> sizes(set.buckets.size(), 0);
    for (std::size_t i = 0; i < master.size(); ++i) {
        index[i] = set.subdivider.bucket_of(master[i]);
        ++sizes[static_cast<std::size_t>(index[i])];
    }
    for (std::size_t b = 0; b < sizes.size(); ++b) set.buckets[b].reserve(sizes[b]);
    for (std::size_t i = 0; i < master.size(); ++i)
        set.buckets[static_cast<std::size_t>(index[i])].push_back(master[i]);
    return set;
}

}  // namespace ohhc
