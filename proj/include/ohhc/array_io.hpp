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

#include <filesystem>
#include <span>
#include <vector>

#include "ohhc/partition.hpp"

namespace ohhc {

// Files ending in ".bin" hold raw little-endian int64 values; anything else
// is newline-delimited decimal text. Throws std::runtime_error on I/O or
// parse failure.
std::vector<Value> read_array(const std::filesystem::path& path);
void write_array(const std::filesystem::path& path, std::span<const Value> values);

}  // namespace ohhc
