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

#include "ohhc/array_io.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>

namespace ohhc {
namespace {

bool is_binary(const std::filesystem::path& path) { return path.extension() == ".bin"; }

std::uint64_t to_little_endian(std::uint64_t v) {
    if constexpr (std::endian::native == std::endian::little) return v;
    else return __builtin_bswap64(v);
}

}  // namespace

std::vector<Value> read_array(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<Value> out;

    if (is_binary(path)) {
        const auto bytes = std::filesystem::file_size(path);
        if (bytes % 8 != 0) throw std::runtime_error(path.string() + ": size is not a multiple of 8");
        out.resize(bytes / 8);
        in.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(bytes));
        if (!in) throw std::runtime_error("short read from " + path.string());
        for (auto& v : out) v = static_cast<Value>(to_little_endian(static_cast<std::uint64_t>(v)));
        return out;
    }

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        Value v = 0;
        const char* begin = line.data() + first;
        const char* end = line.data() + last + 1;
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc{} || ptr != end)
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": not an integer");
        out.push_back(v);
    }
    return out;
}

void write_array(const std::filesystem::path& path, std::span<const Value> values) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    if (is_binary(path)) {
        for (Value v : values) {
            const auto le = to_little_endian(static_cast<std::uint64_t>(v));
            out.write(reinterpret_cast<const char*>(&le), sizeof le);
        }
    } else {
        for (Value v : values) out << v << '\n';
    }
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace ohhc
