/*
 * Copyright (C) 2026 The cweth developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cweth/u256.hpp"

namespace cweth {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::array<std::uint8_t, 32> U256::to_be_bytes() const {
    std::array<std::uint8_t, 32> out{};
    for (int i = 0; i < 4; ++i) {
        std::uint64_t limb = limbs[3 - i];
        for (int j = 0; j < 8; ++j) {
            out[i * 8 + j] = static_cast<std::uint8_t>(limb >> (56 - 8 * j));
        }
    }
    return out;
}

U256 U256::from_be_bytes(std::span<const std::uint8_t> bytes) {
    U256 r;
    std::size_t n = bytes.size() < 32 ? bytes.size() : 32;
    // Right-align: the last byte is the least significant.
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t b = bytes[bytes.size() - 1 - i];
        r.limbs[i / 8] |= static_cast<std::uint64_t>(b) << (8 * (i % 8));
    }
    return r;
}

std::string U256::to_hex() const {
    std::string s = "0x";
    s.reserve(66);
    for (int i = 3; i >= 0; --i) {
        for (int j = 60; j >= 0; j -= 4) {
            s.push_back(kHexDigits[(limbs[i] >> j) & 0xF]);
        }
    }
    return s;
}

std::string U256::to_hex_compact() const {
    std::string full = to_hex();
    std::size_t first = full.find_first_not_of('0', 2);
    if (first == std::string::npos) return "0x0";
    return "0x" + full.substr(first);
}

std::optional<U256> U256::from_hex(std::string_view text) {
    if (text.substr(0, 2) == "0x" || text.substr(0, 2) == "0X") {
        text.remove_prefix(2);
    }
    if (text.empty() || text.size() > 64) return std::nullopt;
    U256 r;
    std::size_t pos = 0;
    for (auto it = text.rbegin(); it != text.rend(); ++it, ++pos) {
        int v = hex_value(*it);
        if (v < 0) return std::nullopt;
        r.limbs[pos / 16] |= static_cast<std::uint64_t>(v) << (4 * (pos % 16));
    }
    return r;
}

}  // namespace cweth
