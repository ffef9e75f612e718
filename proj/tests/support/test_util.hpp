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

#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cweth/curve.hpp"
#include "cweth/elgamal.hpp"
#include "cweth/keccak.hpp"

namespace cweth::test {

inline nlohmann::json load_fixture(const std::string& name) {
    const std::string path = std::string(CWETH_FIXTURES_DIR) + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing fixture: " + path);
    return nlohmann::json::parse(in);
}

inline U256 u256_of(const std::string& hex) {
    auto v = U256::from_hex(hex);
    if (!v) throw std::runtime_error("bad hex in fixture: " + hex);
    return *v;
}

inline Fq fq_of(const std::string& hex) { return Fq::from_u256(u256_of(hex)); }
inline Fl fl_of(const std::string& hex) { return Fl::from_u256(u256_of(hex)); }

/// Points in fixtures are [x, y] hex pairs.
inline Point point_of(const nlohmann::json& j) {
    return Point{fq_of(j.at(0).get<std::string>()),
                 fq_of(j.at(1).get<std::string>())};
}

inline std::vector<std::uint8_t> bytes_of(const std::string& hex) {
    std::string_view s = hex;
    if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
    if (s.size() % 2 != 0) throw std::runtime_error("odd hex length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::runtime_error("bad hex digit");
    };
    std::vector<std::uint8_t> out(s.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(nibble(s[2 * i]) << 4 |
                                           nibble(s[2 * i + 1]));
    }
    return out;
}

inline std::string hex_of(std::span<const std::uint8_t> bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out = "0x";
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

/// Deterministic test value stream: draw i is keccak256(tag || be64(i)).
class TestRng {
public:
    explicit TestRng(std::string_view tag) {
        seed_ = keccak256(tag);
    }

    U256 next_u256() {
        std::array<std::uint8_t, 40> buf{};
        std::copy(seed_.begin(), seed_.end(), buf.begin());
        for (int i = 0; i < 8; ++i) {
            buf[32 + i] = static_cast<std::uint8_t>(counter_ >> (8 * (7 - i)));
        }
        ++counter_;
        return U256::from_be_bytes(keccak256(std::span<const std::uint8_t>(buf)));
    }

    Fq next_fq() { return Fq::from_u256(next_u256()); }
    Fl next_fl() { return Fl::from_u256(next_u256()); }

    /// Nonzero scalar, for private keys and nonces.
    Fl next_nonzero_fl() {
        Fl v = next_fl();
        while (v.is_zero()) v = next_fl();
        return v;
    }

    /// Uniform amount in [0, 2^96).
    Amount next_amount() {
        U256 v = next_u256();
        return Amount{v.limbs[0], v.limbs[1] & 0xffffffffULL, 0, 0};
    }

    /// Uniform amount in [0, bound]; bound must fit in 96 bits.
    Amount next_amount_upto(const Amount& bound) {
        unsigned __int128 b =
            (static_cast<unsigned __int128>(bound.limbs[1]) << 64) |
            bound.limbs[0];
        if (b == 0) return Amount{};
        U256 v = next_u256();
        unsigned __int128 x =
            (static_cast<unsigned __int128>(v.limbs[1]) << 64) | v.limbs[0];
        unsigned __int128 r = x % (b + 1);
        return Amount{static_cast<std::uint64_t>(r),
                      static_cast<std::uint64_t>(r >> 64), 0, 0};
    }

    std::uint64_t next_index(std::uint64_t n) {
        return next_u256().limbs[0] % n;
    }

private:
    Digest32 seed_{};
    std::uint64_t counter_ = 0;
};

}  // namespace cweth::test
