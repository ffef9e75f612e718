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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace cweth {

/// 256-bit unsigned integer as four little-endian 64-bit limbs.
/// The canonical number is limbs[0] + limbs[1]*2^64 + limbs[2]*2^128 + limbs[3]*2^192.
struct U256 {
    std::array<std::uint64_t, 4> limbs{};

    constexpr U256() = default;
    constexpr explicit U256(std::uint64_t v) : limbs{v, 0, 0, 0} {}
    constexpr U256(std::uint64_t l0, std::uint64_t l1,
                   std::uint64_t l2, std::uint64_t l3)
        : limbs{l0, l1, l2, l3} {}

    constexpr bool operator==(const U256&) const = default;

    constexpr bool is_zero() const {
        return (limbs[0] | limbs[1] | limbs[2] | limbs[3]) == 0;
    }

    constexpr bool bit(std::size_t i) const {
        return (limbs[i / 64] >> (i % 64)) & 1;
    }

    /// Index of the highest set bit plus one; 0 for zero.
    constexpr std::size_t bit_length() const {
        for (int i = 3; i >= 0; --i) {
            if (limbs[i] != 0) {
                std::uint64_t v = limbs[i];
                std::size_t bits = 0;
                while (v != 0) {
                    v >>= 1;
                    ++bits;
                }
                return static_cast<std::size_t>(i) * 64 + bits;
            }
        }
        return 0;
    }

    std::array<std::uint8_t, 32> to_be_bytes() const;
    static U256 from_be_bytes(std::span<const std::uint8_t> bytes);

    /// "0x" plus exactly 64 lowercase hex digits.
    std::string to_hex() const;
    /// Short form without leading zeros ("0x0" for zero); used for amounts
    /// and counters in JSON.
    std::string to_hex_compact() const;
    /// Accepts an optional 0x prefix and 1..64 hex digits.
    static std::optional<U256> from_hex(std::string_view text);
};

constexpr bool u256_less(const U256& a, const U256& b) {
    for (int i = 3; i >= 0; --i) {
        if (a.limbs[i] != b.limbs[i]) return a.limbs[i] < b.limbs[i];
    }
    return false;
}

constexpr bool operator<(const U256& a, const U256& b) { return u256_less(a, b); }
constexpr bool operator>(const U256& a, const U256& b) { return b < a; }
constexpr bool operator<=(const U256& a, const U256& b) { return !(b < a); }
constexpr bool operator>=(const U256& a, const U256& b) { return !(a < b); }

/// a + b, also reporting the carry out of bit 255.
constexpr U256 u256_add(const U256& a, const U256& b, std::uint64_t& carry_out) {
    U256 r;
    unsigned __int128 carry = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 sum =
            static_cast<unsigned __int128>(a.limbs[i]) + b.limbs[i] + carry;
        r.limbs[i] = static_cast<std::uint64_t>(sum);
        carry = sum >> 64;
    }
    carry_out = static_cast<std::uint64_t>(carry);
    return r;
}

constexpr U256 u256_add(const U256& a, const U256& b) {
    std::uint64_t carry = 0;
    return u256_add(a, b, carry);
}

/// a - b modulo 2^256, also reporting the borrow.
constexpr U256 u256_sub(const U256& a, const U256& b, std::uint64_t& borrow_out) {
    U256 r;
    std::uint64_t borrow = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 diff = static_cast<unsigned __int128>(a.limbs[i]) -
                                 b.limbs[i] - borrow;
        r.limbs[i] = static_cast<std::uint64_t>(diff);
        borrow = (diff >> 64) ? 1 : 0;
    }
    borrow_out = borrow;
    return r;
}

constexpr U256 u256_sub(const U256& a, const U256& b) {
    std::uint64_t borrow = 0;
    return u256_sub(a, b, borrow);
}

/// Full 256x256 -> 512-bit product, little-endian limbs.
constexpr std::array<std::uint64_t, 8> u256_mul_wide(const U256& a, const U256& b) {
    std::array<std::uint64_t, 8> r{};
    for (int i = 0; i < 4; ++i) {
        std::uint64_t carry = 0;
        for (int j = 0; j < 4; ++j) {
            unsigned __int128 acc =
                static_cast<unsigned __int128>(a.limbs[i]) * b.limbs[j] +
                r[i + j] + carry;
            r[i + j] = static_cast<std::uint64_t>(acc);
            carry = static_cast<std::uint64_t>(acc >> 64);
        }
        r[i + 4] = carry;
    }
    return r;
}

}  // namespace cweth
