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

#include "cweth/keccak.hpp"

#include <cstring>

namespace cweth {

namespace {

constexpr std::uint64_t kRoundConstants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

constexpr unsigned kRotations[24] = {
    1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
    27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44,
};

constexpr unsigned kPiLanes[24] = {
    10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
    15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1,
};

constexpr std::uint64_t rotl64(std::uint64_t v, unsigned n) {
    return (v << n) | (v >> (64 - n));
}

void keccak_f1600(std::array<std::uint64_t, 25>& a) {
    for (int round = 0; round < 24; ++round) {
        // Theta
        std::uint64_t c[5];
        for (int x = 0; x < 5; ++x) {
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        }
        for (int x = 0; x < 5; ++x) {
            std::uint64_t d = c[(x + 4) % 5] ^ rotl64(c[(x + 1) % 5], 1);
            for (int y = 0; y < 25; y += 5) a[x + y] ^= d;
        }
        // Rho and pi
        std::uint64_t last = a[1];
        for (int i = 0; i < 24; ++i) {
            unsigned j = kPiLanes[i];
            std::uint64_t tmp = a[j];
            a[j] = rotl64(last, kRotations[i]);
            last = tmp;
        }
        // Chi
        for (int y = 0; y < 25; y += 5) {
            std::uint64_t row[5];
            for (int x = 0; x < 5; ++x) row[x] = a[y + x];
            for (int x = 0; x < 5; ++x) {
                a[y + x] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
            }
        }
        // Iota
        a[0] ^= kRoundConstants[round];
    }
}

}  // namespace

void Keccak256::absorb_block(const std::uint8_t* block) {
    for (std::size_t i = 0; i < kRate / 8; ++i) {
        std::uint64_t lane;
        std::memcpy(&lane, block + i * 8, 8);  // little-endian hosts only
        state_[i] ^= lane;
    }
    keccak_f1600(state_);
}

Keccak256& Keccak256::update(std::span<const std::uint8_t> data) {
    std::size_t off = 0;
    while (off < data.size()) {
        std::size_t take = kRate - buffered_;
        if (take > data.size() - off) take = data.size() - off;
        std::memcpy(buffer_.data() + buffered_, data.data() + off, take);
        buffered_ += take;
        off += take;
        if (buffered_ == kRate) {
            absorb_block(buffer_.data());
            buffered_ = 0;
        }
    }
    return *this;
}

Keccak256& Keccak256::update(std::string_view data) {
    return update(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

Digest32 Keccak256::finalize() {
    buffer_[buffered_] = 0x01;
    for (std::size_t i = buffered_ + 1; i < kRate; ++i) buffer_[i] = 0;
    buffer_[kRate - 1] |= 0x80;
    absorb_block(buffer_.data());

    Digest32 out;
    std::memcpy(out.data(), state_.data(), 32);
    return out;
}

Digest32 keccak256(std::span<const std::uint8_t> data) {
    Keccak256 h;
    return h.update(data).finalize();
}

Digest32 keccak256(std::string_view data) {
    Keccak256 h;
    return h.update(data).finalize();
}

}  // namespace cweth
