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
#include <cstdint>
#include <span>
#include <string_view>

namespace cweth {

using Digest32 = std::array<std::uint8_t, 32>;

// Keccak-256 as used by Ethereum (original Keccak padding 0x01, not SHA-3).
class Keccak256 {
public:
    Keccak256() = default;

    Keccak256& update(std::span<const std::uint8_t> data);
    Keccak256& update(std::string_view data);

    Digest32 finalize();

private:
    static constexpr std::size_t kRate = 136;

    std::array<std::uint64_t, 25> state_{};
    std::array<std::uint8_t, kRate> buffer_{};
    std::size_t buffered_ = 0;

    void absorb_block(const std::uint8_t* block);
};

Digest32 keccak256(std::span<const std::uint8_t> data);
Digest32 keccak256(std::string_view data);

}  // namespace cweth
