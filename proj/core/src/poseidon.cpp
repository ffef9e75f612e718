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

#include "cweth/poseidon.hpp"

#include <cstddef>

namespace cweth {

namespace {

#include "poseidon_constants.inc"

constexpr std::size_t kPoseidonRoundsTotal =
    kPoseidonFullRounds + kPoseidonPartialRounds;

struct Tables {
    Fq ark[kPoseidonRoundsTotal * kPoseidonWidth];
    Fq mds[kPoseidonWidth][kPoseidonWidth];
};

const Tables& tables() {
    static const Tables t = [] {
        Tables out;
        for (std::size_t i = 0; i < kPoseidonRoundsTotal * kPoseidonWidth; ++i) {
            out.ark[i] = Fq::from_u256(U256(kPoseidonRoundConstants[i][0],
                                            kPoseidonRoundConstants[i][1],
                                            kPoseidonRoundConstants[i][2],
                                            kPoseidonRoundConstants[i][3]));
        }
        for (std::size_t r = 0; r < kPoseidonWidth; ++r) {
            for (std::size_t c = 0; c < kPoseidonWidth; ++c) {
                out.mds[r][c] = Fq::from_u256(U256(kPoseidonMds[r][c][0],
                                                   kPoseidonMds[r][c][1],
                                                   kPoseidonMds[r][c][2],
                                                   kPoseidonMds[r][c][3]));
            }
        }
        return out;
    }();
    return t;
}

Fq quintic(const Fq& v) {
    Fq v2 = v.square();
    return v2.square() * v;
}

}  // namespace

std::array<Fq, 3> poseidon_permutation(const std::array<Fq, 3>& state) {
    const Tables& t = tables();
    std::array<Fq, 3> s = state;

    constexpr std::size_t half_full = kPoseidonFullRounds / 2;
    for (std::size_t round = 0; round < kPoseidonRoundsTotal; ++round) {
        for (std::size_t i = 0; i < 3; ++i) {
            s[i] += t.ark[round * 3 + i];
        }
        const bool full =
            round < half_full || round >= half_full + kPoseidonPartialRounds;
        if (full) {
            for (std::size_t i = 0; i < 3; ++i) s[i] = quintic(s[i]);
        } else {
            s[0] = quintic(s[0]);
        }
        std::array<Fq, 3> mixed;
        for (std::size_t r = 0; r < 3; ++r) {
            mixed[r] = t.mds[r][0] * s[0] + t.mds[r][1] * s[1] + t.mds[r][2] * s[2];
        }
        s = mixed;
    }
    return s;
}

Fq poseidon_hash2(const Fq& a, const Fq& b) {
    return poseidon_permutation({Fq::zero(), a, b})[0];
}

}  // namespace cweth
