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

#include "cweth/field.hpp"

namespace cweth {

/// Poseidon permutation over Fq with width 3, alpha = 5, 8 full and 57
/// partial rounds. Round constants and MDS matrix come from the Grain-LFSR
/// procedure and are embedded at build time.
std::array<Fq, 3> poseidon_permutation(const std::array<Fq, 3>& state);

/// Two-to-one sponge hash: permute (0, a, b) and return the first lane.
Fq poseidon_hash2(const Fq& a, const Fq& b);

}  // namespace cweth
