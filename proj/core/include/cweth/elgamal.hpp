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

#include "cweth/curve.hpp"

namespace cweth {

/// Token amount in wei. Values are capped at 2^96, which covers the total
/// ETH supply with headroom while keeping any feasible aggregate far below
/// both field moduli.
using Amount = U256;

/// 2^96, the exclusive upper bound on amounts.
inline constexpr U256 kAmountBound{0, std::uint64_t{1} << 32, 0, 0};

inline bool amount_in_range(const Amount& a) { return a < kAmountBound; }

/// Throws errc::amount_range unless a < 2^96.
void require_amount_range(const Amount& a);

/// Twisted ElGamal commitment: C binds the committed value, D is the
/// key-bound handle that lets the key owner open C without tracking the
/// aggregate nonce.
struct Commitment {
    Point C;
    Point D;

    bool operator==(const Commitment&) const = default;
};

/// Commitment to balance zero with nonce zero; the aggregation identity.
Commitment identity_commitment();

/// C = b*H + r*G, D = r*pk. pk must be a subgroup point.
Commitment commit_balance(const Amount& b, const Fl& r, const Point& pk);

/// Receiver-side amount commitment: C = a*H + r*G, D = r*pk_r. Same
/// algebra as commit_balance; kept distinct so call sites read correctly.
Commitment commit_amount_receiver(const Amount& a, const Fl& r, const Point& pk_r);

/// Sender-side amount commitment: C = r*G - a*H, D = r*pk_s. Aggregating
/// it onto a balance commitment subtracts a from the opening.
Commitment commit_amount_sender(const Amount& a, const Fl& r, const Point& pk_s);

/// Component-wise point addition of both halves.
Commitment aggregate(const Commitment& c1, const Commitment& c2);

/// True iff c.C = b*H + sk^-1 * c.D, the decryption-free opening check
/// used by every circuit. sk must be nonzero.
bool verify_opening(const Commitment& c, const Amount& b, const Fl& sk);

}  // namespace cweth
