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

#include <vector>

#include "cweth/elgamal.hpp"

namespace cweth {

// Additive encryption under Diffie-Hellman shared keys. This layer exists
// so owners can read their balance without solving a discrete logarithm:
// each incoming amount is masked with a key only the two parties can
// derive, sums aggregate additively, and the owner strips all masks with
// the stored (sender key, nonce) pairs.

/// One decryption entry: who sent funds and with which encryption nonce.
struct DhEntry {
    Point sender_pk;
    Fq nonce;

    bool operator==(const DhEntry&) const = default;
};

/// Encrypted balance plus everything needed to decrypt it.
struct DhBalance {
    Fq encrypted;
    std::vector<DhEntry> entries;

    bool operator==(const DhBalance&) const = default;
};

/// x-coordinate of sk * pk_other. Symmetric in the two key pairs.
/// Throws errc::degenerate_key for a zero sk or identity pk_other.
Fq shared_key(const Fl& sk, const Point& pk_other);

/// The additive pad k_x + poseidon(k_x, n).
Fq mask(const Fq& k_x, const Fq& n);

/// a + mask(shared_key(sk_s, pk_r), n). The receiver strips the mask with
/// their own key: shared_key(sk_r, pk_s) yields the same k_x.
Fq encrypt_amount(const Amount& a, const Fl& sk_s, const Point& pk_r, const Fq& n);

/// Field addition; encrypted amounts aggregate additively.
Fq aggregate_encrypted(const Fq& acc, const Fq& a_enc);

/// Strips one mask per entry and interprets the residue as an integer.
/// Throws errc::corrupt_balance when the residue is not a valid amount,
/// which signals inconsistent state or the wrong key.
Amount decrypt_balance(const Fl& sk, const DhBalance& bal);

/// Sender-reset encryption: (b_s - a) masked under the owner's self key
/// sk * (sk * G). The companion DhBalance holds the single entry
/// {own pk, n}, collapsing the decryption list. Throws errc::overspend
/// when a > b_s.
Fq encrypt_new_sender_balance(const Amount& b_s, const Amount& a, const Fl& sk,
                              const Fq& n);

}  // namespace cweth
