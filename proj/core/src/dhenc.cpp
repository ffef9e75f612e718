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

#include "cweth/dhenc.hpp"

#include "cweth/errors.hpp"
#include "cweth/poseidon.hpp"

namespace cweth {

Fq shared_key(const Fl& sk, const Point& pk_other) {
    if (sk.is_zero()) {
        throw Error(errc::degenerate_key, "zero private key");
    }
    if (is_identity(pk_other)) {
        throw Error(errc::degenerate_key, "identity public key");
    }
    return scalar_mul(sk, pk_other).x;
}

Fq mask(const Fq& k_x, const Fq& n) {
    return k_x + poseidon_hash2(k_x, n);
}

Fq encrypt_amount(const Amount& a, const Fl& sk_s, const Point& pk_r, const Fq& n) {
    require_amount_range(a);
    return Fq::from_u256(a) + mask(shared_key(sk_s, pk_r), n);
}

Fq aggregate_encrypted(const Fq& acc, const Fq& a_enc) {
    return acc + a_enc;
}

Amount decrypt_balance(const Fl& sk, const DhBalance& bal) {
    Fq residue = bal.encrypted;
    for (const DhEntry& entry : bal.entries) {
        residue -= mask(shared_key(sk, entry.sender_pk), entry.nonce);
    }
    Amount value = residue.to_u256();
    if (!amount_in_range(value)) {
        throw Error(errc::corrupt_balance,
                    "decrypted residue is not a valid amount");
    }
    return value;
}

Fq encrypt_new_sender_balance(const Amount& b_s, const Amount& a, const Fl& sk,
                              const Fq& n) {
    require_amount_range(b_s);
    require_amount_range(a);
    if (b_s < a) {
        throw Error(errc::overspend, "spend amount exceeds balance");
    }
    Point own_pk = scalar_mul(sk, generator_g());
    Fq remaining = Fq::from_u256(u256_sub(b_s, a));
    return remaining + mask(shared_key(sk, own_pk), n);
}

}  // namespace cweth
