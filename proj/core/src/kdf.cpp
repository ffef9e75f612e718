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

#include "cweth/kdf.hpp"

#include <algorithm>

#include "cweth/errors.hpp"

namespace cweth {

Digest32 kdf_typehash() {
    static const Digest32 value = keccak256("KDF(address cWETHAddress)");
    return value;
}

Digest32 kdf_struct_hash(const Address& cweth_address) {
    Keccak256 h;
    Digest32 typehash = kdf_typehash();
    std::array<std::uint8_t, 12> pad{};
    h.update(typehash);
    h.update(pad);
    h.update(cweth_address);
    return h.finalize();
}

Fl derive_private_key(std::span<const std::uint8_t> signature) {
    Digest32 inner = keccak256(signature);
    Digest32 outer = keccak256(inner);
    Fl sk = Fl::from_u256(U256::from_be_bytes(outer));
    if (sk.is_zero()) {
        throw Error(errc::zero_key, "derived private key is zero");
    }
    return sk;
}

Keypair keypair_from_signature(std::span<const std::uint8_t> signature) {
    Fl sk = derive_private_key(signature);
    return {sk, scalar_mul(sk, generator_g())};
}

std::array<std::uint8_t, 65> TestSigner::sign(const Digest32& digest) const {
    Keccak256 first;
    first.update(seed_);
    first.update(digest);
    Digest32 h1 = first.finalize();
    Digest32 h2 = keccak256(h1);
    Digest32 h3 = keccak256(h2);

    std::array<std::uint8_t, 65> sig{};
    std::copy(h1.begin(), h1.end(), sig.begin());
    std::copy(h2.begin(), h2.end(), sig.begin() + 32);
    sig[64] = h3[0];
    return sig;
}

Keypair derive_keypair(const TestSigner& signer, const Address& cweth_address) {
    auto sig = signer.sign(kdf_struct_hash(cweth_address));
    return keypair_from_signature(sig);
}

}  // namespace cweth
