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
#include <span>

#include "cweth/curve.hpp"
#include "cweth/keccak.hpp"

namespace cweth {

using Address = std::array<std::uint8_t, 20>;

/// keccak256("KDF(address cWETHAddress)").
Digest32 kdf_typehash();

/// EIP-712 style struct hash binding the derived key to one contract
/// address: keccak256(typehash || uint256-padded address).
Digest32 kdf_struct_hash(const Address& cweth_address);

/// Private key from a wallet signature over the struct hash:
/// keccak256(keccak256(signature)) reduced modulo the subgroup order.
/// Throws errc::zero_key for the (negligible) zero outcome.
Fl derive_private_key(std::span<const std::uint8_t> signature);

struct Keypair {
    Fl sk;
    Point pk;  // sk * G
};

Keypair keypair_from_signature(std::span<const std::uint8_t> signature);

/// Deterministic stand-in for a wallet: expands a 32-byte seed and the
/// signed digest into a 65-byte signature-shaped blob. Not a real ECDSA
/// signer; it only has to be stable so key derivation is reproducible.
class TestSigner {
public:
    explicit TestSigner(const Digest32& seed) : seed_(seed) {}

    std::array<std::uint8_t, 65> sign(const Digest32& digest) const;

    const Digest32& seed() const { return seed_; }

private:
    Digest32 seed_;
};

/// Full derivation path: sign the struct hash for cweth_address, then
/// derive the keypair from the signature.
Keypair derive_keypair(const TestSigner& signer, const Address& cweth_address);

}  // namespace cweth
