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

#include <string>

#include "cweth/codec.hpp"

namespace cweth {

// Scenario engine behind the CLI. Actors are referred to by name; their
// signer seeds and Ethereum addresses derive deterministically from the
// session seed, so the same seed and commands reproduce the same ledger
// byte for byte.

struct ActorIdentity {
    std::string name;
    Address address;
    Digest32 signer_seed;
    Keypair keypair;
};

/// Names the deterministic session-wide contract address that key
/// derivation binds to.
Address derive_contract_address(const Digest32& session_seed);

ActorIdentity derive_actor(const Digest32& session_seed,
                           const std::string& name);

/// Accepts decimal ("100") or hex ("0x64") wei amounts below 2^96.
Amount parse_amount(const std::string& text);

std::string amount_to_decimal(const Amount& a);

inline constexpr const char* kDefaultSeedTag = "cweth default session seed";

/// Seed used when the caller passes none: keccak256 of kDefaultSeedTag.
Digest32 default_seed();

/// One CLI invocation's view of a state file. Mutating commands take an
/// exclusive lock (state file plus ".lock"), load, apply, and write back
/// atomically via a temp file and rename.
class Session {
public:
    explicit Session(std::string state_path);

    /// Creates a fresh state file with the given RNG seed; overwrites any
    /// existing file.
    Json init(const Digest32& seed);

    /// Derives the actor's keypair and registers it; idempotent for an
    /// actor that is already registered with the same key.
    Json keygen(const std::string& actor);

    Json deposit(const std::string& actor, const Amount& amount);

    /// Registers the receiver's derived key on the fly when needed, so a
    /// transfer to a fresh name works in one step.
    Json transfer(const std::string& from, const std::string& to,
                  const Amount& amount, bool auto_rollover);

    Json withdraw(const std::string& actor, const Amount& amount);

    Json rollover(const std::string& actor);

    Json decrypt(const std::string& actor) const;

    /// Runs a scenario script against a fresh state (seeded from the
    /// script, or seed_override, or the default), saves the final state to
    /// this session's path, and reports every step and assertion.
    Json run(const Json& script, const Digest32* seed_override = nullptr);

private:
    LedgerState load() const;
    void save(const LedgerState& state) const;

    std::string state_path_;
};

}  // namespace cweth
