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

#include <cstdint>
#include <map>
#include <utility>

#include "cweth/statements.hpp"

namespace cweth {

// Contract-equivalent state machine. Operations take a state by const
// reference and return the successor state; any rejection throws and
// leaves the input untouched. Statement builders are the "prover" side and
// mutate only the RNG counter inside the state.

/// Deterministic nonce stream; draw i is keccak256(seed || be64(i)).
class NonceRng {
public:
    explicit NonceRng(const Digest32& seed, std::uint64_t counter = 0)
        : seed_(seed), counter_(counter) {}

    Fq next_fq();
    Fl next_fl();

    std::uint64_t counter() const { return counter_; }

private:
    U256 next();

    Digest32 seed_;
    std::uint64_t counter_;
};

/// Both balance representations, each split into a pending (receive) half
/// and an actual (spend) half.
struct AccountBalance {
    Commitment pending_commitment;
    Commitment actual_commitment;
    DhBalance pending_dh;
    DhBalance actual_dh;

    bool operator==(const AccountBalance&) const = default;
};

struct LedgerState {
    /// Balance accounting is keyed by the x-coordinate of the owner key.
    std::map<U256, AccountBalance> accounts;
    /// One key per address, immutable once registered.
    std::map<Address, Point> registered_keys;
    Amount total_wrapped;
    Digest32 rng_seed{};
    std::uint64_t rng_counter = 0;

    bool operator==(const LedgerState&) const = default;
};

LedgerState ledger_init(const Digest32& rng_seed);

bool is_registered(const LedgerState& state, const Address& addr);

/// Registered key for addr; throws errc::unknown_account.
const Point& registered_key(const LedgerState& state, const Address& addr);

/// Registers (addr, pk) and creates the empty account. Rejects a second
/// key for the same address and a key whose x-coordinate is already in
/// use, since the balance map could not tell such accounts apart.
LedgerState register_key(const LedgerState& state, const Address& addr,
                         const Point& pk);

/// Wraps st.amount of ETH into addr's confidential balance. Registers pk
/// on first use. The statement must verify and must open against the
/// account's current actual commitment.
LedgerState deposit(const LedgerState& state, const Address& addr,
                    const Point& pk, const DepositStatement& st,
                    const DepositWitness& w);

/// Moves a hidden amount from the sender (identified by st.sender_pk) to
/// receiver_addr's pending balance. The sender's actual balance is debited
/// and re-encrypted as a single self-key entry. With auto_rollover the
/// sender's own pending balance is folded into actual after the debit.
LedgerState transfer(const LedgerState& state, const Address& receiver_addr,
                     const TransferStatement& st, const TransferWitness& w,
                     bool auto_rollover = false);

/// Unwraps st.amount back to plain ETH for st.receiver_address.
LedgerState withdraw(const LedgerState& state, const WithdrawStatement& st,
                     const WithdrawWitness& w);

/// Folds the pending halves into the actual halves and clears pending.
LedgerState rollover(const LedgerState& state, const Address& addr);

struct DepositBundle {
    DepositStatement statement;
    DepositWitness witness;
};

struct TransferBundle {
    TransferStatement statement;
    TransferWitness witness;
};

struct WithdrawBundle {
    WithdrawStatement statement;
    WithdrawWitness witness;
};

/// Honest prover paths. Each decrypts the caller's current actual balance,
/// draws nonces from the state RNG (advancing its counter), and returns a
/// statement that the matching apply operation accepts against this state.
DepositBundle build_deposit(LedgerState& state, const Keypair& kp,
                            const Amount& amount);

TransferBundle build_transfer(LedgerState& state, const Keypair& sender,
                              const Point& receiver_pk, const Amount& amount);

WithdrawBundle build_withdraw(LedgerState& state, const Keypair& kp,
                              const Address& eth_receiver,
                              const Amount& amount);

/// Decrypted (pending, actual) balances of addr; the keypair must match
/// the registered key.
std::pair<Amount, Amount> decrypt_account(const Keypair& kp,
                                          const LedgerState& state,
                                          const Address& addr);

}  // namespace cweth
