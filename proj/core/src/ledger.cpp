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

#include "cweth/ledger.hpp"

#include "cweth/errors.hpp"

namespace cweth {

namespace {

AccountBalance empty_account() {
    AccountBalance acct;
    acct.pending_commitment = identity_commitment();
    acct.actual_commitment = identity_commitment();
    acct.pending_dh = {Fq::zero(), {}};
    acct.actual_dh = {Fq::zero(), {}};
    return acct;
}

void require_valid_key(const Point& pk) {
    if (!on_curve(pk)) {
        throw Error(errc::off_curve, "public key is not on the curve");
    }
    if (!in_subgroup(pk)) {
        throw Error(errc::not_in_subgroup,
                    "public key is outside the prime-order subgroup");
    }
    if (is_identity(pk)) {
        throw Error(errc::degenerate_key, "public key is the identity");
    }
}

const AccountBalance& account_or_empty(const LedgerState& state, const Fq& x) {
    static const AccountBalance empty = empty_account();
    auto it = state.accounts.find(x.to_u256());
    return it == state.accounts.end() ? empty : it->second;
}

void require_verified(const VerificationReport& report) {
    if (!report.accepted) {
        throw Error(errc::verify_failed, "statement verification failed",
                    report.violations);
    }
}

void rollover_in_place(AccountBalance& acct) {
    acct.actual_commitment =
        aggregate(acct.actual_commitment, acct.pending_commitment);
    acct.pending_commitment = identity_commitment();
    acct.actual_dh.encrypted =
        aggregate_encrypted(acct.actual_dh.encrypted, acct.pending_dh.encrypted);
    acct.actual_dh.entries.insert(acct.actual_dh.entries.end(),
                                  acct.pending_dh.entries.begin(),
                                  acct.pending_dh.entries.end());
    acct.pending_dh = {Fq::zero(), {}};
}

}  // namespace

U256 NonceRng::next() {
    Keccak256 h;
    h.update(seed_);
    std::array<std::uint8_t, 8> be{};
    for (int i = 0; i < 8; ++i) {
        be[i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
    }
    h.update(be);
    ++counter_;
    return U256::from_be_bytes(h.finalize());
}

Fq NonceRng::next_fq() { return Fq::from_u256(next()); }

Fl NonceRng::next_fl() { return Fl::from_u256(next()); }

LedgerState ledger_init(const Digest32& rng_seed) {
    LedgerState state;
    state.rng_seed = rng_seed;
    return state;
}

bool is_registered(const LedgerState& state, const Address& addr) {
    return state.registered_keys.find(addr) != state.registered_keys.end();
}

const Point& registered_key(const LedgerState& state, const Address& addr) {
    auto it = state.registered_keys.find(addr);
    if (it == state.registered_keys.end()) {
        throw Error(errc::unknown_account, "address has no registered key");
    }
    return it->second;
}

LedgerState register_key(const LedgerState& state, const Address& addr,
                         const Point& pk) {
    require_valid_key(pk);
    auto it = state.registered_keys.find(addr);
    if (it != state.registered_keys.end()) {
        if (it->second == pk) return state;
        throw Error(errc::key_mismatch,
                    "address already registered a different key");
    }
    if (state.accounts.find(pk.x.to_u256()) != state.accounts.end()) {
        throw Error(errc::key_mismatch,
                    "key x-coordinate already in use by another account");
    }
    LedgerState next = state;
    next.registered_keys[addr] = pk;
    next.accounts[pk.x.to_u256()] = empty_account();
    return next;
}

LedgerState deposit(const LedgerState& state, const Address& addr,
                    const Point& pk, const DepositStatement& st,
                    const DepositWitness& w) {
    require_valid_key(pk);
    if (!(st.pk == pk)) {
        throw Error(errc::key_mismatch, "statement key differs from deposit key");
    }

    LedgerState next = state;
    auto registered = state.registered_keys.find(addr);
    if (registered == state.registered_keys.end()) {
        next = register_key(state, addr, pk);
    } else if (!(registered->second == pk)) {
        throw Error(errc::key_mismatch,
                    "address already registered a different key");
    }

    AccountBalance& acct = next.accounts.at(pk.x.to_u256());
    if (!(st.balance_commitment == acct.actual_commitment)) {
        throw Error(errc::stale_commitment,
                    "statement balance commitment is not the current one");
    }
    require_verified(verify_deposit(st, w));

    acct.actual_commitment =
        aggregate(acct.actual_commitment, st.amount_commitment);
    acct.actual_dh = {st.new_encrypted_balance, {{pk, st.encryption_nonce}}};
    next.total_wrapped = u256_add(next.total_wrapped, st.amount);
    return next;
}

LedgerState transfer(const LedgerState& state, const Address& receiver_addr,
                     const TransferStatement& st, const TransferWitness& w,
                     bool auto_rollover) {
    auto sender_it = state.accounts.find(st.sender_pk.x.to_u256());
    if (sender_it == state.accounts.end()) {
        throw Error(errc::unknown_account, "sender has no account");
    }
    auto receiver_reg = state.registered_keys.find(receiver_addr);
    if (receiver_reg == state.registered_keys.end()) {
        throw Error(errc::unknown_receiver,
                    "receiver address has no registered key");
    }
    if (!(receiver_reg->second == st.receiver_pk)) {
        throw Error(errc::key_mismatch,
                    "statement receiver key differs from the registered key");
    }
    if (!(st.sender_balance_commitment == sender_it->second.actual_commitment)) {
        throw Error(errc::stale_commitment,
                    "statement balance commitment is not the current one");
    }
    require_verified(verify_transfer(st, w));

    LedgerState next = state;
    AccountBalance& sender = next.accounts.at(st.sender_pk.x.to_u256());
    sender.actual_commitment =
        aggregate(sender.actual_commitment, st.sender_amount_commitment);
    sender.actual_dh = {st.new_sender_encrypted_balance,
                        {{st.sender_pk, st.sender_nonce}}};

    AccountBalance& receiver = next.accounts.at(st.receiver_pk.x.to_u256());
    receiver.pending_commitment =
        aggregate(receiver.pending_commitment, st.receiver_amount_commitment);
    receiver.pending_dh.encrypted = aggregate_encrypted(
        receiver.pending_dh.encrypted, st.receiver_encrypted_amount);
    receiver.pending_dh.entries.push_back({st.sender_pk, st.receiver_nonce});

    if (auto_rollover) {
        rollover_in_place(sender);
    }
    return next;
}

LedgerState withdraw(const LedgerState& state, const WithdrawStatement& st,
                     const WithdrawWitness& w) {
    auto it = state.accounts.find(st.pk.x.to_u256());
    if (it == state.accounts.end()) {
        throw Error(errc::unknown_account, "withdrawing key has no account");
    }
    if (!(st.balance_commitment == it->second.actual_commitment)) {
        throw Error(errc::stale_commitment,
                    "statement balance commitment is not the current one");
    }
    require_verified(verify_withdraw(st, w));
    if (state.total_wrapped < st.amount) {
        throw Error(errc::wrap_underflow,
                    "withdrawal exceeds total wrapped supply");
    }

    LedgerState next = state;
    AccountBalance& acct = next.accounts.at(st.pk.x.to_u256());
    acct.actual_commitment =
        aggregate(acct.actual_commitment, st.amount_commitment);
    acct.actual_dh = {st.new_encrypted_balance, {{st.pk, st.encryption_nonce}}};
    next.total_wrapped = u256_sub(next.total_wrapped, st.amount);
    return next;
}

LedgerState rollover(const LedgerState& state, const Address& addr) {
    const Point& pk = registered_key(state, addr);
    LedgerState next = state;
    rollover_in_place(next.accounts.at(pk.x.to_u256()));
    return next;
}

DepositBundle build_deposit(LedgerState& state, const Keypair& kp,
                            const Amount& amount) {
    require_amount_range(amount);
    const AccountBalance& acct = account_or_empty(state, kp.pk.x);
    Amount prior = decrypt_balance(kp.sk, acct.actual_dh);

    NonceRng rng(state.rng_seed, state.rng_counter);
    Fl commit_nonce = rng.next_fl();
    Fq enc_nonce = rng.next_fq();
    state.rng_counter = rng.counter();

    DepositStatement st;
    st.pk = kp.pk;
    st.amount = amount;
    st.balance_commitment = acct.actual_commitment;
    st.amount_commitment = commit_amount_receiver(amount, commit_nonce, kp.pk);
    st.new_encrypted_balance = encrypt_new_sender_balance(
        u256_add(prior, amount), U256(0), kp.sk, enc_nonce);
    st.encryption_nonce = enc_nonce;
    return {st, {kp.sk, prior, commit_nonce}};
}

TransferBundle build_transfer(LedgerState& state, const Keypair& sender,
                              const Point& receiver_pk, const Amount& amount) {
    require_amount_range(amount);
    auto it = state.accounts.find(sender.pk.x.to_u256());
    if (it == state.accounts.end()) {
        throw Error(errc::unknown_account, "sender has no account");
    }
    Amount balance = decrypt_balance(sender.sk, it->second.actual_dh);
    if (balance < amount) {
        throw Error(errc::insufficient_balance,
                    "decrypted actual balance is below the transfer amount");
    }

    NonceRng rng(state.rng_seed, state.rng_counter);
    Fl sender_commit_nonce = rng.next_fl();
    Fl receiver_commit_nonce = rng.next_fl();
    Fq sender_nonce = rng.next_fq();
    Fq receiver_nonce = rng.next_fq();
    state.rng_counter = rng.counter();

    TransferStatement st;
    st.sender_pk = sender.pk;
    st.receiver_pk = receiver_pk;
    st.sender_balance_commitment = it->second.actual_commitment;
    st.sender_amount_commitment =
        commit_amount_sender(amount, sender_commit_nonce, sender.pk);
    st.receiver_amount_commitment =
        commit_amount_receiver(amount, receiver_commit_nonce, receiver_pk);
    st.new_sender_encrypted_balance =
        encrypt_new_sender_balance(balance, amount, sender.sk, sender_nonce);
    st.sender_nonce = sender_nonce;
    st.receiver_encrypted_amount =
        encrypt_amount(amount, sender.sk, receiver_pk, receiver_nonce);
    st.receiver_nonce = receiver_nonce;
    return {st,
            {sender.sk, balance, amount, sender_commit_nonce,
             receiver_commit_nonce}};
}

WithdrawBundle build_withdraw(LedgerState& state, const Keypair& kp,
                              const Address& eth_receiver,
                              const Amount& amount) {
    require_amount_range(amount);
    auto it = state.accounts.find(kp.pk.x.to_u256());
    if (it == state.accounts.end()) {
        throw Error(errc::unknown_account, "withdrawing key has no account");
    }
    Amount balance = decrypt_balance(kp.sk, it->second.actual_dh);
    if (balance < amount) {
        throw Error(errc::insufficient_balance,
                    "decrypted actual balance is below the withdrawal amount");
    }

    NonceRng rng(state.rng_seed, state.rng_counter);
    Fl commit_nonce = rng.next_fl();
    Fq enc_nonce = rng.next_fq();
    state.rng_counter = rng.counter();

    WithdrawStatement st;
    st.pk = kp.pk;
    st.receiver_address = eth_receiver;
    st.amount = amount;
    st.balance_commitment = it->second.actual_commitment;
    st.amount_commitment = commit_amount_sender(amount, commit_nonce, kp.pk);
    st.new_encrypted_balance =
        encrypt_new_sender_balance(balance, amount, kp.sk, enc_nonce);
    st.encryption_nonce = enc_nonce;
    return {st, {kp.sk, balance, commit_nonce}};
}

std::pair<Amount, Amount> decrypt_account(const Keypair& kp,
                                          const LedgerState& state,
                                          const Address& addr) {
    const Point& pk = registered_key(state, addr);
    if (!(pk == kp.pk)) {
        throw Error(errc::key_mismatch,
                    "keypair does not match the registered key");
    }
    const AccountBalance& acct = state.accounts.at(pk.x.to_u256());
    return {decrypt_balance(kp.sk, acct.pending_dh),
            decrypt_balance(kp.sk, acct.actual_dh)};
}

}  // namespace cweth
