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
#include <vector>

#include "cweth/dhenc.hpp"
#include "cweth/kdf.hpp"

namespace cweth {

// Statement/witness pairs for the three operations, verified by direct
// constraint evaluation. The witness stands in for a zk-SNARK proof; a
// SNARK backend could replace these verifiers behind the same signatures.

struct DepositStatement {
    Point pk;
    Amount amount;
    Commitment balance_commitment;
    Commitment amount_commitment;
    Fq new_encrypted_balance;
    Fq encryption_nonce;

    bool operator==(const DepositStatement&) const = default;
};

struct DepositWitness {
    Fl sk;
    Amount prior_balance;
    Fl commitment_nonce;
};

struct TransferStatement {
    Point sender_pk;
    Point receiver_pk;
    Commitment sender_balance_commitment;
    Commitment sender_amount_commitment;
    Commitment receiver_amount_commitment;
    Fq new_sender_encrypted_balance;
    Fq sender_nonce;
    Fq receiver_encrypted_amount;
    Fq receiver_nonce;

    bool operator==(const TransferStatement&) const = default;
};

struct TransferWitness {
    Fl sk_s;
    Amount sender_balance;
    Amount amount;
    Fl sender_commit_nonce;
    Fl receiver_commit_nonce;
};

struct WithdrawStatement {
    Point pk;
    Address receiver_address;
    Amount amount;
    Commitment balance_commitment;
    Commitment amount_commitment;
    Fq new_encrypted_balance;
    Fq encryption_nonce;

    bool operator==(const WithdrawStatement&) const = default;
};

struct WithdrawWitness {
    Fl sk;
    Amount balance;
    Fl commitment_nonce;
};

struct VerificationReport {
    bool accepted = false;
    std::vector<std::string> violations;
};

// Stable constraint codes. Tests and the CLI match on these strings, so
// they must never change meaning.
namespace constraint {

// Structural prechecks; when any of these fire, constraint evaluation is
// skipped because the statement is not well formed.
inline constexpr const char* st_invalid_point = "ST_INVALID_POINT";
inline constexpr const char* st_keys_equal = "ST_KEYS_EQUAL";
inline constexpr const char* st_zero_key = "ST_ZERO_KEY";

inline constexpr const char* k1_key_mismatch = "K1_KEY_MISMATCH";
inline constexpr const char* k2_balance_opening = "K2_BALANCE_OPENING";
inline constexpr const char* k3_amount_commitment = "K3_AMOUNT_COMMITMENT";
inline constexpr const char* k4_balance_encryption = "K4_BALANCE_ENCRYPTION";
inline constexpr const char* k5_amount_range = "K5_AMOUNT_RANGE";

inline constexpr const char* t1_key_mismatch = "T1_KEY_MISMATCH";
inline constexpr const char* t2_overspend = "T2_OVERSPEND";
inline constexpr const char* t3_sender_commitment = "T3_SENDER_COMMITMENT";
inline constexpr const char* t4_receiver_commitment = "T4_RECEIVER_COMMITMENT";
inline constexpr const char* t5_sender_encryption = "T5_SENDER_ENCRYPTION";
inline constexpr const char* t6_receiver_encryption = "T6_RECEIVER_ENCRYPTION";

inline constexpr const char* w1_key_mismatch = "W1_KEY_MISMATCH";
inline constexpr const char* w2_overspend = "W2_OVERSPEND";
inline constexpr const char* w3_amount_commitment = "W3_AMOUNT_COMMITMENT";
inline constexpr const char* w4_balance_encryption = "W4_BALANCE_ENCRYPTION";

}  // namespace constraint

/// Deposit constraints: (K1) key ownership, (K2) prior-balance opening,
/// (K3) amount commitment for the public amount, (K4) post-deposit balance
/// re-encrypted under the self DH key, (K5) amount ranges. All constraints
/// are evaluated; every violation is reported.
VerificationReport verify_deposit(const DepositStatement& st,
                                  const DepositWitness& w);

/// Transfer constraints: (T1) key ownership, (T2) balance opening plus
/// balance >= amount with both in range, (T3)/(T4) sender and receiver
/// amount commitments, (T5) sender's reset balance encryption,
/// (T6) receiver's amount encryption.
VerificationReport verify_transfer(const TransferStatement& st,
                                   const TransferWitness& w);

/// Withdraw constraints: (W1) key ownership, (W2) balance opening plus
/// balance >= amount, (W3) sender-style amount commitment, (W4) new
/// balance encryption. The receiver address is bound by statement
/// membership only; no constraint reads it.
VerificationReport verify_withdraw(const WithdrawStatement& st,
                                   const WithdrawWitness& w);

}  // namespace cweth
