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

#include "cweth/codec.hpp"

#include "cweth/errors.hpp"

namespace cweth {

namespace {

constexpr int kStateVersion = 1;

[[noreturn]] void fail(const std::string& what) {
    throw Error(errc::parse, what);
}

int nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

template <std::size_t N>
std::string fixed_bytes_to_hex(const std::array<std::uint8_t, N>& bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s = "0x";
    s.reserve(2 + 2 * N);
    for (std::uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xF]);
    }
    return s;
}

template <std::size_t N>
std::array<std::uint8_t, N> fixed_bytes_from_hex(const std::string& text) {
    std::string_view sv = text;
    if (sv.substr(0, 2) == "0x" || sv.substr(0, 2) == "0X") sv.remove_prefix(2);
    if (sv.size() != 2 * N) fail("expected " + std::to_string(2 * N) +
                                 " hex digits, got '" + text + "'");
    std::array<std::uint8_t, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        int hi = nibble(sv[2 * i]);
        int lo = nibble(sv[2 * i + 1]);
        if (hi < 0 || lo < 0) fail("invalid hex digit in '" + text + "'");
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        fail(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::string string_member(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

U256 u256_from_json(const Json& j, const char* what) {
    if (!j.is_string()) fail(std::string(what) + " must be a hex string");
    auto v = U256::from_hex(j.get<std::string>());
    if (!v) fail(std::string("invalid hex in ") + what);
    return *v;
}

U256 u256_member(const Json& j, const char* key) {
    return u256_from_json(member(j, key), key);
}

Fq fq_member(const Json& j, const char* key) {
    U256 v = u256_member(j, key);
    if (v >= FqTag::kModulus) fail(std::string("field '") + key +
                                   "' is not a canonical field element");
    return Fq::from_u256(v);
}

Fl fl_member(const Json& j, const char* key) {
    U256 v = u256_member(j, key);
    if (v >= FlTag::kModulus) fail(std::string("field '") + key +
                                   "' is not a canonical scalar");
    return Fl::from_u256(v);
}

Amount amount_member(const Json& j, const char* key) {
    return u256_member(j, key);
}

}  // namespace

std::string address_to_hex(const Address& addr) {
    return fixed_bytes_to_hex(addr);
}

Address address_from_hex(const std::string& text) {
    return fixed_bytes_from_hex<20>(text);
}

std::string bytes32_to_hex(const Digest32& bytes) {
    return fixed_bytes_to_hex(bytes);
}

Digest32 bytes32_from_hex(const std::string& text) {
    return fixed_bytes_from_hex<32>(text);
}

Json point_to_json(const Point& p) {
    return Json::array({p.x.to_hex(), p.y.to_hex()});
}

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) fail("point must be an [x, y] array");
    U256 x = u256_from_json(j.at(0), "point x");
    U256 y = u256_from_json(j.at(1), "point y");
    if (x >= FqTag::kModulus || y >= FqTag::kModulus) {
        fail("point coordinate exceeds the field modulus");
    }
    return {Fq::from_u256(x), Fq::from_u256(y)};
}

Json commitment_to_json(const Commitment& c) {
    return Json{{"C", point_to_json(c.C)}, {"D", point_to_json(c.D)}};
}

Commitment commitment_from_json(const Json& j) {
    return {point_from_json(member(j, "C")), point_from_json(member(j, "D"))};
}

Json dh_balance_to_json(const DhBalance& b) {
    Json entries = Json::array();
    for (const DhEntry& e : b.entries) {
        entries.push_back(Json{{"senderPublicKey", point_to_json(e.sender_pk)},
                               {"nonce", e.nonce.to_hex()}});
    }
    return Json{{"encryptedBalance", b.encrypted.to_hex()},
                {"entries", std::move(entries)}};
}

DhBalance dh_balance_from_json(const Json& j) {
    DhBalance b;
    b.encrypted = fq_member(j, "encryptedBalance");
    const Json& entries = member(j, "entries");
    if (!entries.is_array()) fail("'entries' must be an array");
    for (const Json& e : entries) {
        b.entries.push_back({point_from_json(member(e, "senderPublicKey")),
                             fq_member(e, "nonce")});
    }
    return b;
}

Json deposit_statement_to_json(const DepositStatement& st) {
    return Json{
        {"pk", point_to_json(st.pk)},
        {"amount", st.amount.to_hex_compact()},
        {"balance_commitment", commitment_to_json(st.balance_commitment)},
        {"amount_commitment", commitment_to_json(st.amount_commitment)},
        {"new_encrypted_balance", st.new_encrypted_balance.to_hex()},
        {"encryption_nonce", st.encryption_nonce.to_hex()},
    };
}

DepositStatement deposit_statement_from_json(const Json& j) {
    DepositStatement st;
    st.pk = point_from_json(member(j, "pk"));
    st.amount = amount_member(j, "amount");
    st.balance_commitment = commitment_from_json(member(j, "balance_commitment"));
    st.amount_commitment = commitment_from_json(member(j, "amount_commitment"));
    st.new_encrypted_balance = fq_member(j, "new_encrypted_balance");
    st.encryption_nonce = fq_member(j, "encryption_nonce");
    return st;
}

Json deposit_witness_to_json(const DepositWitness& w) {
    return Json{
        {"sk", w.sk.to_hex()},
        {"prior_balance", w.prior_balance.to_hex_compact()},
        {"commitment_nonce", w.commitment_nonce.to_hex()},
    };
}

DepositWitness deposit_witness_from_json(const Json& j) {
    return {fl_member(j, "sk"), amount_member(j, "prior_balance"),
            fl_member(j, "commitment_nonce")};
}

Json transfer_statement_to_json(const TransferStatement& st) {
    return Json{
        {"sender_pk", point_to_json(st.sender_pk)},
        {"receiver_pk", point_to_json(st.receiver_pk)},
        {"sender_balance_commitment",
         commitment_to_json(st.sender_balance_commitment)},
        {"sender_amount_commitment",
         commitment_to_json(st.sender_amount_commitment)},
        {"receiver_amount_commitment",
         commitment_to_json(st.receiver_amount_commitment)},
        {"new_sender_encrypted_balance", st.new_sender_encrypted_balance.to_hex()},
        {"sender_nonce", st.sender_nonce.to_hex()},
        {"receiver_encrypted_amount", st.receiver_encrypted_amount.to_hex()},
        {"receiver_nonce", st.receiver_nonce.to_hex()},
    };
}

TransferStatement transfer_statement_from_json(const Json& j) {
    TransferStatement st;
    st.sender_pk = point_from_json(member(j, "sender_pk"));
    st.receiver_pk = point_from_json(member(j, "receiver_pk"));
    st.sender_balance_commitment =
        commitment_from_json(member(j, "sender_balance_commitment"));
    st.sender_amount_commitment =
        commitment_from_json(member(j, "sender_amount_commitment"));
    st.receiver_amount_commitment =
        commitment_from_json(member(j, "receiver_amount_commitment"));
    st.new_sender_encrypted_balance =
        fq_member(j, "new_sender_encrypted_balance");
    st.sender_nonce = fq_member(j, "sender_nonce");
    st.receiver_encrypted_amount = fq_member(j, "receiver_encrypted_amount");
    st.receiver_nonce = fq_member(j, "receiver_nonce");
    return st;
}

Json transfer_witness_to_json(const TransferWitness& w) {
    return Json{
        {"sk_s", w.sk_s.to_hex()},
        {"sender_balance", w.sender_balance.to_hex_compact()},
        {"amount", w.amount.to_hex_compact()},
        {"sender_commit_nonce", w.sender_commit_nonce.to_hex()},
        {"receiver_commit_nonce", w.receiver_commit_nonce.to_hex()},
    };
}

TransferWitness transfer_witness_from_json(const Json& j) {
    return {fl_member(j, "sk_s"), amount_member(j, "sender_balance"),
            amount_member(j, "amount"), fl_member(j, "sender_commit_nonce"),
            fl_member(j, "receiver_commit_nonce")};
}

Json withdraw_statement_to_json(const WithdrawStatement& st) {
    return Json{
        {"pk", point_to_json(st.pk)},
        {"receiver_address", address_to_hex(st.receiver_address)},
        {"amount", st.amount.to_hex_compact()},
        {"balance_commitment", commitment_to_json(st.balance_commitment)},
        {"amount_commitment", commitment_to_json(st.amount_commitment)},
        {"new_encrypted_balance", st.new_encrypted_balance.to_hex()},
        {"encryption_nonce", st.encryption_nonce.to_hex()},
    };
}

WithdrawStatement withdraw_statement_from_json(const Json& j) {
    WithdrawStatement st;
    st.pk = point_from_json(member(j, "pk"));
    st.receiver_address = address_from_hex(string_member(j, "receiver_address"));
    st.amount = amount_member(j, "amount");
    st.balance_commitment = commitment_from_json(member(j, "balance_commitment"));
    st.amount_commitment = commitment_from_json(member(j, "amount_commitment"));
    st.new_encrypted_balance = fq_member(j, "new_encrypted_balance");
    st.encryption_nonce = fq_member(j, "encryption_nonce");
    return st;
}

Json withdraw_witness_to_json(const WithdrawWitness& w) {
    return Json{
        {"sk", w.sk.to_hex()},
        {"balance", w.balance.to_hex_compact()},
        {"commitment_nonce", w.commitment_nonce.to_hex()},
    };
}

WithdrawWitness withdraw_witness_from_json(const Json& j) {
    return {fl_member(j, "sk"), amount_member(j, "balance"),
            fl_member(j, "commitment_nonce")};
}

Json ledger_state_to_json(const LedgerState& state) {
    Json accounts = Json::object();
    for (const auto& [x, acct] : state.accounts) {
        accounts[x.to_hex()] = Json{
            {"pending_commitment", commitment_to_json(acct.pending_commitment)},
            {"actual_commitment", commitment_to_json(acct.actual_commitment)},
            {"pending_dh", dh_balance_to_json(acct.pending_dh)},
            {"actual_dh", dh_balance_to_json(acct.actual_dh)},
        };
    }
    Json keys = Json::object();
    for (const auto& [addr, pk] : state.registered_keys) {
        keys[address_to_hex(addr)] = point_to_json(pk);
    }
    return Json{
        {"version", kStateVersion},
        {"accounts", std::move(accounts)},
        {"registered_keys", std::move(keys)},
        {"total_wrapped", state.total_wrapped.to_hex_compact()},
        {"rng_seed", bytes32_to_hex(state.rng_seed)},
        {"rng_counter", state.rng_counter},
    };
}

LedgerState ledger_state_from_json(const Json& j) {
    const Json& version = member(j, "version");
    if (!version.is_number_integer() || version.get<int>() != kStateVersion) {
        fail("unsupported state version");
    }
    LedgerState state;
    const Json& accounts = member(j, "accounts");
    if (!accounts.is_object()) fail("'accounts' must be an object");
    for (const auto& [key, value] : accounts.items()) {
        auto x = U256::from_hex(key);
        if (!x) fail("invalid account key '" + key + "'");
        AccountBalance acct;
        acct.pending_commitment =
            commitment_from_json(member(value, "pending_commitment"));
        acct.actual_commitment =
            commitment_from_json(member(value, "actual_commitment"));
        acct.pending_dh = dh_balance_from_json(member(value, "pending_dh"));
        acct.actual_dh = dh_balance_from_json(member(value, "actual_dh"));
        state.accounts[*x] = std::move(acct);
    }
    const Json& keys = member(j, "registered_keys");
    if (!keys.is_object()) fail("'registered_keys' must be an object");
    for (const auto& [addr, pk] : keys.items()) {
        state.registered_keys[address_from_hex(addr)] = point_from_json(pk);
    }
    state.total_wrapped = u256_member(j, "total_wrapped");
    state.rng_seed = bytes32_from_hex(string_member(j, "rng_seed"));
    const Json& counter = member(j, "rng_counter");
    if (!counter.is_number_unsigned()) fail("'rng_counter' must be unsigned");
    state.rng_counter = counter.get<std::uint64_t>();
    return state;
}

}  // namespace cweth
