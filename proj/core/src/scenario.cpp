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

#include "cweth/scenario.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <filesystem>
#include <fstream>

#include "cweth/errors.hpp"

namespace cweth {

namespace {

Digest32 tagged_hash(const Digest32& seed, const char* tag,
                     const std::string& name) {
    Keccak256 h;
    h.update(seed);
    h.update(std::string_view(tag));
    h.update(name);
    return h.finalize();
}

// Exclusive advisory lock via an O_EXCL sidecar file. A crash can leave
// the lock behind; deleting it manually is the documented recovery.
class FileLock {
public:
    explicit FileLock(const std::string& base_path)
        : path_(base_path + ".lock") {
        fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
        if (fd_ < 0) {
            if (errno == EEXIST) {
                throw Error(errc::locked,
                            "state file is locked (" + path_ +
                                " exists); remove it if no other run is active");
            }
            throw Error(errc::io, "cannot create lock file " + path_);
        }
    }

    ~FileLock() {
        if (fd_ >= 0) {
            ::close(fd_);
            ::unlink(path_.c_str());
        }
    }

    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    std::string path_;
    int fd_ = -1;
};

Json report_to_json(const VerificationReport& report) {
    return Json{{"accepted", report.accepted},
                {"violations", report.violations}};
}

Json account_to_json(const AccountBalance& acct) {
    return Json{
        {"pending_commitment", commitment_to_json(acct.pending_commitment)},
        {"actual_commitment", commitment_to_json(acct.actual_commitment)},
        {"pending_dh", dh_balance_to_json(acct.pending_dh)},
        {"actual_dh", dh_balance_to_json(acct.actual_dh)},
    };
}

Json account_delta(const LedgerState& state, const Point& pk) {
    Json delta;
    auto it = state.accounts.find(pk.x.to_u256());
    if (it != state.accounts.end()) {
        delta = account_to_json(it->second);
    }
    delta["total_wrapped"] = state.total_wrapped.to_hex_compact();
    return delta;
}

Json amount_json(const Amount& a) {
    return Json{{"hex", a.to_hex_compact()}, {"wei", amount_to_decimal(a)}};
}

LedgerState ensure_registered(const LedgerState& state,
                              const ActorIdentity& actor, bool* newly) {
    if (is_registered(state, actor.address)) {
        const Point& existing = registered_key(state, actor.address);
        if (!(existing == actor.keypair.pk)) {
            throw Error(errc::key_mismatch,
                        "actor '" + actor.name +
                            "' is registered with a different key");
        }
        if (newly) *newly = false;
        return state;
    }
    if (newly) *newly = true;
    return register_key(state, actor.address, actor.keypair.pk);
}

Json do_keygen(LedgerState& state, const std::string& name) {
    ActorIdentity actor = derive_actor(state.rng_seed, name);
    bool newly = false;
    state = ensure_registered(state, actor, &newly);
    return Json{
        {"ok", true},
        {"op", "keygen"},
        {"actor", name},
        {"address", address_to_hex(actor.address)},
        {"publicKey", point_to_json(actor.keypair.pk)},
        {"privateKey", actor.keypair.sk.to_hex()},
        {"registered", newly},
    };
}

Json do_deposit(LedgerState& state, const std::string& name,
                const Amount& amount) {
    ActorIdentity actor = derive_actor(state.rng_seed, name);
    DepositBundle bundle = build_deposit(state, actor.keypair, amount);
    VerificationReport report =
        verify_deposit(bundle.statement, bundle.witness);
    state = deposit(state, actor.address, actor.keypair.pk, bundle.statement,
                    bundle.witness);
    return Json{
        {"ok", true},
        {"op", "deposit"},
        {"actor", name},
        {"address", address_to_hex(actor.address)},
        {"amount", amount_json(amount)},
        {"statement", deposit_statement_to_json(bundle.statement)},
        {"report", report_to_json(report)},
        {"delta", account_delta(state, actor.keypair.pk)},
    };
}

Json do_transfer(LedgerState& state, const std::string& from,
                 const std::string& to, const Amount& amount,
                 bool auto_rollover) {
    ActorIdentity sender = derive_actor(state.rng_seed, from);
    ActorIdentity receiver = derive_actor(state.rng_seed, to);
    state = ensure_registered(state, receiver, nullptr);
    TransferBundle bundle =
        build_transfer(state, sender.keypair, receiver.keypair.pk, amount);
    VerificationReport report =
        verify_transfer(bundle.statement, bundle.witness);
    state = transfer(state, receiver.address, bundle.statement, bundle.witness,
                     auto_rollover);
    Json delta{
        {"sender", account_delta(state, sender.keypair.pk)},
        {"receiver", account_delta(state, receiver.keypair.pk)},
    };
    return Json{
        {"ok", true},
        {"op", "transfer"},
        {"from", from},
        {"to", to},
        {"amount", amount_json(amount)},
        {"auto_rollover", auto_rollover},
        {"statement", transfer_statement_to_json(bundle.statement)},
        {"report", report_to_json(report)},
        {"delta", std::move(delta)},
    };
}

Json do_withdraw(LedgerState& state, const std::string& name,
                 const Amount& amount) {
    ActorIdentity actor = derive_actor(state.rng_seed, name);
    WithdrawBundle bundle =
        build_withdraw(state, actor.keypair, actor.address, amount);
    VerificationReport report =
        verify_withdraw(bundle.statement, bundle.witness);
    state = withdraw(state, bundle.statement, bundle.witness);
    return Json{
        {"ok", true},
        {"op", "withdraw"},
        {"actor", name},
        {"receiver_address", address_to_hex(actor.address)},
        {"amount", amount_json(amount)},
        {"statement", withdraw_statement_to_json(bundle.statement)},
        {"report", report_to_json(report)},
        {"delta", account_delta(state, actor.keypair.pk)},
    };
}

Json do_rollover(LedgerState& state, const std::string& name) {
    ActorIdentity actor = derive_actor(state.rng_seed, name);
    state = rollover(state, actor.address);
    return Json{
        {"ok", true},
        {"op", "rollover"},
        {"actor", name},
        {"delta", account_delta(state, actor.keypair.pk)},
    };
}

Json do_decrypt(const LedgerState& state, const std::string& name) {
    ActorIdentity actor = derive_actor(state.rng_seed, name);
    auto [pending, actual] = decrypt_account(actor.keypair, state, actor.address);
    return Json{
        {"ok", true},
        {"op", "decrypt"},
        {"actor", name},
        {"pending", amount_json(pending)},
        {"actual", amount_json(actual)},
    };
}

std::string json_string(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) {
        throw Error(errc::bad_script,
                    std::string("script step needs string field '") + key + "'");
    }
    return j.at(key).get<std::string>();
}

Amount script_amount(const Json& j, const char* key) {
    if (!j.contains(key)) {
        throw Error(errc::bad_script,
                    std::string("script step needs amount field '") + key + "'");
    }
    const Json& v = j.at(key);
    if (v.is_number_unsigned()) return Amount(v.get<std::uint64_t>());
    if (v.is_string()) return parse_amount(v.get<std::string>());
    throw Error(errc::bad_script,
                std::string("amount field '") + key +
                    "' must be a string or unsigned number");
}

}  // namespace

Address derive_contract_address(const Digest32& session_seed) {
    Digest32 digest = tagged_hash(session_seed, "cweth.contract.address", "");
    Address addr{};
    std::copy(digest.begin() + 12, digest.end(), addr.begin());
    return addr;
}

ActorIdentity derive_actor(const Digest32& session_seed,
                           const std::string& name) {
    if (name.empty()) {
        throw Error(errc::usage, "actor name must not be empty");
    }
    ActorIdentity actor;
    actor.name = name;
    Digest32 addr_digest = tagged_hash(session_seed, "cweth.actor.address", name);
    std::copy(addr_digest.begin() + 12, addr_digest.end(),
              actor.address.begin());
    actor.signer_seed = tagged_hash(session_seed, "cweth.actor.signer", name);
    TestSigner signer(actor.signer_seed);
    actor.keypair = derive_keypair(signer, derive_contract_address(session_seed));
    return actor;
}

Amount parse_amount(const std::string& text) {
    if (text.empty()) throw Error(errc::usage, "empty amount");
    std::optional<U256> value;
    if (text.size() > 2 && (text[1] == 'x' || text[1] == 'X')) {
        value = U256::from_hex(text);
    } else {
        U256 acc;
        const U256 ten(10);
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw Error(errc::usage, "invalid amount '" + text + "'");
            }
            auto wide = u256_mul_wide(acc, ten);
            if (wide[4] | wide[5] | wide[6] | wide[7]) {
                throw Error(errc::usage, "amount overflow in '" + text + "'");
            }
            std::uint64_t carry = 0;
            acc = u256_add(U256(wide[0], wide[1], wide[2], wide[3]),
                           U256(static_cast<std::uint64_t>(c - '0')), carry);
            if (carry) throw Error(errc::usage, "amount overflow");
        }
        value = acc;
    }
    if (!value) throw Error(errc::usage, "invalid amount '" + text + "'");
    if (!amount_in_range(*value)) {
        throw Error(errc::amount_range,
                    "amount '" + text + "' exceeds 2^96 - 1 wei");
    }
    return *value;
}

std::string amount_to_decimal(const Amount& a) {
    // Amounts stay below 2^96, so 128-bit arithmetic suffices.
    unsigned __int128 v = (static_cast<unsigned __int128>(a.limbs[1]) << 64) |
                          a.limbs[0];
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out.insert(out.begin(), static_cast<char>('0' + v % 10));
        v /= 10;
    }
    return out;
}

Digest32 default_seed() {
    return keccak256(kDefaultSeedTag);
}

Session::Session(std::string state_path) : state_path_(std::move(state_path)) {}

LedgerState Session::load() const {
    std::ifstream in(state_path_);
    if (!in) {
        throw Error(errc::io,
                    "cannot open state file '" + state_path_ +
                        "'; run 'init' first");
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(errc::parse,
                    "state file is not valid JSON: " + std::string(e.what()));
    }
    return ledger_state_from_json(j);
}

void Session::save(const LedgerState& state) const {
    std::string tmp = state_path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error(errc::io, "cannot write " + tmp);
        out << ledger_state_to_json(state).dump(2) << "\n";
        out.flush();
        if (!out) throw Error(errc::io, "short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, state_path_, ec);
    if (ec) {
        throw Error(errc::io, "cannot replace state file: " + ec.message());
    }
}

Json Session::init(const Digest32& seed) {
    FileLock lock(state_path_);
    LedgerState state = ledger_init(seed);
    save(state);
    return Json{
        {"ok", true},
        {"op", "init"},
        {"state", state_path_},
        {"seed", bytes32_to_hex(seed)},
        {"total_wrapped", state.total_wrapped.to_hex_compact()},
    };
}

Json Session::keygen(const std::string& actor) {
    FileLock lock(state_path_);
    LedgerState state = load();
    Json out = do_keygen(state, actor);
    save(state);
    return out;
}

Json Session::deposit(const std::string& actor, const Amount& amount) {
    FileLock lock(state_path_);
    LedgerState state = load();
    Json out = do_deposit(state, actor, amount);
    save(state);
    return out;
}

Json Session::transfer(const std::string& from, const std::string& to,
                       const Amount& amount, bool auto_rollover) {
    FileLock lock(state_path_);
    LedgerState state = load();
    Json out = do_transfer(state, from, to, amount, auto_rollover);
    save(state);
    return out;
}

Json Session::withdraw(const std::string& actor, const Amount& amount) {
    FileLock lock(state_path_);
    LedgerState state = load();
    Json out = do_withdraw(state, actor, amount);
    save(state);
    return out;
}

Json Session::rollover(const std::string& actor) {
    FileLock lock(state_path_);
    LedgerState state = load();
    Json out = do_rollover(state, actor);
    save(state);
    return out;
}

Json Session::decrypt(const std::string& actor) const {
    LedgerState state = load();
    return do_decrypt(state, actor);
}

Json Session::run(const Json& script, const Digest32* seed_override) {
    if (!script.is_object()) {
        throw Error(errc::bad_script, "script must be a JSON object");
    }
    Digest32 seed;
    if (script.contains("seed")) {
        seed = bytes32_from_hex(json_string(script, "seed"));
    } else if (seed_override) {
        seed = *seed_override;
    } else {
        seed = default_seed();
    }

    const Json empty_steps = Json::array();
    const Json& steps =
        script.contains("steps") ? script.at("steps") : empty_steps;
    if (!steps.is_array()) {
        throw Error(errc::bad_script, "'steps' must be an array");
    }

    FileLock lock(state_path_);
    LedgerState state = ledger_init(seed);
    Json step_outputs = Json::array();
    Json assertions = Json::array();
    int failed_assertions = 0;

    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Json& step = steps.at(i);
        std::string op = json_string(step, "op");
        try {
            if (op == "keygen") {
                step_outputs.push_back(do_keygen(state, json_string(step, "actor")));
            } else if (op == "deposit") {
                step_outputs.push_back(do_deposit(
                    state, json_string(step, "actor"), script_amount(step, "amount")));
            } else if (op == "transfer") {
                bool auto_rollover = step.value("auto_rollover", false);
                step_outputs.push_back(
                    do_transfer(state, json_string(step, "from"),
                                json_string(step, "to"),
                                script_amount(step, "amount"), auto_rollover));
            } else if (op == "withdraw") {
                step_outputs.push_back(do_withdraw(
                    state, json_string(step, "actor"), script_amount(step, "amount")));
            } else if (op == "rollover") {
                step_outputs.push_back(do_rollover(state, json_string(step, "actor")));
            } else if (op == "decrypt") {
                step_outputs.push_back(do_decrypt(state, json_string(step, "actor")));
            } else if (op == "assert-balance") {
                std::string actor = json_string(step, "actor");
                ActorIdentity id = derive_actor(state.rng_seed, actor);
                auto [pending, actual] =
                    decrypt_account(id.keypair, state, id.address);
                Json entry{{"step", i}, {"actor", actor}};
                bool passed = true;
                if (step.contains("pending")) {
                    Amount expected = script_amount(step, "pending");
                    entry["expected_pending"] = expected.to_hex_compact();
                    entry["pending"] = pending.to_hex_compact();
                    passed = passed && expected == pending;
                }
                if (step.contains("actual")) {
                    Amount expected = script_amount(step, "actual");
                    entry["expected_actual"] = expected.to_hex_compact();
                    entry["actual"] = actual.to_hex_compact();
                    passed = passed && expected == actual;
                }
                entry["passed"] = passed;
                if (!passed) ++failed_assertions;
                assertions.push_back(std::move(entry));
            } else {
                throw Error(errc::bad_script, "unknown script op '" + op + "'");
            }
        } catch (const Error& e) {
            throw Error(e.code(),
                        "script step " + std::to_string(i) + " (" + op +
                            "): " + e.what(),
                        e.violations());
        }
    }

    save(state);
    return Json{
        {"ok", failed_assertions == 0},
        {"op", "run"},
        {"seed", bytes32_to_hex(seed)},
        {"state", state_path_},
        {"steps", std::move(step_outputs)},
        {"assertions", std::move(assertions)},
        {"failed_assertions", failed_assertions},
    };
}

}  // namespace cweth
