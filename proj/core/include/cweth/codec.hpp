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

#include <nlohmann/json.hpp>

#include "cweth/ledger.hpp"

namespace cweth {

// JSON encoding of every externally visible type. All scalars are hex
// strings; points are [x, y] pairs; commitments are {"C": point,
// "D": point}. Decoding throws Error(errc::parse) on malformed input.

using Json = nlohmann::json;

std::string address_to_hex(const Address& addr);
Address address_from_hex(const std::string& text);

std::string bytes32_to_hex(const Digest32& bytes);
Digest32 bytes32_from_hex(const std::string& text);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json commitment_to_json(const Commitment& c);
Commitment commitment_from_json(const Json& j);

Json dh_balance_to_json(const DhBalance& b);
DhBalance dh_balance_from_json(const Json& j);

Json deposit_statement_to_json(const DepositStatement& st);
DepositStatement deposit_statement_from_json(const Json& j);
Json deposit_witness_to_json(const DepositWitness& w);
DepositWitness deposit_witness_from_json(const Json& j);

Json transfer_statement_to_json(const TransferStatement& st);
TransferStatement transfer_statement_from_json(const Json& j);
Json transfer_witness_to_json(const TransferWitness& w);
TransferWitness transfer_witness_from_json(const Json& j);

Json withdraw_statement_to_json(const WithdrawStatement& st);
WithdrawStatement withdraw_statement_from_json(const Json& j);
Json withdraw_witness_to_json(const WithdrawWitness& w);
WithdrawWitness withdraw_witness_from_json(const Json& j);

Json ledger_state_to_json(const LedgerState& state);
LedgerState ledger_state_from_json(const Json& j);

}  // namespace cweth
