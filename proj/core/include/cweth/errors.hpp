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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cweth {

/// Error with a stable machine-readable code. The CLI maps codes to exit
/// status and emits them in error JSON, so codes are part of the interface.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    Error(std::string code, const std::string& message,
          std::vector<std::string> violations)
        : std::runtime_error(message),
          code_(std::move(code)),
          violations_(std::move(violations)) {}

    const std::string& code() const noexcept { return code_; }

    /// Constraint codes attached to verification failures; empty otherwise.
    const std::vector<std::string>& violations() const noexcept {
        return violations_;
    }

private:
    std::string code_;
    std::vector<std::string> violations_;
};

namespace errc {

inline constexpr const char* off_curve = "E_OFF_CURVE";
inline constexpr const char* not_in_subgroup = "E_NOT_IN_SUBGROUP";
inline constexpr const char* degenerate_key = "E_DEGENERATE_KEY";
inline constexpr const char* zero_key = "E_ZERO_KEY";
inline constexpr const char* amount_range = "E_AMOUNT_RANGE";
inline constexpr const char* overspend = "E_OVERSPEND";
inline constexpr const char* corrupt_balance = "E_CORRUPT_BALANCE";
inline constexpr const char* invalid_signature = "E_INVALID_SIGNATURE";
inline constexpr const char* key_mismatch = "E_KEY_MISMATCH";
inline constexpr const char* unknown_account = "E_UNKNOWN_ACCOUNT";
inline constexpr const char* unknown_receiver = "E_UNKNOWN_RECEIVER";
inline constexpr const char* stale_commitment = "E_STALE_COMMITMENT";
inline constexpr const char* verify_failed = "E_VERIFY_FAILED";
inline constexpr const char* insufficient_balance = "E_INSUFFICIENT_BALANCE";
inline constexpr const char* wrap_underflow = "E_WRAP_UNDERFLOW";
inline constexpr const char* parse = "E_PARSE";
inline constexpr const char* bad_state = "E_BAD_STATE";
inline constexpr const char* bad_script = "E_BAD_SCRIPT";
inline constexpr const char* io = "E_IO";
inline constexpr const char* locked = "E_LOCKED";
inline constexpr const char* usage = "E_USAGE";

}  // namespace errc

}  // namespace cweth
