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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cweth/errors.hpp"
#include "cweth/scenario.hpp"

namespace {

void emit(const cweth::Json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

int emit_error(const std::string& code, const std::string& message,
               const std::vector<std::string>& violations, bool pretty) {
    cweth::Json j{
        {"ok", false},
        {"error",
         {{"code", code}, {"message", message}, {"violations", violations}}},
    };
    emit(j, pretty);
    return 1;
}

cweth::Digest32 parse_seed(const std::string& seed_hex) {
    if (seed_hex.empty()) return cweth::default_seed();
    return cweth::bytes32_from_hex(seed_hex);
}

cweth::Json load_script(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw cweth::Error(cweth::errc::io,
                           "cannot open script file '" + path + "'");
    }
    try {
        return cweth::Json::parse(in);
    } catch (const cweth::Json::exception& e) {
        throw cweth::Error(cweth::errc::bad_script,
                           "script is not valid JSON: " + std::string(e.what()));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cWETH confidential balance ledger simulator"};
    app.require_subcommand(1);

    std::string state_path = "cweth-state.json";
    std::string seed_hex;
    bool pretty = false;
    app.add_option("--state", state_path, "ledger state file")
        ->capture_default_str();
    app.add_option("--seed", seed_hex,
                   "32-byte hex RNG seed, used by init and run");
    app.add_flag("--pretty", pretty, "indent JSON output");

    std::string actor, from, to, amount_text, script_path;
    bool auto_rollover = false;

    CLI::App* cmd_init =
        app.add_subcommand("init", "create a fresh ledger state file");
    CLI::App* cmd_keygen =
        app.add_subcommand("keygen", "derive and register an actor's key pair");
    cmd_keygen->add_option("actor", actor, "actor name")->required();
    CLI::App* cmd_deposit =
        app.add_subcommand("deposit", "wrap ETH into a confidential balance");
    cmd_deposit->add_option("actor", actor)->required();
    cmd_deposit->add_option("amount", amount_text, "wei, decimal or 0x hex")
        ->required();
    CLI::App* cmd_transfer =
        app.add_subcommand("transfer", "confidential transfer between actors");
    cmd_transfer->add_option("from", from)->required();
    cmd_transfer->add_option("to", to)->required();
    cmd_transfer->add_option("amount", amount_text)->required();
    cmd_transfer->add_flag("--auto-rollover", auto_rollover,
                           "fold the sender's pending balance into actual "
                           "after the debit");
    CLI::App* cmd_withdraw =
        app.add_subcommand("withdraw", "unwrap back to plain ETH");
    cmd_withdraw->add_option("actor", actor)->required();
    cmd_withdraw->add_option("amount", amount_text)->required();
    CLI::App* cmd_rollover =
        app.add_subcommand("rollover", "move pending balance into actual");
    cmd_rollover->add_option("actor", actor)->required();
    CLI::App* cmd_decrypt =
        app.add_subcommand("decrypt", "decrypt an actor's balances");
    cmd_decrypt->add_option("actor", actor)->required();
    CLI::App* cmd_run =
        app.add_subcommand("run", "execute a scenario script on a fresh state");
    cmd_run->add_option("script", script_path, "script JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        cweth::Session session(state_path);
        cweth::Json out;
        if (cmd_init->parsed()) {
            out = session.init(parse_seed(seed_hex));
        } else if (cmd_keygen->parsed()) {
            out = session.keygen(actor);
        } else if (cmd_deposit->parsed()) {
            out = session.deposit(actor, cweth::parse_amount(amount_text));
        } else if (cmd_transfer->parsed()) {
            out = session.transfer(from, to, cweth::parse_amount(amount_text),
                                   auto_rollover);
        } else if (cmd_withdraw->parsed()) {
            out = session.withdraw(actor, cweth::parse_amount(amount_text));
        } else if (cmd_rollover->parsed()) {
            out = session.rollover(actor);
        } else if (cmd_decrypt->parsed()) {
            out = session.decrypt(actor);
        } else if (cmd_run->parsed()) {
            cweth::Digest32 seed = parse_seed(seed_hex);
            out = session.run(load_script(script_path),
                              seed_hex.empty() ? nullptr : &seed);
        }
        emit(out, pretty);
        return out.value("ok", false) ? 0 : 1;
    } catch (const cweth::Error& e) {
        return emit_error(e.code(), e.what(), e.violations(), pretty);
    } catch (const std::exception& e) {
        return emit_error("E_INTERNAL", e.what(), {}, pretty);
    }
}
