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

#include "cweth/statements.hpp"

namespace cweth {

// The helpers below re-evaluate the protocol formulas with plain curve and
// field operations instead of calling the library constructors: the
// constructors validate ranges and throw, while a verifier has to stay
// total on adversarial inputs and only report mismatches.
namespace {

class ReportBuilder {
public:
    void require(bool ok, const char* code) {
        if (!ok) report_.violations.emplace_back(code);
    }

    bool clean() const { return report_.violations.empty(); }

    VerificationReport finish() {
        report_.accepted = report_.violations.empty();
        return std::move(report_);
    }

private:
    VerificationReport report_;
};

bool valid_commitment_point(const Point& p) {
    return in_subgroup(p);
}

bool valid_key_point(const Point& p) {
    return in_subgroup(p) && !is_identity(p);
}

bool valid_commitment(const Commitment& c) {
    return valid_commitment_point(c.C) && valid_commitment_point(c.D);
}

bool opening_holds(const Commitment& c, const Amount& b, const Fl& sk) {
    Point rhs = point_add(scalar_mul(b, generator_h()),
                          scalar_mul(sk.inverse(), c.D));
    return c.C == rhs;
}

bool receiver_commitment_holds(const Commitment& c, const Amount& a,
                               const Fl& r, const Point& pk) {
    Point expected_c = point_add(scalar_mul(a, generator_h()),
                                 scalar_mul(r, generator_g()));
    return c.C == expected_c && c.D == scalar_mul(r, pk);
}

bool sender_commitment_holds(const Commitment& c, const Amount& a,
                             const Fl& r, const Point& pk) {
    Point expected_c = point_sub(scalar_mul(r, generator_g()),
                                 scalar_mul(a, generator_h()));
    return c.C == expected_c && c.D == scalar_mul(r, pk);
}

Fq self_mask(const Fl& sk, const Point& pk, const Fq& nonce) {
    return mask(scalar_mul(sk, pk).x, nonce);
}

}  // namespace

VerificationReport verify_deposit(const DepositStatement& st,
                                  const DepositWitness& w) {
    ReportBuilder rb;
    rb.require(valid_key_point(st.pk) && valid_commitment(st.balance_commitment) &&
                   valid_commitment(st.amount_commitment),
               constraint::st_invalid_point);
    rb.require(!w.sk.is_zero(), constraint::st_zero_key);
    if (!rb.clean()) return rb.finish();

    rb.require(st.pk == scalar_mul(w.sk, generator_g()),
               constraint::k1_key_mismatch);
    rb.require(opening_holds(st.balance_commitment, w.prior_balance, w.sk),
               constraint::k2_balance_opening);
    rb.require(receiver_commitment_holds(st.amount_commitment, st.amount,
                                         w.commitment_nonce, st.pk),
               constraint::k3_amount_commitment);

    // Post-deposit balance under the self DH key, with the entry list reset
    // to the single pair (own key, nonce).
    Fq post_balance = Fq::from_u256(w.prior_balance) + Fq::from_u256(st.amount);
    rb.require(st.new_encrypted_balance ==
                   post_balance + self_mask(w.sk, st.pk, st.encryption_nonce),
               constraint::k4_balance_encryption);

    rb.require(amount_in_range(st.amount) && amount_in_range(w.prior_balance) &&
                   amount_in_range(u256_add(st.amount, w.prior_balance)),
               constraint::k5_amount_range);
    return rb.finish();
}

VerificationReport verify_transfer(const TransferStatement& st,
                                   const TransferWitness& w) {
    ReportBuilder rb;
    rb.require(valid_key_point(st.sender_pk) && valid_key_point(st.receiver_pk) &&
                   valid_commitment(st.sender_balance_commitment) &&
                   valid_commitment(st.sender_amount_commitment) &&
                   valid_commitment(st.receiver_amount_commitment),
               constraint::st_invalid_point);
    rb.require(!(st.sender_pk == st.receiver_pk), constraint::st_keys_equal);
    rb.require(!w.sk_s.is_zero(), constraint::st_zero_key);
    if (!rb.clean()) return rb.finish();

    rb.require(st.sender_pk == scalar_mul(w.sk_s, generator_g()),
               constraint::t1_key_mismatch);
    rb.require(opening_holds(st.sender_balance_commitment, w.sender_balance,
                             w.sk_s) &&
                   amount_in_range(w.sender_balance) &&
                   amount_in_range(w.amount) && w.amount <= w.sender_balance,
               constraint::t2_overspend);
    rb.require(sender_commitment_holds(st.sender_amount_commitment, w.amount,
                                       w.sender_commit_nonce, st.sender_pk),
               constraint::t3_sender_commitment);
    rb.require(receiver_commitment_holds(st.receiver_amount_commitment,
                                         w.amount, w.receiver_commit_nonce,
                                         st.receiver_pk),
               constraint::t4_receiver_commitment);

    Fq remaining = Fq::from_u256(w.sender_balance) - Fq::from_u256(w.amount);
    rb.require(st.new_sender_encrypted_balance ==
                   remaining +
                       self_mask(w.sk_s, st.sender_pk, st.sender_nonce),
               constraint::t5_sender_encryption);
    rb.require(st.receiver_encrypted_amount ==
                   Fq::from_u256(w.amount) +
                       mask(scalar_mul(w.sk_s, st.receiver_pk).x,
                            st.receiver_nonce),
               constraint::t6_receiver_encryption);
    return rb.finish();
}

VerificationReport verify_withdraw(const WithdrawStatement& st,
                                   const WithdrawWitness& w) {
    ReportBuilder rb;
    rb.require(valid_key_point(st.pk) && valid_commitment(st.balance_commitment) &&
                   valid_commitment(st.amount_commitment),
               constraint::st_invalid_point);
    rb.require(!w.sk.is_zero(), constraint::st_zero_key);
    if (!rb.clean()) return rb.finish();

    rb.require(st.pk == scalar_mul(w.sk, generator_g()),
               constraint::w1_key_mismatch);
    rb.require(opening_holds(st.balance_commitment, w.balance, w.sk) &&
                   amount_in_range(w.balance) && amount_in_range(st.amount) &&
                   st.amount <= w.balance,
               constraint::w2_overspend);
    rb.require(sender_commitment_holds(st.amount_commitment, st.amount,
                                       w.commitment_nonce, st.pk),
               constraint::w3_amount_commitment);

    Fq remaining = Fq::from_u256(w.balance) - Fq::from_u256(st.amount);
    rb.require(st.new_encrypted_balance ==
                   remaining + self_mask(w.sk, st.pk, st.encryption_nonce),
               constraint::w4_balance_encryption);
    return rb.finish();
}

}  // namespace cweth
