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

#include <doctest.h>

#include "cweth/elgamal.hpp"
#include "cweth/errors.hpp"
#include "test_util.hpp"

using namespace cweth;
using namespace cweth::test;

namespace {

struct Party {
    Fl sk;
    Point pk;
};

Party make_party(TestRng& rng) {
    Fl sk = rng.next_nonzero_fl();
    return {sk, scalar_mul(sk, generator_g())};
}

Amount add_amount(const Amount& a, const Amount& b) { return u256_add(a, b); }

}  // namespace

TEST_CASE("amount range") {
    CHECK(amount_in_range(Amount{}));
    CHECK(amount_in_range(u256_sub(kAmountBound, U256(1))));
    CHECK(!amount_in_range(kAmountBound));
    CHECK_NOTHROW(require_amount_range(Amount(7)));
    try {
        require_amount_range(kAmountBound);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::amount_range);
    }
}

TEST_CASE("identity commitment opens to zero under any key") {
    Commitment id = identity_commitment();
    CHECK(is_identity(id.C));
    CHECK(is_identity(id.D));

    TestRng rng("identity commitment");
    for (int i = 0; i < 10; ++i) {
        Party p = make_party(rng);
        CHECK(verify_opening(id, Amount{}, p.sk));
        CHECK(!verify_opening(id, Amount(1), p.sk));
    }
}

TEST_CASE("balance commitment opens only to the committed value") {
    TestRng rng("balance opening");
    for (int i = 0; i < 100; ++i) {
        Party p = make_party(rng);
        Amount b = rng.next_amount();
        Fl r = rng.next_nonzero_fl();

        Commitment c = commit_balance(b, r, p.pk);
        CHECK(verify_opening(c, b, p.sk));

        Amount wrong = add_amount(b, Amount(1));
        if (amount_in_range(wrong)) CHECK(!verify_opening(c, wrong, p.sk));

        // A different key cannot open it (except the degenerate equal-key
        // draw, which TestRng will not produce).
        Party other = make_party(rng);
        CHECK(!verify_opening(c, b, other.sk));
    }
}

TEST_CASE("opening rejects out-of-range values") {
    TestRng rng("opening range gate");
    Party p = make_party(rng);
    Fl r = rng.next_nonzero_fl();
    Commitment c = commit_balance(Amount(5), r, p.pk);
    CHECK(verify_opening(c, Amount(5), p.sk));
    CHECK(!verify_opening(c, kAmountBound, p.sk));
    CHECK(!verify_opening(c, FqTag::kModulus, p.sk));
}

TEST_CASE("commitment structure") {
    TestRng rng("commitment structure");
    Party p = make_party(rng);
    Amount b = Amount(42);
    Fl r = rng.next_nonzero_fl();

    Commitment c = commit_balance(b, r, p.pk);
    CHECK(c.C == point_add(scalar_mul(b, generator_h()),
                           scalar_mul(r, generator_g())));
    CHECK(c.D == scalar_mul(r, p.pk));

    // Receiver amount commitments use the same formula.
    Commitment recv = commit_amount_receiver(b, r, p.pk);
    CHECK(recv == c);

    // Sender amount commitments negate the value part.
    Commitment send = commit_amount_sender(b, r, p.pk);
    CHECK(send.C == point_sub(scalar_mul(r, generator_g()),
                              scalar_mul(b, generator_h())));
    CHECK(send.D == scalar_mul(r, p.pk));

    // Nonce zero leaves only the value component and a clear handle.
    Commitment bare = commit_balance(b, Fl::zero(), p.pk);
    CHECK(bare.C == scalar_mul(b, generator_h()));
    CHECK(is_identity(bare.D));
    CHECK(verify_opening(bare, b, p.sk));
}

TEST_CASE("sender and receiver commitments cancel in the value component") {
    TestRng rng("sender receiver cancel");
    Party sender = make_party(rng);
    Party receiver = make_party(rng);
    Amount a = rng.next_amount();
    Fl r = rng.next_nonzero_fl();

    Commitment cs = commit_amount_sender(a, r, sender.pk);
    Commitment cr = commit_amount_receiver(a, r, receiver.pk);
    CHECK(point_add(cs.C, cr.C) ==
          scalar_mul(r + r, generator_g()));
}

TEST_CASE("aggregation is homomorphic in the opening") {
    TestRng rng("aggregation");
    for (int i = 0; i < 50; ++i) {
        Party p = make_party(rng);
        Amount b1 = rng.next_amount_upto(Amount{~0ULL, 0x7fffffff, 0, 0});
        Amount b2 = rng.next_amount_upto(Amount{~0ULL, 0x7fffffff, 0, 0});
        Fl r1 = rng.next_nonzero_fl();
        Fl r2 = rng.next_nonzero_fl();

        Commitment c1 = commit_balance(b1, r1, p.pk);
        Commitment c2 = commit_amount_receiver(b2, r2, p.pk);
        Commitment agg = aggregate(c1, c2);
        CHECK(verify_opening(agg, add_amount(b1, b2), p.sk));

        // Aggregating the identity is a no-op.
        CHECK(aggregate(c1, identity_commitment()) == c1);
        CHECK(aggregate(identity_commitment(), c1) == c1);
    }
}

TEST_CASE("sender-side aggregation subtracts") {
    TestRng rng("sender aggregation");
    for (int i = 0; i < 50; ++i) {
        Party p = make_party(rng);
        Amount b = rng.next_amount();
        Amount a = rng.next_amount_upto(b);
        Fl r1 = rng.next_nonzero_fl();
        Fl r2 = rng.next_nonzero_fl();

        Commitment balance = commit_balance(b, r1, p.pk);
        Commitment spend = commit_amount_sender(a, r2, p.pk);
        Commitment agg = aggregate(balance, spend);
        CHECK(verify_opening(agg, u256_sub(b, a), p.sk));
    }
}

TEST_CASE("aggregation chain models a full account history") {
    TestRng rng("aggregation chain");
    Party owner = make_party(rng);

    Commitment acc = identity_commitment();
    Amount total{};
    for (int i = 0; i < 20; ++i) {
        Amount a = rng.next_amount_upto(Amount(1'000'000'000));
        Fl r = rng.next_nonzero_fl();
        acc = aggregate(acc, commit_amount_receiver(a, r, owner.pk));
        total = add_amount(total, a);
        CHECK(verify_opening(acc, total, owner.sk));
    }

    // Spend half of it via a sender commitment.
    Amount spend = rng.next_amount_upto(total);
    Fl r = rng.next_nonzero_fl();
    acc = aggregate(acc, commit_amount_sender(spend, r, owner.pk));
    CHECK(verify_opening(acc, u256_sub(total, spend), owner.sk));
}
