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

#include "cweth/elgamal.hpp"

#include "cweth/errors.hpp"

namespace cweth {

void require_amount_range(const Amount& a) {
    if (!amount_in_range(a)) {
        throw Error(errc::amount_range, "amount exceeds 2^96 - 1 wei");
    }
}

Commitment identity_commitment() {
    return {point_identity(), point_identity()};
}

Commitment commit_balance(const Amount& b, const Fl& r, const Point& pk) {
    require_amount_range(b);
    Point c = point_add(scalar_mul(b, generator_h()),
                        scalar_mul(r, generator_g()));
    return {c, scalar_mul(r, pk)};
}

Commitment commit_amount_receiver(const Amount& a, const Fl& r, const Point& pk_r) {
    return commit_balance(a, r, pk_r);
}

Commitment commit_amount_sender(const Amount& a, const Fl& r, const Point& pk_s) {
    require_amount_range(a);
    Point c = point_sub(scalar_mul(r, generator_g()),
                        scalar_mul(a, generator_h()));
    return {c, scalar_mul(r, pk_s)};
}

Commitment aggregate(const Commitment& c1, const Commitment& c2) {
    return {point_add(c1.C, c2.C), point_add(c1.D, c2.D)};
}

bool verify_opening(const Commitment& c, const Amount& b, const Fl& sk) {
    if (!amount_in_range(b)) return false;
    Point rhs = point_add(scalar_mul(b, generator_h()),
                          scalar_mul(sk.inverse(), c.D));
    return c.C == rhs;
}

}  // namespace cweth
