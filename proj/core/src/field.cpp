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

#include "cweth/field.hpp"

namespace cweth {

namespace {

U256 shr1(const U256& v) {
    U256 r;
    for (int i = 0; i < 4; ++i) {
        r.limbs[i] = v.limbs[i] >> 1;
        if (i < 3) r.limbs[i] |= v.limbs[i + 1] << 63;
    }
    return r;
}

struct SqrtContext {
    unsigned s = 0;      // 2-adicity of q - 1
    U256 t{};            // odd part, q - 1 = t * 2^s
    U256 t_plus_1_half{};
    U256 legendre_exp{};  // (q - 1) / 2
    Fq root_of_unity;     // z^t for the first non-residue z
};

SqrtContext make_sqrt_context() {
    SqrtContext ctx;
    U256 q_minus_1 = FqTag::kModulus;
    q_minus_1.limbs[0] -= 1;  // modulus is odd
    ctx.legendre_exp = shr1(q_minus_1);

    ctx.t = q_minus_1;
    while ((ctx.t.limbs[0] & 1) == 0) {
        ctx.t = shr1(ctx.t);
        ++ctx.s;
    }
    U256 tp1 = ctx.t;
    tp1.limbs[0] += 1;  // t is odd, t + 1 < 2^256
    ctx.t_plus_1_half = shr1(tp1);

    const Fq minus_one = Fq::zero() - Fq::one();
    for (std::uint64_t z = 2;; ++z) {
        Fq cand = Fq::from_u256(U256(z));
        if (cand.pow(ctx.legendre_exp) == minus_one) {
            ctx.root_of_unity = cand.pow(ctx.t);
            break;
        }
    }
    return ctx;
}

}  // namespace

std::optional<Fq> fq_sqrt(const Fq& a) {
    static const SqrtContext ctx = make_sqrt_context();

    if (a.is_zero()) return Fq::zero();
    if (a.pow(ctx.legendre_exp) != Fq::one()) return std::nullopt;

    // Tonelli-Shanks.
    unsigned m = ctx.s;
    Fq c = ctx.root_of_unity;
    Fq u = a.pow(ctx.t);
    Fq x = a.pow(ctx.t_plus_1_half);
    while (!(u == Fq::one())) {
        Fq probe = u;
        unsigned i = 0;
        while (!(probe == Fq::one())) {
            probe = probe.square();
            ++i;
        }
        Fq b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = b.square();
        m = i;
        c = b.square();
        u = u * c;
        x = x * b;
    }
    return x;
}

}  // namespace cweth
