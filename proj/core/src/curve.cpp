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

#include "cweth/curve.hpp"

#include <vector>

#include "cweth/keccak.hpp"

namespace cweth {

namespace {

const Fq& coeff_a() {
    static const Fq a = Fq::from_u64(kCurveA);
    return a;
}

const Fq& coeff_d() {
    static const Fq d = Fq::from_u64(kCurveD);
    return d;
}

// Extended twisted Edwards coordinates (X : Y : Z : T) with x = X/Z,
// y = Y/Z and T = X*Y/Z. The unified add and the dedicated double below
// stay complete under the same square-a / nonsquare-d condition as the
// affine law, so scalar_mul never hits an exceptional case.
struct Extended {
    Fq x, y, z, t;
};

Extended to_extended(const Point& p) {
    return {p.x, p.y, Fq::one(), p.x * p.y};
}

Point to_affine(const Extended& p) {
    Fq zinv = p.z.inverse();
    return {p.x * zinv, p.y * zinv};
}

Extended ext_identity() {
    return {Fq::zero(), Fq::one(), Fq::one(), Fq::zero()};
}

Extended ext_add(const Extended& p, const Extended& q) {
    Fq a = p.x * q.x;
    Fq b = p.y * q.y;
    Fq c = coeff_d() * p.t * q.t;
    Fq d = p.z * q.z;
    Fq e = (p.x + p.y) * (q.x + q.y) - a - b;
    Fq f = d - c;
    Fq g = d + c;
    Fq h = b - coeff_a() * a;
    return {e * f, g * h, f * g, e * h};
}

Extended ext_double(const Extended& p) {
    Fq a = p.x.square();
    Fq b = p.y.square();
    Fq c = p.z.square();
    c += c;
    Fq d = coeff_a() * a;
    Fq e = (p.x + p.y).square() - a - b;
    Fq g = d + b;
    Fq f = g - c;
    Fq h = d - b;
    return {e * f, g * h, f * g, e * h};
}

}  // namespace

Point point_identity() {
    return {Fq::zero(), Fq::one()};
}

bool is_identity(const Point& p) {
    return p.x.is_zero() && p.y == Fq::one();
}

bool on_curve(const Point& p) {
    Fq x2 = p.x.square();
    Fq y2 = p.y.square();
    return coeff_a() * x2 + y2 == Fq::one() + coeff_d() * x2 * y2;
}

bool in_subgroup(const Point& p) {
    if (!on_curve(p)) return false;
    return is_identity(scalar_mul(kSubgroupOrder, p));
}

Point point_add(const Point& p, const Point& q) {
    Fq xx = p.x * q.x;
    Fq yy = p.y * q.y;
    Fq dxy = coeff_d() * xx * yy;
    Fq x3 = (p.x * q.y + p.y * q.x) * (Fq::one() + dxy).inverse();
    Fq y3 = (yy - coeff_a() * xx) * (Fq::one() - dxy).inverse();
    return {x3, y3};
}

Point point_double(const Point& p) {
    return point_add(p, p);
}

Point point_negate(const Point& p) {
    return {-p.x, p.y};
}

Point point_sub(const Point& p, const Point& q) {
    return point_add(p, point_negate(q));
}

Point scalar_mul(const U256& k, const Point& p) {
    Extended acc = ext_identity();
    Extended base = to_extended(p);
    std::size_t bits = k.bit_length();
    if (bits == 0) return point_identity();
    for (std::size_t i = bits; i-- > 0;) {
        acc = ext_double(acc);
        if (k.bit(i)) acc = ext_add(acc, base);
    }
    return to_affine(acc);
}

Point scalar_mul(const Fl& k, const Point& p) {
    return scalar_mul(k.to_u256(), p);
}

const Point& generator_g() {
    static const Point g = {
        Fq::from_u256(U256(0x2893f3f6bb957051ULL, 0x2ab8d8010534e0b6ULL,
                           0x4eacb2e09d6277c1ULL, 0x0bb77a6ad63e739bULL)),
        Fq::from_u256(U256(0x4b3c257a872d7d8bULL, 0xfce0051fb9e13377ULL,
                           0x25572e1cd16bf9edULL, 0x25797203f7a0b249ULL)),
    };
    return g;
}

const Point& generator_h() {
    static const Point h = {
        Fq::from_u256(U256(0x1b0a5a5494a05ea8ULL, 0x40c1b7819b0688dfULL,
                           0x0c30f0977609119aULL, 0x0fbb3b6fc43909a8ULL)),
        Fq::from_u256(U256(0x0529142fc9b3276aULL, 0x4b732f99d4fa9a57ULL,
                           0xd275e369bfc42e72ULL, 0x2362f7ff246eb315ULL)),
    };
    return h;
}

Point derive_second_generator(std::uint64_t* counter_out) {
    static constexpr char kDomainTag[] = "cWETH:H";
    for (std::uint64_t counter = 0;; ++counter) {
        std::vector<std::uint8_t> msg(kDomainTag, kDomainTag + 7);
        for (int i = 7; i >= 0; --i) {
            msg.push_back(static_cast<std::uint8_t>(counter >> (8 * i)));
        }
        Digest32 digest = keccak256(std::span<const std::uint8_t>(msg));
        Fq y = Fq::from_u256(U256::from_be_bytes(digest));

        // a*x^2 + y^2 = 1 + d*x^2*y^2  =>  x^2 = (1 - y^2) / (a - d*y^2)
        Fq y2 = y.square();
        Fq denom = coeff_a() - coeff_d() * y2;
        if (denom.is_zero()) continue;
        std::optional<Fq> root = fq_sqrt((Fq::one() - y2) * denom.inverse());
        if (!root) continue;

        Fq x = *root;
        Fq neg = -x;
        if (neg.to_u256() < x.to_u256()) x = neg;

        Point candidate = {x, y};
        for (int i = 0; i < 3; ++i) candidate = point_double(candidate);
        if (is_identity(candidate)) continue;

        if (counter_out) *counter_out = counter;
        return candidate;
    }
}

}  // namespace cweth
