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

#include <cstdint>
#include <optional>
#include <string>

#include "cweth/u256.hpp"

namespace cweth {

namespace detail {

// -modulus^-1 mod 2^64, by Newton iteration on the low limb.
constexpr std::uint64_t mont_inv64(std::uint64_t m0) {
    std::uint64_t inv = 1;
    for (int i = 0; i < 6; ++i) {
        inv *= 2 - m0 * inv;
    }
    return ~inv + 1;  // negate mod 2^64
}

// 2^(256+extra_doublings) mod m, for moduli below 2^255 (doubling never
// carries out of 256 bits).
constexpr U256 mont_power_of_two(const U256& m, int extra_doublings) {
    U256 x(1);
    for (int i = 0; i < 256 + extra_doublings; ++i) {
        x = u256_add(x, x);
        if (x >= m) x = u256_sub(x, m);
    }
    return x;
}

}  // namespace detail

/// Prime-field element in Montgomery representation. Tag carries the modulus;
/// all values are kept canonical (< modulus).
template <typename Tag>
class Fp {
public:
    static constexpr U256 modulus() { return Tag::kModulus; }

    constexpr Fp() = default;

    static Fp zero() { return Fp(); }
    static Fp one() { return from_raw(r()); }

    /// Reduces an arbitrary 256-bit value modulo the field order.
    static Fp from_u256(U256 v) {
        while (v >= Tag::kModulus) v = u256_sub(v, Tag::kModulus);
        return from_raw(mont_mul(v, r2()));
    }

    static Fp from_u64(std::uint64_t v) { return from_u256(U256(v)); }

    U256 to_u256() const { return mont_reduce_single(mont_); }

    bool is_zero() const { return mont_.is_zero(); }
    constexpr bool operator==(const Fp&) const = default;

    Fp operator+(const Fp& other) const {
        U256 sum = u256_add(mont_, other.mont_);
        if (sum >= Tag::kModulus) sum = u256_sub(sum, Tag::kModulus);
        return from_raw(sum);
    }

    Fp operator-(const Fp& other) const {
        if (mont_ >= other.mont_) {
            return from_raw(u256_sub(mont_, other.mont_));
        }
        return from_raw(u256_sub(u256_add(mont_, Tag::kModulus), other.mont_));
    }

    Fp operator-() const {
        if (is_zero()) return *this;
        return from_raw(u256_sub(Tag::kModulus, mont_));
    }

    Fp operator*(const Fp& other) const {
        return from_raw(mont_mul(mont_, other.mont_));
    }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp square() const { return *this * *this; }

    Fp pow(const U256& exponent) const {
        Fp result = one();
        Fp base = *this;
        std::size_t bits = exponent.bit_length();
        for (std::size_t i = 0; i < bits; ++i) {
            if (exponent.bit(i)) result *= base;
            base = base.square();
        }
        return result;
    }

    /// Multiplicative inverse of a nonzero element (Fermat).
    Fp inverse() const {
        return pow(u256_sub(Tag::kModulus, U256(2)));
    }

    std::string to_hex() const { return to_u256().to_hex(); }

    /// Raw Montgomery limbs; only for constant tables and tests.
    static Fp from_raw(const U256& mont) {
        Fp f;
        f.mont_ = mont;
        return f;
    }
    const U256& raw() const { return mont_; }

private:
    U256 mont_{};

    static const U256& r() {
        static const U256 value = detail::mont_power_of_two(Tag::kModulus, 0);
        return value;
    }

    static const U256& r2() {
        static const U256 value = detail::mont_power_of_two(Tag::kModulus, 256);
        return value;
    }

    static U256 mont_reduce(std::array<std::uint64_t, 8> t) {
        constexpr std::uint64_t np = detail::mont_inv64(Tag::kModulus.limbs[0]);
        for (int i = 0; i < 4; ++i) {
            std::uint64_t m = t[i] * np;
            std::uint64_t carry = 0;
            for (int j = 0; j < 4; ++j) {
                unsigned __int128 acc =
                    static_cast<unsigned __int128>(m) * Tag::kModulus.limbs[j] +
                    t[i + j] + carry;
                t[i + j] = static_cast<std::uint64_t>(acc);
                carry = static_cast<std::uint64_t>(acc >> 64);
            }
            for (int j = i + 4; j < 8 && carry != 0; ++j) {
                unsigned __int128 acc =
                    static_cast<unsigned __int128>(t[j]) + carry;
                t[j] = static_cast<std::uint64_t>(acc);
                carry = static_cast<std::uint64_t>(acc >> 64);
            }
        }
        U256 result(t[4], t[5], t[6], t[7]);
        if (result >= Tag::kModulus) result = u256_sub(result, Tag::kModulus);
        return result;
    }

    static U256 mont_mul(const U256& a, const U256& b) {
        return mont_reduce(u256_mul_wide(a, b));
    }

    static U256 mont_reduce_single(const U256& a) {
        return mont_reduce({a.limbs[0], a.limbs[1], a.limbs[2], a.limbs[3],
                            0, 0, 0, 0});
    }
};

/// Coordinate field of the curve: the BN254 scalar-field modulus. Also the
/// modulus of the Poseidon permutation and of all encrypted balances.
struct FqTag {
    static constexpr U256 kModulus{0x43e1f593f0000001ULL, 0x2833e84879b97091ULL,
                                   0xb85045b68181585dULL, 0x30644e72e131a029ULL};
};

/// Prime order of the curve's large subgroup: the domain of private keys and
/// commitment nonces.
struct FlTag {
    static constexpr U256 kModulus{0x677297dc392126f1ULL, 0xab3eedb83920ee0aULL,
                                   0x370a08b6d0302b0bULL, 0x060c89ce5c263405ULL};
};

using Fq = Fp<FqTag>;
using Fl = Fp<FlTag>;

/// Square root in Fq via Tonelli-Shanks, or nullopt for non-residues.
std::optional<Fq> fq_sqrt(const Fq& value);

}  // namespace cweth
