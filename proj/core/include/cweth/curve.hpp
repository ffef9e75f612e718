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

#include "cweth/field.hpp"

namespace cweth {

// babyJubJub twisted Edwards curve a*x^2 + y^2 = 1 + d*x^2*y^2 over Fq,
// with a = 168700 and d = 168696. a is a square mod q and d is not, so the
// affine addition law below is complete: no input pair makes a denominator
// vanish. The curve order is 8 * l with l prime; all protocol points live
// in the order-l subgroup.

/// Affine point. The group identity is (0, 1).
struct Point {
    Fq x;
    Fq y;

    bool operator==(const Point&) const = default;
};

inline constexpr std::uint64_t kCurveA = 168700;
inline constexpr std::uint64_t kCurveD = 168696;
inline constexpr std::uint64_t kCofactor = 8;

/// Subgroup order l as an integer, equal to Fl's modulus.
inline constexpr U256 kSubgroupOrder = FlTag::kModulus;

Point point_identity();
bool is_identity(const Point& p);

bool on_curve(const Point& p);

/// True when p is on the curve and l * p is the identity.
bool in_subgroup(const Point& p);

Point point_add(const Point& p, const Point& q);
Point point_double(const Point& p);
Point point_negate(const Point& p);
Point point_sub(const Point& p, const Point& q);

/// k * p by double-and-add. k is taken as a plain integer, not reduced
/// modulo l, so cofactor clearing and subgroup checks work on any point.
Point scalar_mul(const U256& k, const Point& p);
Point scalar_mul(const Fl& k, const Point& p);

/// Subgroup base point G (8 times the full-curve generator).
const Point& generator_g();

/// Independent second generator H, derived by hashing to the curve.
/// No party knows the discrete log of H with respect to G.
const Point& generator_h();

/// Recomputes H from scratch: hash counter values to candidate y
/// coordinates, solve for x, clear the cofactor, keep the first point of
/// order l. Returns the accepted counter through counter_out when non-null.
Point derive_second_generator(std::uint64_t* counter_out = nullptr);

}  // namespace cweth
