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

#include "cweth/curve.hpp"
#include "gmp_oracle.hpp"
#include "test_util.hpp"

using namespace cweth;
using namespace cweth::test;

TEST_CASE("curve parameters match the reference vectors") {
    auto fx = load_fixture("curve_vectors.json");
    CHECK(FqTag::kModulus ==
          u256_of(fx.at("field_modulus").get<std::string>()));
    CHECK(FlTag::kModulus ==
          u256_of(fx.at("subgroup_order").get<std::string>()));
    CHECK(fx.at("cofactor").get<int>() == int(kCofactor));
    CHECK(u256_of(fx.at("a").get<std::string>()) == U256(kCurveA));
    CHECK(u256_of(fx.at("d").get<std::string>()) == U256(kCurveD));

    // curve order = cofactor * subgroup order
    mpz_class order = mpz_of(u256_of(fx.at("curve_order").get<std::string>()));
    CHECK(order == 8 * mpz_of(FlTag::kModulus));
}

TEST_CASE("base point and generators") {
    auto fx = load_fixture("curve_vectors.json");
    Point base = point_of(fx.at("base_point"));
    Point gen = point_of(fx.at("generator"));

    CHECK(generator_g() == base);
    CHECK(on_curve(base));
    CHECK(in_subgroup(base));
    CHECK(on_curve(gen));

    // The full-curve generator times the cofactor gives the base point.
    CHECK(scalar_mul(U256(kCofactor), gen) == base);

    // The base point has exact order l.
    CHECK(is_identity(scalar_mul(kSubgroupOrder, base)));
    CHECK(!is_identity(scalar_mul(U256(2), base)));
}

TEST_CASE("second generator derivation") {
    auto fx = load_fixture("curve_vectors.json");
    Point expected = point_of(fx.at("second_generator"));
    std::uint64_t counter = 0;
    Point h = derive_second_generator(&counter);
    CHECK(h == expected);
    CHECK(generator_h() == expected);
    CHECK(counter ==
          fx.at("second_generator_counter").get<std::uint64_t>());
    CHECK(in_subgroup(h));
    CHECK(!is_identity(h));
    CHECK(!(h == generator_g()));
}

TEST_CASE("identity and negation") {
    Point id = point_identity();
    CHECK(is_identity(id));
    CHECK(on_curve(id));
    CHECK(in_subgroup(id));

    Point g = generator_g();
    CHECK(point_add(g, id) == g);
    CHECK(point_add(id, g) == g);
    CHECK(is_identity(point_add(g, point_negate(g))));
    CHECK(is_identity(point_sub(g, g)));
    CHECK(point_sub(g, point_negate(g)) == point_double(g));
    CHECK(point_negate(id) == id);
}

TEST_CASE("fixture addition and doubling vectors") {
    auto fx = load_fixture("curve_vectors.json");
    Point p1 = point_of(fx.at("addition").at("p1"));
    Point p2 = point_of(fx.at("addition").at("p2"));
    Point sum = point_of(fx.at("addition").at("sum"));
    CHECK(point_add(p1, p2) == sum);
    CHECK(point_add(p2, p1) == sum);

    Point p = point_of(fx.at("doubling").at("p"));
    Point dbl = point_of(fx.at("doubling").at("double"));
    CHECK(point_double(p) == dbl);
    CHECK(point_add(p, p) == dbl);
}

TEST_CASE("small-order points are on the curve but not in the subgroup") {
    auto fx = load_fixture("curve_vectors.json");
    Point t8 = point_of(fx.at("torsion8_point"));
    CHECK(on_curve(t8));
    CHECK(!in_subgroup(t8));
    CHECK(is_identity(scalar_mul(U256(8), t8)));
    CHECK(!is_identity(scalar_mul(U256(4), t8)));

    // (0, -1) has order 2; addition still works on it.
    Point two_torsion{Fq::zero(), -Fq::one()};
    CHECK(on_curve(two_torsion));
    CHECK(!in_subgroup(two_torsion));
    CHECK(is_identity(point_double(two_torsion)));
}

TEST_CASE("fixture scalar multiplication vectors") {
    auto fx = load_fixture("curve_vectors.json");
    const auto& vectors = fx.at("scalar_mul");
    REQUIRE(vectors.size() >= 5);
    for (const auto& v : vectors) {
        U256 k = u256_of(v.at("k").get<std::string>());
        Point p = point_of(v.at("point"));
        Point expected = point_of(v.at("result"));
        CHECK(scalar_mul(k, p) == expected);
    }
}

TEST_CASE("group law matches the gmp oracle") {
    CurveOracle oracle;
    TestRng rng("curve vs gmp");
    Point g = generator_g();
    Point h = generator_h();

    for (int i = 0; i < 200; ++i) {
        Point p = scalar_mul(rng.next_nonzero_fl(), g);
        Point q = scalar_mul(rng.next_nonzero_fl(), h);
        CHECK(oracle.on_curve(oracle.of_point(p)));
        CHECK(oracle.on_curve(oracle.of_point(q)));

        Point sum = point_add(p, q);
        MpzPoint zsum = oracle.add(oracle.of_point(p), oracle.of_point(q));
        CHECK(oracle.of_point(sum) == zsum);

        Point dbl = point_double(p);
        MpzPoint zdbl = oracle.add(oracle.of_point(p), oracle.of_point(p));
        CHECK(oracle.of_point(dbl) == zdbl);
    }

    for (int i = 0; i < 20; ++i) {
        U256 k = rng.next_u256();
        MpzPoint expected = oracle.mul(mpz_of(k), oracle.of_point(g));
        CHECK(oracle.of_point(scalar_mul(k, g)) == expected);
    }
}

TEST_CASE("scalar multiplication properties") {
    TestRng rng("scalar mul props");
    Point g = generator_g();

    // Small scalars against repeated addition.
    Point acc = point_identity();
    for (std::uint64_t k = 0; k <= 32; ++k) {
        CHECK(scalar_mul(U256(k), g) == acc);
        acc = point_add(acc, g);
    }

    for (int i = 0; i < 50; ++i) {
        Fl a = rng.next_fl();
        Fl b = rng.next_fl();
        Point p = scalar_mul(rng.next_nonzero_fl(), g);

        // (a + b) P = aP + bP, and scalars reduce modulo the subgroup
        // order on subgroup points.
        CHECK(scalar_mul(a + b, p) ==
              point_add(scalar_mul(a, p), scalar_mul(b, p)));
        CHECK(scalar_mul(a * b, p) == scalar_mul(a, scalar_mul(b, p)));
        U256 lifted = u256_add(a.to_u256(), kSubgroupOrder);
        CHECK(scalar_mul(lifted, p) == scalar_mul(a, p));
    }

    CHECK(is_identity(scalar_mul(U256{}, g)));
    CHECK(scalar_mul(U256(1), g) == g);
}

TEST_CASE("subgroup membership") {
    TestRng rng("subgroup checks");
    for (int i = 0; i < 20; ++i) {
        Point p = scalar_mul(rng.next_nonzero_fl(), generator_g());
        CHECK(on_curve(p));
        CHECK(in_subgroup(p));
    }

    // An arbitrary (x, y) off the curve fails both checks.
    Point junk{Fq::from_u64(123), Fq::from_u64(456)};
    CHECK(!on_curve(junk));
    CHECK(!in_subgroup(junk));
}
