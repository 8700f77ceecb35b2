/*
   Copyright 2026 The cyclicbent Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "doctest.h"

#include "cyclicbent/gf2.hpp"

#include <set>

using namespace cyclicbent::gf2;

namespace {

// Schoolbook multiply-then-reduce, kept separate from the library path.
Elem ref_mul(Elem a, Elem b, std::uint32_t mod, unsigned d) {
    Elem r = 0;
    for (unsigned i = 0; i < d; ++i) {
        if ((b >> i) & 1) r ^= a;
        a <<= 1;
        if ((a >> d) & 1) a ^= mod;
    }
    return r;
}

}  // namespace

TEST_CASE("GF(8) defaults") {
    auto F = Field::make(3);
    CHECK(F->modulus() == 0b1011);
    CHECK(F->generator() == 0b010);
    // x^k != 1 for 0 < k < 7
    Elem v = 1;
    for (int k = 1; k < 7; ++k) {
        v = ref_mul(v, 2, 0b1011, 3);
        CHECK(v != 1);
    }
    CHECK(ref_mul(v, 2, 0b1011, 3) == 1);
}

TEST_CASE("GF(2)") {
    auto F = Field::make(1);
    CHECK(F->generator() == 1);
    CHECK(F->mul(1, 1) == 1);
    CHECK(F->trace(1) == 1);
}

TEST_CASE("reducible modulus is rejected") {
    CHECK_THROWS_AS(Field::make(3, 0b1111), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(4, 0b10101), std::invalid_argument);  // (x^2+x+1)^2
    CHECK_THROWS_AS(Field::make(0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(25), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 0b111), std::invalid_argument);  // wrong degree
}

TEST_CASE("irreducible but non-primitive modulus gets a primitive generator") {
    // x^4+x^3+x^2+x+1 is irreducible; x has order 5 under it.
    auto F = Field::make(4, 0b11111);
    CHECK(F->generator() != 2);
    std::set<Elem> seen;
    for (int k = 0; k < 15; ++k) seen.insert(F->gen_pow(k));
    CHECK(seen.size() == 15);
}

TEST_CASE("GF(8) arithmetic samples") {
    auto F = Field::make(3);
    const Elem b = 2, b2 = 4;
    CHECK(F->mul(b, b2) == 0b011);  // beta^3 = beta + 1
    CHECK(F->inv(b) == 0b101);      // beta^2 + 1
    CHECK(F->add(b, b) == 0);
    CHECK_THROWS_AS(F->inv(0), std::domain_error);
    CHECK(F->trace(0) == 0);
    CHECK(F->trace(1) == 1);
    CHECK(F->trace(b) == 0);
}

TEST_CASE("every built-in modulus verifies") {
    for (unsigned d = 1; d <= max_degree; ++d) {
        CAPTURE(d);
        FieldPtr F;
        CHECK_NOTHROW(F = Field::make(d));
        CHECK(poly_is_irreducible(F->modulus()));
        if (d > 1) CHECK(F->generator() == 2);
    }
}

TEST_CASE("multiplication matches the reference for table and carry-less paths") {
    for (unsigned d : {2u, 5u, 8u, 13u, 21u, 24u}) {
        auto F = Field::make(d);
        CAPTURE(d);
        std::uint32_t s = 12345;
        for (int i = 0; i < 2000; ++i) {
            s = s * 1103515245u + 12345u;
            const Elem a = (s >> 3) & (F->size() - 1);
            s = s * 1103515245u + 12345u;
            const Elem c = (s >> 5) & (F->size() - 1);
            REQUIRE(F->mul(a, c) == ref_mul(a, c, F->modulus(), d));
            if (a) REQUIRE(F->mul(a, F->inv(a)) == 1);
        }
    }
}

TEST_CASE("generator order in a large field") {
    auto F = Field::make(22);
    CHECK(F->pow(2, F->mult_order()) == 1);
    for (auto p : prime_divisors(F->mult_order())) CHECK(F->pow(2, F->mult_order() / p) != 1);
}

TEST_CASE("trace transitivity and linearity, exhaustive up to d = 12") {
    for (unsigned d = 1; d <= 12; ++d) {
        auto F = Field::make(d);
        for (unsigned r = 1; r <= d; ++r) {
            if (d % r) continue;
            for (Elem x = 0; x < F->size(); ++x) {
                const Elem t = F->trace(x, r);
                REQUIRE(F->in_subfield(t, r));
                // tr_1^r on the subfield: sum of t^(2^i), i < r.
                Elem inner = 0;
                for (unsigned i = 0; i < r; ++i) inner ^= F->frobenius(t, i);
                REQUIRE(inner == F->trace(x, 1));
            }
        }
    }
}

TEST_CASE("relative trace is onto the subfield") {
    auto F = Field::make(6);
    std::set<Elem> img;
    for (Elem x = 0; x < F->size(); ++x) img.insert(F->trace(x, 2));
    const auto sub = F->subfield_elements(2);
    CHECK(img == std::set<Elem>(sub.begin(), sub.end()));
    CHECK_THROWS_AS(F->trace(1, 4), std::invalid_argument);
}

TEST_CASE("Frobenius fixes exactly GF(2)") {
    auto F = Field::make(7);
    for (Elem x = 0; x < F->size(); ++x) CHECK((F->sqr(x) == x) == (x < 2));
}

TEST_CASE("subfields") {
    auto F = Field::make(9);
    const Elem g = F->gen_pow(73);
    CHECK(F->pow(g, 8) == g);
    CHECK(F->in_subfield(g, 3));
    CHECK(F->subfield_elements(3).size() == 8);
    auto F8 = Field::make(3);
    CHECK_FALSE(F8->in_subfield(2, 1));
    CHECK(F8->in_subfield(0, 1));
    CHECK(F8->in_subfield(1, 1));
    CHECK_THROWS_AS(F->in_subfield(1, 2), std::invalid_argument);

    // The embedding is a ring homomorphism landing in GF(8).
    for (Elem a = 0; a < 8; ++a)
        for (Elem b = 0; b < 8; ++b) {
            const Elem ea = subfield_embed(*F, *F8, a), eb = subfield_embed(*F, *F8, b);
            CHECK(F->in_subfield(ea, 3));
            CHECK(subfield_embed(*F, *F8, F8->mul(a, b)) == F->mul(ea, eb));
            CHECK(subfield_embed(*F, *F8, a ^ b) == (ea ^ eb));
        }
}

TEST_CASE("trace mask") {
    auto F = Field::make(5);
    for (Elem l = 0; l < F->size(); ++l)
        for (Elem x = 0; x < F->size(); ++x) {
            const unsigned bit = static_cast<unsigned>(__builtin_popcount(F->trace_mask(l) & x) & 1);
            REQUIRE(bit == F->trace(F->mul(l, x)));
        }
}
