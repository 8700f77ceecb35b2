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

#include "cyclicbent/boolfun.hpp"
#include "cyclicbent/construct.hpp"
#include "oracles.hpp"

#include <map>

using namespace cyclicbent;
using gf2::Elem;
using gf2::Field;

namespace {

std::map<std::int64_t, int> histogram(const std::vector<std::int64_t>& v) {
    std::map<std::int64_t, int> h;
    for (auto x : v) ++h[x];
    return h;
}

// f_{1,b,eps}(x1,x2) = f(x1,x2) + f(b x1, x2 + eps)
BoolFun f1b(const BoolFun& f, Elem b, unsigned eps) { return f ^ scale_compose(f, b, eps); }

}  // namespace

TEST_CASE("zero function spectrum") {
    auto F = Field::make(3);
    auto f = BoolFun::on_field(F, [](Elem) { return 0; });
    auto w = walsh(f);
    CHECK(w.values[0] == 8);
    for (Elem a = 1; a < 8; ++a) CHECK(w.values[a] == 0);
    CHECK(w.cls == SpectrumClass::Neither);
}

TEST_CASE("x1 x2 on two variables is bent") {
    auto F = Field::make(1);
    auto f = BoolFun::on_field_times_bit(F, [](Elem x1, unsigned x2) { return x1 & x2; });
    auto w = walsh(f);
    for (auto v : w.values) CHECK((v == 2 || v == -2));
    CHECK(w.cls == SpectrumClass::Bent);
}

TEST_CASE("tr(x^3) on GF(8) is semi-bent with the expected value counts") {
    auto F = Field::make(3);
    auto g = BoolFun::on_field(F, [&](Elem x) { return F->trace(F->pow(x, 3)); });
    auto w = walsh(g);
    CHECK(w.cls == SpectrumClass::SemiBent);
    auto h = histogram(w.values);
    CHECK(h[0] == 4);
    CHECK(h[4] == 3);
    CHECK(h[-4] == 1);
    CHECK(w.values == oracle::walsh_all(g));
}

TEST_CASE("affine functions are neither") {
    auto F = Field::make(3);
    auto f = BoolFun::on_field_times_bit(F, [&](Elem x1, unsigned x2) { return F->trace(F->mul(5, x1)) ^ x2; });
    CHECK(walsh(f).cls == SpectrumClass::Neither);
}

TEST_CASE("fast spectrum agrees with direct sums, Parseval, inverse") {
    oracle::Lcg rng(7);
    for (unsigned d : {1u, 2u, 3u, 4u, 5u}) {
        auto F = Field::make(d);
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<std::uint8_t> t(2 * F->size());
            for (auto& b : t) b = rng.next() & 1;
            BoolFun f(F, Domain::FieldTimesBit, t);
            auto w = walsh(f);
            REQUIRE(w.values == oracle::walsh_all(f));
            std::int64_t sq = 0;
            for (auto v : w.values) sq += v * v;
            CHECK(sq == (std::int64_t{1} << (2 * f.n_vars())));
            auto signs = inverse_walsh(w, *F);
            for (std::size_t i = 0; i < t.size(); ++i) REQUIRE(signs[i] == (t[i] ? -1 : 1));
            CHECK(w.at(3 % F->size(), 1) == oracle::walsh_at(f, 3 % F->size(), 1));

            BoolFun g(F, Domain::PlainField, std::vector<std::uint8_t>(t.begin(), t.begin() + F->size()));
            REQUIRE(walsh(g).values == oracle::walsh_all(g));
        }
    }
}

TEST_CASE("bad tables are rejected") {
    auto F = Field::make(3);
    CHECK_THROWS_AS(BoolFun(F, Domain::PlainField, std::vector<std::uint8_t>(9)), std::invalid_argument);
    CHECK_THROWS_AS(BoolFun(F, Domain::PlainField, std::vector<std::uint8_t>(8, 2)), std::invalid_argument);
    auto f = BoolFun::on_field(F, [](Elem) { return 0; });
    auto g = BoolFun::on_field_times_bit(F, [](Elem, unsigned) { return 0; });
    CHECK_THROWS_AS(f ^ g, std::invalid_argument);
    CHECK_THROWS_AS(restrict_x2(f, 0), std::invalid_argument);
}

TEST_CASE("scale_compose") {
    auto K = kerdock_fn(4);
    const auto& F = K.field();
    CHECK(scale_compose(K, 1, 0) == K);
    auto z = scale_compose(K, 0, 1);
    for (unsigned x2 = 0; x2 < 2; ++x2)
        for (Elem x1 = 0; x1 < 8; ++x1) CHECK(z.at(x1, x2) == K.at(0, x2 ^ 1));
    auto kb = scale_compose(K, 2, 0);
    for (unsigned x2 = 0; x2 < 2; ++x2)
        for (Elem x1 = 0; x1 < 8; ++x1) CHECK(kb.at(x1, x2) == oracle::kerdock(F, F.mul(2, x1), x2));
}

TEST_CASE("xor and restriction") {
    auto K = kerdock_fn(4);
    auto zero = K ^ K;
    for (auto b : zero.table()) CHECK(b == 0);
    auto F = K.field_ptr();
    auto g = BoolFun::on_field(F, [&](Elem x) { return oracle::tr(*F, oracle::power(*F, x, 3)); });
    CHECK(restrict_x2(K, 0) == g);
    CHECK(walsh(g).cls == SpectrumClass::SemiBent);
    CHECK(add_constant(add_constant(K, 1), 1) == K);
}

TEST_CASE("restrictions of bent functions split the spectrum") {
    for (unsigned m : {4u, 6u}) {
        auto F = Field::make(m - 1);
        std::vector<BoolFun> bents;
        for (auto& spec : admissible_specs(F, m)) {
            auto f = chain_fn(spec, F);
            for (Elem a = 0; a < F->size(); ++a)
                for (Elem b = 0; b < F->size(); ++b)
                    if (a != b) bents.push_back(scale_compose(f, a, 0) ^ scale_compose(f, b, 1));
        }
        const std::int64_t amp = std::int64_t{1} << (m / 2);
        for (auto& f : bents) {
            REQUIRE(walsh(f).cls == SpectrumClass::Bent);
            auto w0 = walsh(restrict_x2(f, 0)), w1 = walsh(restrict_x2(f, 1));
            CHECK(w0.cls == SpectrumClass::SemiBent);
            CHECK(w1.cls == SpectrumClass::SemiBent);
            for (Elem l = 0; l < F->size(); ++l) {
                const auto a = std::llabs(w0.values[l]), b = std::llabs(w1.values[l]);
                REQUIRE(std::min(a, b) == 0);
                REQUIRE(std::max(a, b) == amp);
            }
        }
    }
}

TEST_CASE("spectrum sums and J counts for the chain functions") {
    for (unsigned m : {4u, 6u}) {
        auto F = Field::make(m - 1);
        const std::int64_t two_m = std::int64_t{1} << m;
        const std::size_t j_plus = (std::size_t{1} << (m - 3)) + (std::size_t{1} << ((m - 4) / 2));
        const std::size_t j_minus = (std::size_t{1} << (m - 3)) - (std::size_t{1} << ((m - 4) / 2));
        for (auto& spec : admissible_specs(F, m)) {
            auto f = chain_fn(spec, F);
            REQUIRE(f.at(0, 0) == 0);
            REQUIRE(f.at(0, 1) == 0);
            auto check_pair = [&](const BoolFun& g, const BoolFun& h) {
                auto wg = walsh(g), wh = walsh(h);
                REQUIRE(wg.cls == SpectrumClass::Bent);
                REQUIRE(wh.cls == SpectrumClass::Bent);
                std::int64_t s0 = 0, s1 = 0, s01 = 0;
                for (Elem mu = 0; mu < F->size(); ++mu) {
                    s0 += wg.at(mu, 0);
                    s1 += wh.at(mu, 1);
                    s01 += wg.at(mu, 0) * wh.at(mu, 1);
                }
                CHECK(s0 == two_m);
                CHECK(s1 == 0);
                CHECK(s01 == 0);
                for (unsigned e1 = 0; e1 < 2; ++e1)
                    for (unsigned e2 = 0; e2 < 2; ++e2) CHECK(count_j(wg, wh, e1, e2) == (e1 ? j_minus : j_plus));
            };
            for (Elem b = 0; b < F->size(); ++b) {
                if (b != 1) check_pair(f1b(f, b, 0), f1b(f, b, 1));
                if (b != 0) check_pair(scale_compose(f, b, 0), scale_compose(f, b, 0));
            }
        }
    }
}

TEST_CASE("degree and quadratic radical") {
    auto K = kerdock_fn(6);
    CHECK(algebraic_degree(K) == 2);
    CHECK(quadratic_radical_dim(K) == 0u);
    auto F = K.field_ptr();
    auto cubic = BoolFun::on_field_times_bit(F, [](Elem x1, unsigned x2) { return (x1 & 1) & ((x1 >> 1) & 1) & x2; });
    CHECK(algebraic_degree(cubic) == 3);
    CHECK_FALSE(quadratic_radical_dim(cubic).has_value());
    auto lin = BoolFun::on_field_times_bit(F, [](Elem x1, unsigned) { return x1 & 1; });
    CHECK(quadratic_radical_dim(lin) == 6u);
}
