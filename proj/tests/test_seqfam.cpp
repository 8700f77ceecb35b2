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

#include "cyclicbent/construct.hpp"
#include "cyclicbent/seqfam.hpp"
#include "oracles.hpp"
#include "seq_oracles.hpp"

#include <set>

using namespace cyclicbent;
using gf2::Elem;
using gf2::Field;

namespace {

std::vector<BoolFun> chain_functions(unsigned m) {
    auto F = Field::make(m - 1);
    std::vector<BoolFun> out;
    for (auto& spec : admissible_specs(F, m)) out.push_back(chain_fn(spec, F));
    return out;
}

template <class Predictor>
void check_all_triples(const SequenceFamily& fam, Predictor& pred) {
    for (std::size_t i = 0; i < fam.members.size(); ++i)
        for (std::size_t j = 0; j < fam.members.size(); ++j)
            for (std::size_t tau = 0; tau < fam.period; ++tau)
                REQUIRE(correlate(fam.members[i], fam.members[j], tau) == pred(fam.labels[i], fam.labels[j], tau));
}

}  // namespace

TEST_CASE("correlate basics") {
    std::vector<GaussInt> s{1, -1, -1, 1, 1, -1, 1};
    CHECK(correlate(s, s, 0) == GaussInt(7));
    std::vector<GaussInt> u{{0, 1}, 1};
    CHECK(correlate(u, u, 0) == GaussInt(2));
    CHECK(correlate(u, u, 1) == GaussInt(1, 1) + GaussInt(1, -1) - GaussInt(2) + GaussInt(0, 0));
    CHECK_THROWS_AS(correlate(s, u, 0), std::invalid_argument);
}

TEST_CASE("quaternary family at m = 4") {
    auto fam = quaternary_family(kerdock_fn(4));
    CHECK(fam.members.size() == 9);
    CHECK(fam.period == 7);
    for (std::size_t i = 0; i + 1 < fam.members.size(); ++i)
        for (auto z : fam.members[i]) CHECK(z.norm() == 1);
    const auto& inf = fam.members.back();
    CHECK(correlate(inf, inf, 0) == GaussInt(7));
    for (std::size_t tau = 1; tau < 7; ++tau) CHECK(correlate(inf, inf, tau) == GaussInt(-1));
    for (std::size_t i = 0; i + 1 < fam.members.size(); ++i)
        for (std::size_t j = 0; j + 1 < fam.members.size(); ++j)
            if (i != j) CHECK(correlate(fam.members[i], fam.members[j], 0) == GaussInt(-1));

    auto d = full_distribution(fam);
    CorrDist want;
    want.counts = {{GaussInt(7), 9}, {GaussInt(-1), 62}, {GaussInt(1, 2), 186},
                   {GaussInt(1, -2), 186}, {GaussInt(-3, 2), 62}, {GaussInt(-3, -2), 62}};
    want.total = 567;
    CHECK(d == want);
    CHECK(table_quaternary(4) == want);
}

TEST_CASE("quaternary families match the closed form and the Walsh evaluator") {
    const std::set<GaussInt> allowed4{GaussInt(-1), GaussInt(7), GaussInt(1, 2), GaussInt(1, -2), GaussInt(-3, 2),
                                      GaussInt(-3, -2)};
    for (unsigned m : {4u, 6u}) {
        for (auto& f : chain_functions(m)) {
            auto fam = quaternary_family(f);
            auto d = full_distribution(fam);
            CHECK(d == table_quaternary(m));
            CHECK(d.total == fam.members.size() * fam.members.size() * fam.period);
            seq_oracle::QuaternaryPredictor pred(f);
            check_all_triples(fam, pred);
            // |R| <= 1 + sqrt(2^(m-1)), compared exactly.
            const std::int64_t r2 = r_max_sq(fam), slack = r2 - 1 - (std::int64_t{1} << (m - 1));
            CHECK((slack <= 0 || slack * slack <= 4 * (std::int64_t{1} << (m - 1))));
            if (m == 4)
                for (auto& [v, c] : d.counts) CHECK(allowed4.count(v));
        }
    }
}

TEST_CASE("quaternary family rejects unnormalized input") {
    auto K = kerdock_fn(4);
    auto shifted = K ^ BoolFun::on_field_times_bit(K.field_ptr(), [](Elem, unsigned x2) { return x2; });
    CHECK_THROWS_AS(quaternary_family(shifted), std::invalid_argument);
    CHECK_NOTHROW(quaternary_family(normalize_zero(shifted)));
}

TEST_CASE("binary family") {
    auto fam4 = binary_family(kerdock_fn(4));
    CHECK(fam4.members.size() == 8);
    CHECK(fam4.period == 14);
    auto d4 = full_distribution(fam4);
    CHECK(d4.counts[GaussInt(14)] == 8);
    CHECK(d4 == table_binary(4));

    auto fam6 = binary_family(chain_fn({6, {1, 5}, {1}}));
    auto d6 = full_distribution(fam6);
    CorrDist want;
    want.counts = {{GaussInt(62), 32},    {GaussInt(-2), 736},    {GaussInt(0), 1024},  {GaussInt(2), 256},
                   {GaussInt(6), 14400},  {GaussInt(8), 15360},   {GaussInt(10), 2880}, {GaussInt(-10), 8640},
                   {GaussInt(-8), 15360}, {GaussInt(-6), 4800}};
    want.total = 63488;
    CHECK(d6 == want);
    CHECK(table_binary(6) == want);
    CHECK(r_max_sq(fam6) == 100);

    for (unsigned m : {4u, 6u})
        for (auto& f : chain_functions(m)) {
            for (Elem x = 0; x < f.field().size(); ++x) REQUIRE((f.at(x, 0) ^ f.at(x, 1)) == oracle::tr(f.field(), x));
            auto fam = binary_family(f);
            CHECK(full_distribution(fam) == table_binary(m));
            const std::int64_t r = (std::int64_t{1} << (m / 2)) + 2;
            CHECK(r_max_sq(fam) == r * r);
            seq_oracle::BinaryPredictor pred(f);
            check_all_triples(fam, pred);
        }
}

TEST_CASE("binary family checks its trace hypothesis") {
    auto K = kerdock_fn(4);
    auto scaled = scale_compose(K, 2, 0);
    CHECK(is_cyclic_bent_reduced(scaled).passed());
    CHECK_THROWS_AS(binary_family(scaled), std::invalid_argument);
}

TEST_CASE("semi-bent family") {
    auto F = Field::make(3);
    auto g = BoolFun::on_field(F, [&](Elem x) { return oracle::tr(*F, oracle::power(*F, x, 3)); });
    auto fam = semibent_sequence_family(g);
    CHECK(fam.members.size() == 9);
    CHECK(fam.period == 7);
    for (auto& s : fam.members)
        for (auto z : s) CHECK((z == GaussInt(1) || z == GaussInt(-1)));
    const auto& inf = fam.members.back();
    for (std::size_t tau = 1; tau < 7; ++tau) CHECK(correlate(inf, inf, tau) == GaussInt(-1));
    auto d = full_distribution(fam);
    CorrDist want;
    want.counts = {{GaussInt(7), 9}, {GaussInt(-1), 310}, {GaussInt(3), 186}, {GaussInt(-5), 62}};
    want.total = 567;
    CHECK(d == want);
    CHECK(table_semibent(3) == want);

    auto bad = add_constant(g, 1);
    CHECK_THROWS_AS(semibent_sequence_family(bad), std::invalid_argument);

    for (unsigned m : {4u, 6u})
        for (auto& f : chain_functions(m))
            for (unsigned e = 0; e < 2; ++e) {
                auto s = derive_semibent(f, e);
                REQUIRE(s[0] == 0);
                auto sf = semibent_sequence_family(s);
                const unsigned n = m - 1;
                CHECK(full_distribution(sf) == table_semibent(n));
                const std::int64_t r = 1 + (std::int64_t{1} << ((n + 1) / 2));
                CHECK(r_max_sq(sf) == r * r);
                seq_oracle::SemibentPredictor pred(s);
                check_all_triples(sf, pred);
            }
}

TEST_CASE("spectrum counts behind the distributions") {
    for (unsigned m : {4u, 6u}) {
        const std::size_t np = (std::size_t{1} << (m - 2)) + (std::size_t{1} << ((m - 2) / 2));
        const std::size_t nm = (std::size_t{1} << (m - 2)) - (std::size_t{1} << ((m - 2) / 2));
        const std::size_t tp = (std::size_t{1} << (m - 2)) * ((std::size_t{1} << (m - 3)) + (std::size_t{1} << ((m - 4) / 2)));
        const std::size_t tm = (std::size_t{1} << (m - 2)) * ((std::size_t{1} << (m - 3)) - (std::size_t{1} << ((m - 4) / 2)));
        const std::size_t half = std::size_t{1} << (m - 2);
        const std::size_t t1 = (std::size_t{1} << (m - 2)) * (std::size_t{1} << (m - 3));
        for (auto& f : chain_functions(m)) {
            const auto& F = f.field();
            std::vector<BoolFun> pieces{f};
            for (Elem b = 2; b < F.size(); ++b) pieces.push_back(seq_oracle::f1b(f, b, 0));
            for (Elem b = 2; b < F.size(); ++b) pieces.push_back(seq_oracle::f1b(f, b, 1));
            for (Elem b = 1; b < F.size(); ++b) pieces.push_back(scale_compose(f, b, 0));
            for (auto& g : pieces) {
                REQUIRE(g.at(0, 0) == 0);
                REQUIRE(g.at(0, 1) == 0);
                auto w = walsh(g);
                REQUIRE(w.cls == SpectrumClass::Bent);
                CHECK(seq_oracle::n_count(w, 0, 0) == np);
                CHECK(seq_oracle::n_count(w, 0, 1) == nm);
                // With g(0,0) = g(0,1) the nu = 1 spectrum sums to zero, so the
                // count is balanced rather than equal to the nu = 0 count.
                CHECK(seq_oracle::n_count(w, 1, 0) == half);
                CHECK(seq_oracle::n_count(w, 1, 1) == half);
                for (Elem b = 2; b < F.size(); ++b) {
                    CHECK(seq_oracle::t_count(w, F, b, 0, 0) == tp);
                    CHECK(seq_oracle::t_count(w, F, b, 0, 1) == tm);
                    CHECK(seq_oracle::t_count(w, F, b, 1, 0) == t1);
                    CHECK(seq_oracle::t_count(w, F, b, 1, 1) == t1);
                }
            }
        }
    }
}

TEST_CASE("closed-form totals") {
    for (unsigned m : {4u, 6u, 8u, 10u}) {
        const std::uint64_t q = std::uint64_t{1} << (m - 1);
        CHECK(table_quaternary(m).total == (q + 1) * (q + 1) * (q - 1));
        CHECK(table_binary(m).total == q * q * 2 * (q - 1));
    }
    for (unsigned n : {3u, 5u, 7u, 9u}) {
        const std::uint64_t q = std::uint64_t{1} << n;
        CHECK(table_semibent(n).total == (q + 1) * (q + 1) * (q - 1));
    }
}
