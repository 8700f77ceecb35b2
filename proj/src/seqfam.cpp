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

#include "cyclicbent/seqfam.hpp"

#include "cyclicbent/construct.hpp"
#include "cyclicbent/parallel.hpp"

#include <stdexcept>

namespace cyclicbent {

std::string to_string(const SeqLabel& l) {
    if (l.infinity) return "inf";
    return std::to_string(l.lambda) + (l.nu ? ",1" : "");
}

namespace {

void require_normalized_cyclic_bent(const BoolFun& f) {
    if (f.domain() != Domain::FieldTimesBit || f.n_vars() % 2 || f.n_vars() < 4)
        throw std::invalid_argument("needs a function on F x GF(2) with m even, m >= 4");
    if (f.at(0, 0) || f.at(0, 1)) throw std::invalid_argument("f(0,0) and f(0,1) must vanish; apply normalize_zero");
    if (!is_cyclic_bent_reduced(f).passed()) throw std::invalid_argument("function is not cyclic bent");
}

std::int64_t sign(unsigned bit) { return bit & 1 ? -1 : 1; }

std::int64_t pow2(unsigned e) { return std::int64_t{1} << e; }

}  // namespace

SequenceFamily quaternary_family(const BoolFun& f) {
    require_normalized_cyclic_bent(f);
    const auto& F = f.field();
    const std::size_t q = F.size(), K = q - 1;
    SequenceFamily fam;
    fam.alphabet = SeqAlphabet::Quaternary;
    fam.period = K;
    std::vector<GaussInt> A(K);
    std::vector<gf2::Elem> pts(K);
    for (std::size_t t = 0; t < K; ++t) {
        pts[t] = F.gen_pow(static_cast<std::int64_t>(t));
        const std::int64_t s0 = sign(f.at(pts[t], 0)), s1 = sign(f.at(pts[t], 1));
        A[t] = GaussInt((s0 + s1) / 2, (s0 - s1) / 2);
    }
    for (gf2::Elem lambda = 0; lambda < q; ++lambda) {
        std::vector<GaussInt> s(K);
        for (std::size_t t = 0; t < K; ++t) s[t] = F.abs_trace(F.mul(lambda, pts[t])) ? -A[t] : A[t];
        fam.labels.push_back({false, lambda, 0});
        fam.members.push_back(std::move(s));
    }
    std::vector<GaussInt> inf(K);
    for (std::size_t t = 0; t < K; ++t) inf[t] = sign(F.abs_trace(pts[t]));
    fam.labels.push_back({true, 0, 0});
    fam.members.push_back(std::move(inf));
    return fam;
}

SequenceFamily binary_family(const BoolFun& f) {
    require_normalized_cyclic_bent(f);
    const auto& F = f.field();
    const std::size_t q = F.size(), K0 = q - 1;
    for (gf2::Elem x = 0; x < q; ++x)
        if ((f.at(x, 0) ^ f.at(x, 1)) != F.abs_trace(x))
            throw std::invalid_argument("f(x1,0)+f(x1,1) must equal tr(x1)");
    const unsigned m = f.n_vars();
    const gf2::Elem shift = F.gen_pow(pow2(m - 2));
    SequenceFamily fam;
    fam.alphabet = SeqAlphabet::Binary;
    fam.period = 2 * K0;
    for (unsigned nu = 0; nu < 2; ++nu)
        for (gf2::Elem lambda = 0; lambda < q; ++lambda) {
            if (F.abs_trace(lambda)) continue;
            std::vector<GaussInt> s(2 * K0);
            for (std::size_t t0 = 0; t0 < K0; ++t0) {
                const gf2::Elem b = F.gen_pow(static_cast<std::int64_t>(t0));
                const gf2::Elem sb = F.mul(shift, b);
                s[2 * t0] = sign(f.at(b, 0) ^ F.abs_trace(F.mul(lambda, b)));
                s[2 * t0 + 1] = sign(f.at(sb, 1) ^ F.abs_trace(F.mul(lambda, sb)) ^ nu);
            }
            fam.labels.push_back({false, lambda, nu});
            fam.members.push_back(std::move(s));
        }
    return fam;
}

SequenceFamily semibent_sequence_family(const BoolFun& g) {
    if (g.domain() != Domain::PlainField || g.n_vars() % 2 == 0)
        throw std::invalid_argument("needs a function on GF(2^n) with n odd");
    if (g[0]) throw std::invalid_argument("g(0) must vanish");
    if (!is_cyclic_semibent(g, CertMode::Reduced).passed()) throw std::invalid_argument("function is not cyclic semi-bent");
    const auto& F = g.field();
    const std::size_t q = F.size(), K = q - 1;
    SequenceFamily fam;
    fam.alphabet = SeqAlphabet::Binary;
    fam.period = K;
    for (gf2::Elem lambda = 0; lambda < q; ++lambda) {
        std::vector<GaussInt> s(K);
        for (std::size_t t = 0; t < K; ++t) {
            const gf2::Elem b = F.gen_pow(static_cast<std::int64_t>(t));
            s[t] = sign(g[b] ^ F.abs_trace(F.mul(lambda, b)));
        }
        fam.labels.push_back({false, lambda, 0});
        fam.members.push_back(std::move(s));
    }
    std::vector<GaussInt> inf(K);
    for (std::size_t t = 0; t < K; ++t) inf[t] = sign(F.abs_trace(F.gen_pow(static_cast<std::int64_t>(t))));
    fam.labels.push_back({true, 0, 0});
    fam.members.push_back(std::move(inf));
    return fam;
}

GaussInt correlate(std::span<const GaussInt> s, std::span<const GaussInt> s2, std::size_t tau) {
    if (s.size() != s2.size()) throw std::invalid_argument("sequences of different periods");
    const std::size_t K = s.size();
    GaussInt acc;
    for (std::size_t t = 0; t < K; ++t) acc += s[(t + tau) % K] * s2[t].conj();
    return acc;
}

namespace {

template <class Visit>
void for_all_triples(const SequenceFamily& fam, std::size_t workers, Visit&& visit) {
    const std::size_t n = fam.members.size();
    parallel::for_chunks(workers, [&](std::size_t wb, std::size_t we) {
        for (std::size_t w = wb; w < we; ++w)
            for (std::size_t p = w; p < n * n; p += workers) {
                const std::size_t i = p / n, j = p % n;
                for (std::size_t tau = 0; tau < fam.period; ++tau)
                    visit(w, i, j, tau, correlate(fam.members[i], fam.members[j], tau));
            }
    });
}

}  // namespace

CorrDist full_distribution(const SequenceFamily& fam) {
    const std::size_t workers = std::max(1u, parallel::thread_count());
    std::vector<std::map<GaussInt, std::uint64_t>> local(workers);
    for_all_triples(fam, workers, [&](std::size_t w, std::size_t, std::size_t, std::size_t, GaussInt r) { ++local[w][r]; });
    CorrDist d;
    for (auto& l : local)
        for (auto& [v, c] : l) {
            d.counts[v] += c;
            d.total += c;
        }
    return d;
}

std::int64_t r_max_sq(const SequenceFamily& fam) {
    const std::size_t workers = std::max(1u, parallel::thread_count());
    std::vector<std::int64_t> best(workers, 0);
    for_all_triples(fam, workers, [&](std::size_t w, std::size_t i, std::size_t j, std::size_t tau, GaussInt r) {
        if (i == j && tau == 0) return;
        best[w] = std::max(best[w], r.norm());
    });
    return *std::max_element(best.begin(), best.end());
}

CorrDist table_quaternary(unsigned m) {
    if (m < 4 || m % 2) throw std::invalid_argument("table needs even m >= 4");
    CorrDist d;
    const std::int64_t h = pow2((m - 2) / 2);
    const std::uint64_t base = static_cast<std::uint64_t>(pow2(2 * m - 2) - 2);
    const std::uint64_t plus = static_cast<std::uint64_t>(pow2(m - 3) + pow2((m - 4) / 2));
    const std::uint64_t minus = static_cast<std::uint64_t>(pow2(m - 3) - pow2((m - 4) / 2));
    d.counts[GaussInt(-1 + pow2(m - 1))] += static_cast<std::uint64_t>(pow2(m - 1) + 1);
    d.counts[GaussInt(-1)] += base;
    d.counts[GaussInt(-1 + h, h)] += base * plus;
    d.counts[GaussInt(-1 + h, -h)] += base * plus;
    d.counts[GaussInt(-1 - h, h)] += base * minus;
    d.counts[GaussInt(-1 - h, -h)] += base * minus;
    for (auto& [v, c] : d.counts) d.total += c;
    return d;
}

CorrDist table_binary(unsigned m) {
    if (m < 4 || m % 2) throw std::invalid_argument("table needs even m >= 4");
    CorrDist d;
    const std::int64_t r = pow2(m / 2);
    const std::int64_t k = pow2(m - 1) - 2;
    const std::int64_t plus = pow2(m - 3) + pow2((m - 4) / 2), minus = pow2(m - 3) - pow2((m - 4) / 2);
    auto add = [&](std::int64_t v, std::int64_t c) { d.counts[GaussInt(v)] += static_cast<std::uint64_t>(c); };
    add(2 * (pow2(m - 1) - 1), pow2(m - 1));
    add(-2, pow2(m - 1) * (3 * pow2(m - 3) - 1));
    add(0, pow2(2 * m - 2));
    add(2, pow2(2 * m - 4));
    add(r - 2, 3 * pow2(m - 2) * k * plus);
    add(r, pow2(2 * m - 3) * k);
    add(r + 2, pow2(m - 2) * k * minus);
    add(-r - 2, 3 * pow2(m - 2) * k * minus);
    add(-r, pow2(2 * m - 3) * k);
    add(-r + 2, pow2(m - 2) * k * plus);
    for (auto& [v, c] : d.counts) d.total += c;
    return d;
}

CorrDist table_semibent(unsigned n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("table needs odd n >= 3");
    CorrDist d;
    const std::int64_t r = pow2((n + 1) / 2);
    const std::int64_t base = pow2(2 * n) - 2;
    auto add = [&](std::int64_t v, std::int64_t c) { d.counts[GaussInt(v)] += static_cast<std::uint64_t>(c); };
    add(pow2(n) - 1, pow2(n) + 1);
    add(-1, pow2(n + 1) * (pow2(n) - 1) + (pow2(n) - 2) * (pow2(2 * n - 1) + 1));
    add(r - 1, base * (pow2(n - 2) + pow2((n - 3) / 2)));
    add(-r - 1, base * (pow2(n - 2) - pow2((n - 3) / 2)));
    for (auto& [v, c] : d.counts) d.total += c;
    return d;
}

}  // namespace cyclicbent
