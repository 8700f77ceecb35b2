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

#include "cyclicbent/codes.hpp"

#include "cyclicbent/construct.hpp"
#include "cyclicbent/parallel.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace cyclicbent {

namespace {

struct WordsHash {
    std::size_t words;
    std::size_t operator()(const std::uint64_t* p) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (std::size_t i = 0; i < words; ++i) h = (h ^ p[i]) * 0x100000001b3ULL;
        return h;
    }
};
struct WordsEq {
    std::size_t words;
    bool operator()(const std::uint64_t* a, const std::uint64_t* b) const { return std::equal(a, a + words, b); }
};
using WordSet = std::unordered_set<const std::uint64_t*, WordsHash, WordsEq>;

WordSet make_set(const NonlinearCode& c) {
    WordSet s(c.size() * 2, WordsHash{c.words()}, WordsEq{c.words()});
    for (std::size_t i = 0; i < c.size(); ++i) s.insert(c.codeword(i).data());
    return s;
}

void append_table(std::vector<std::uint64_t>& bits, std::size_t words, std::span<const std::uint8_t> t, unsigned flip) {
    const std::size_t base = bits.size();
    bits.resize(base + words, 0);
    for (std::size_t j = 0; j < t.size(); ++j)
        if (t[j] ^ flip) bits[base + j / 64] |= std::uint64_t{1} << (j % 64);
}

std::size_t words_for(std::size_t len) { return (len + 63) / 64; }

}  // namespace

NonlinearCode::NonlinearCode(CodeKind kind, unsigned field_degree, std::size_t length, std::vector<std::uint64_t> bits)
    : kind_(kind), field_degree_(field_degree), length_(length), words_(words_for(length)), bits_(std::move(bits)) {
    if (bits_.size() % words_) throw std::invalid_argument("codeword storage is not a whole number of words");
}

std::size_t NonlinearCode::weight(std::size_t i) const {
    std::size_t w = 0;
    for (auto x : codeword(i)) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

std::size_t NonlinearCode::index_f(gf2::Elem a, gf2::Elem lambda, unsigned u, unsigned v) const {
    const std::size_t q = std::size_t{1} << field_degree_;
    return ((a * q + lambda) * 2 + u) * 2 + v;
}

std::size_t NonlinearCode::index_g(gf2::Elem a, gf2::Elem lambda, unsigned u) const {
    const std::size_t q = std::size_t{1} << field_degree_;
    return (a * q + lambda) * 2 + u;
}

NonlinearCode build_code_f(const BoolFun& f) {
    if (f.domain() != Domain::FieldTimesBit) throw std::invalid_argument("C(f) needs a function on F x GF(2)");
    if (f.at(0, 0) || f.at(0, 1)) throw std::invalid_argument("C(f) needs f(0,0) = f(0,1) = 0");
    if (!is_cyclic_bent_reduced(f).passed()) throw std::invalid_argument("C(f) needs a cyclic bent function");
    const auto& F = f.field();
    const std::size_t q = F.size(), len = f.size(), words = words_for(len);
    std::vector<std::uint64_t> bits;
    bits.reserve(q * q * 4 * words);
    for (gf2::Elem a = 0; a < q; ++a) {
        const BoolFun fa = scale_compose(f, a, 0);
        for (gf2::Elem lam = 0; lam < q; ++lam) {
            const BoolFun lin = BoolFun::on_field_times_bit(f.field_ptr(), [&](gf2::Elem x1, unsigned) { return F.trace(F.mul(lam, x1)); });
            const BoolFun base = fa ^ lin;
            for (unsigned u = 0; u < 2; ++u) {
                const BoolFun w = u ? base ^ BoolFun::on_field_times_bit(f.field_ptr(), [](gf2::Elem, unsigned x2) { return x2; }) : base;
                for (unsigned v = 0; v < 2; ++v) append_table(bits, words, w.table(), v);
            }
        }
    }
    NonlinearCode c(CodeKind::FromBent, F.degree(), len, std::move(bits));
    if (!all_distinct(c)) throw std::logic_error("C(f) labels do not give distinct codewords");
    return c;
}

NonlinearCode build_code_g(const BoolFun& g) {
    if (g.domain() != Domain::PlainField) throw std::invalid_argument("C(g) needs a function on F");
    if (g[0]) throw std::invalid_argument("C(g) needs g(0) = 0");
    const auto mode = g.n_vars() <= 7 ? CertMode::Full : CertMode::Reduced;
    if (!is_cyclic_semibent(g, mode, {.allow_large = true}).passed())
        throw std::invalid_argument("C(g) needs a cyclic semi-bent function");
    const auto& F = g.field();
    const std::size_t q = F.size(), words = words_for(q);
    std::vector<std::uint64_t> bits;
    bits.reserve(q * q * 2 * words);
    for (gf2::Elem a = 0; a < q; ++a) {
        const BoolFun ga = scale_compose(g, a);
        for (gf2::Elem lam = 0; lam < q; ++lam) {
            const BoolFun w = ga ^ BoolFun::on_field(g.field_ptr(), [&](gf2::Elem x) { return F.trace(F.mul(lam, x)); });
            for (unsigned u = 0; u < 2; ++u) append_table(bits, words, w.table(), u);
        }
    }
    NonlinearCode c(CodeKind::FromSemiBent, F.degree(), q, std::move(bits));
    if (!all_distinct(c)) throw std::logic_error("C(g) labels do not give distinct codewords");
    return c;
}

std::size_t DistributionReport::min_distance() const {
    for (auto& [i, b] : distance)
        if (i > 0 && b.numerator() != 0) return i;
    return 0;
}

DistributionReport weight_distance_distributions(const NonlinearCode& code) {
    DistributionReport r;
    const std::size_t M = code.size(), W = code.words();
    for (std::size_t i = 0; i < M; ++i) ++r.weight[code.weight(i)];

    std::vector<std::uint64_t> hist(code.length() + 1, 0);
    std::mutex mu;
    parallel::for_chunks(M, [&](std::size_t b, std::size_t e) {
        std::vector<std::uint64_t> local(code.length() + 1, 0);
        for (std::size_t i = b; i < e; ++i) {
            const auto* x = code.codeword(i).data();
            for (std::size_t j = 0; j < M; ++j) {
                const auto* y = code.codeword(j).data();
                std::size_t d = 0;
                for (std::size_t k = 0; k < W; ++k) d += static_cast<std::size_t>(std::popcount(x[k] ^ y[k]));
                ++local[d];
            }
        }
        std::lock_guard lock(mu);
        for (std::size_t d = 0; d < local.size(); ++d) hist[d] += local[d];
    });
    for (std::size_t d = 0; d < hist.size(); ++d)
        if (hist[d]) r.distance[d] = Rational(static_cast<std::int64_t>(hist[d]), static_cast<std::int64_t>(M));
    return r;
}

bool all_distinct(const NonlinearCode& code) { return make_set(code).size() == code.size(); }

bool is_self_complementary(const NonlinearCode& code) {
    const auto set = make_set(code);
    std::vector<std::uint64_t> buf(code.words());
    const std::size_t tail = code.length() % 64;
    for (std::size_t i = 0; i < code.size(); ++i) {
        auto c = code.codeword(i);
        for (std::size_t k = 0; k < buf.size(); ++k) buf[k] = ~c[k];
        if (tail) buf.back() &= (std::uint64_t{1} << tail) - 1;
        if (!set.count(buf.data())) return false;
    }
    return true;
}

bool is_linear(const NonlinearCode& code) {
    const auto set = make_set(code);
    const std::size_t M = code.size(), W = code.words();
    auto bad = parallel::first_failure(M, [&](std::size_t i) {
        std::vector<std::uint64_t> buf(W);
        for (std::size_t j = i; j < M; ++j) {
            for (std::size_t k = 0; k < W; ++k) buf[k] = code.codeword(i)[k] ^ code.codeword(j)[k];
            if (!set.count(buf.data())) return true;
        }
        return false;
    });
    return bad == M;
}

std::map<std::size_t, std::uint64_t> expected_weights_f(unsigned m) {
    if (m < 4 || m % 2) throw std::invalid_argument("C(f) needs even m >= 4");
    const std::uint64_t v = std::uint64_t{1} << m, h = std::uint64_t{1} << ((m - 2) / 2);
    return {{0, 1}, {v, 1}, {v / 2, 2 * v - 2}, {v / 2 - h, v * (v / 2 - 1)}, {v / 2 + h, v * (v / 2 - 1)}};
}

std::map<std::size_t, std::uint64_t> expected_weights_g(unsigned n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("C(g) needs odd n >= 3");
    const std::uint64_t v = std::uint64_t{1} << n, h = std::uint64_t{1} << ((n - 1) / 2);
    const std::uint64_t side = v * v / 2 - v / 2;
    return {{0, 1}, {v, 1}, {v / 2, v * v + v - 2}, {v / 2 - h, side}, {v / 2 + h, side}};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    __extension__ using u128 = unsigned __int128;
    u128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::uint64_t>(r);
}

std::vector<std::vector<std::size_t>> support_blocks(const NonlinearCode& code, std::size_t k) {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code.weight(i) != k) continue;
        std::vector<std::size_t> s;
        s.reserve(k);
        for (std::size_t p = 0; p < code.length(); ++p)
            if (code.bit(i, p)) s.push_back(p);
        blocks.push_back(std::move(s));
    }
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    return blocks;
}

namespace {

// Colexicographic rank of a sorted subset.
std::uint64_t colex_rank(const std::vector<std::size_t>& s, const std::vector<std::vector<std::uint64_t>>& C) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += C[s[i]][i + 1];
    return r;
}

std::vector<std::size_t> colex_unrank(std::uint64_t r, std::size_t v, unsigned t, const std::vector<std::vector<std::uint64_t>>& C) {
    std::vector<std::size_t> s(t);
    std::size_t hi = v;
    for (unsigned i = t; i-- > 0;) {
        std::size_t x = i;
        while (x + 1 < hi && C[x + 1][i + 1] <= r) ++x;
        s[i] = x;
        r -= C[x][i + 1];
        hi = x;
    }
    return s;
}

}  // namespace

DesignResult check_design(std::size_t v, std::size_t k, unsigned t, const std::vector<std::vector<std::size_t>>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("design check needs a nonempty block set");
    if (t == 0 || t > k) throw std::invalid_argument("design strength must satisfy 1 <= t <= k");
    DesignResult res{t, v, k, blocks.size(), std::nullopt, {}, 0, 0};
    std::vector<std::vector<std::uint64_t>> C(v + 1, std::vector<std::uint64_t>(t + 1));
    for (std::size_t n = 0; n <= v; ++n)
        for (unsigned j = 0; j <= t; ++j) C[n][j] = binomial(n, j);
    const std::uint64_t total = C[v][t];

    std::vector<std::uint32_t> cover(total, 0);
    std::mutex mu;
    parallel::for_chunks(blocks.size(), [&](std::size_t b, std::size_t e) {
        std::vector<std::uint32_t> local(total, 0);
        std::vector<std::size_t> idx(t), sub(t);
        for (std::size_t bi = b; bi < e; ++bi) {
            const auto& blk = blocks[bi];
            for (unsigned i = 0; i < t; ++i) idx[i] = i;
            while (true) {
                for (unsigned i = 0; i < t; ++i) sub[i] = blk[idx[i]];
                ++local[colex_rank(sub, C)];
                int i = static_cast<int>(t) - 1;
                while (i >= 0 && idx[i] == k - t + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (unsigned j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        std::lock_guard lock(mu);
        for (std::uint64_t r = 0; r < total; ++r) cover[r] += local[r];
    });
    const std::uint64_t ref = cover[0];
    for (std::uint64_t r = 0; r < total; ++r)
        if (cover[r] != ref) {
            res.witness = colex_unrank(r, v, t, C);
            res.witness_coverage = cover[r];
            res.reference_coverage = ref;
            return res;
        }
    res.lambda = ref;
    return res;
}

DesignResult support_design(const NonlinearCode& code, std::size_t k, unsigned t) {
    return check_design(code.length(), k, t, support_blocks(code, k));
}

}  // namespace cyclicbent
