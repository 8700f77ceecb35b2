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

#include "cyclicbent/codebook.hpp"

#include "cyclicbent/construct.hpp"
#include "cyclicbent/parallel.hpp"

#include <bit>
#include <set>
#include <stdexcept>
#include <tuple>

namespace cyclicbent {

__extension__ using i128 = __int128;

std::string to_string(const BasisLabel& b) { return b.infinity ? "inf" : std::to_string(b.a); }

GaussInt inner(const Codebook& cb, std::size_t i, std::size_t j) {
    GaussInt s;
    auto ri = cb.row(i), rj = cb.row(j);
    for (std::size_t k = 0; k < cb.dim; ++k) s += ri[k] * rj[k].conj();
    return s;
}

std::size_t count_alphabet(const Codebook& cb) {
    auto sgn = [](std::int64_t v) { return (v > 0) - (v < 0); };
    std::set<std::tuple<int, Rational, int, Rational>> seen;
    for (std::size_t r = 0; r < cb.n_rows; ++r) {
        const auto n = cb.norm_sq[r];
        for (auto z : cb.row(r)) seen.emplace(sgn(z.re), Rational(z.re * z.re, n), sgn(z.im), Rational(z.im * z.im, n));
    }
    return seen.size();
}

Rational levenshtein_real_sq(std::int64_t n, std::int64_t k) {
    if (k < 1 || 2 * n <= k * (k + 1)) throw std::domain_error("real Levenshtein bound needs N > K(K+1)/2");
    return Rational(3 * n - k * k - 2 * k, (n - k) * (k + 2));
}

Rational levenshtein_complex_sq(std::int64_t n, std::int64_t k) {
    if (k < 1 || n <= k * k) throw std::domain_error("complex Levenshtein bound needs N > K^2");
    return Rational(2 * n - k * k - k, (n - k) * (k + 1));
}

Rational imax_sq(const Codebook& cb) {
    if (cb.n_rows < 2) throw std::invalid_argument("imax needs at least two rows");
    const std::size_t workers = std::max<std::size_t>(1, parallel::thread_count());
    std::vector<std::pair<std::int64_t, std::int64_t>> best(workers, {0, 1});
    // Rows are interleaved over workers so the triangular work stays balanced.
    parallel::for_chunks(workers, [&](std::size_t wb, std::size_t we) {
        for (std::size_t w = wb; w < we; ++w) {
            auto& [bn, bd] = best[w];
            for (std::size_t i = w; i < cb.n_rows; i += workers)
                for (std::size_t j = i + 1; j < cb.n_rows; ++j) {
                    const std::int64_t num = inner(cb, i, j).norm(), den = cb.norm_sq[i] * cb.norm_sq[j];
                    if (static_cast<i128>(num) * bd > static_cast<i128>(bn) * den) {
                        bn = num;
                        bd = den;
                    }
                }
        }
    });
    Rational out(0);
    for (auto [n, d] : best) out = std::max(out, Rational(n, d));
    return out;
}

namespace {

unsigned parity(std::uint32_t v) { return static_cast<unsigned>(std::popcount(v) & 1); }

void require_cyclic_bent(const BoolFun& f) {
    if (f.domain() != Domain::FieldTimesBit || f.n_vars() % 2)
        throw std::invalid_argument("needs a function on F x GF(2) with m even");
    if (!is_cyclic_bent_reduced(f).passed()) throw std::invalid_argument("function is not cyclic bent");
}

void require_cyclic_semibent(const BoolFun& g) {
    if (g.domain() != Domain::PlainField || g.n_vars() % 2 == 0)
        throw std::invalid_argument("needs a function on GF(2^n) with n odd");
    if (!is_cyclic_semibent(g, CertMode::Reduced).passed()) throw std::invalid_argument("function is not cyclic semi-bent");
}

void append_standard_basis(Codebook& cb) {
    cb.bases.push_back({true, 0});
    for (std::size_t r = 0; r < cb.dim; ++r) {
        for (std::size_t k = 0; k < cb.dim; ++k) cb.entries.emplace_back(k == r ? 1 : 0);
        cb.norm_sq.push_back(1);
    }
}

// Basis of sign vectors (-1)^(h(x) + <mu, x>) over the dim positions; h given as a 0/1 table,
// inner product taken through the trace mask of the field on the low bits.
void append_character_basis(Codebook& cb, const gf2::Field& F, BasisLabel label, const std::vector<std::uint8_t>& h) {
    cb.bases.push_back(label);
    const std::size_t q = F.size(), d = F.degree();
    for (std::size_t mu = 0; mu < cb.dim; ++mu) {
        const std::uint32_t mask = F.trace_mask(static_cast<gf2::Elem>(mu & (q - 1))) |
                                   static_cast<std::uint32_t>((mu >> d) << d);
        for (std::size_t x = 0; x < cb.dim; ++x)
            cb.entries.emplace_back((h[x] ^ parity(mask & static_cast<std::uint32_t>(x))) ? -1 : 1);
        cb.norm_sq.push_back(static_cast<std::int64_t>(cb.dim));
    }
}

void finish(Codebook& cb) {
    cb.n_rows = cb.norm_sq.size();
    cb.alphabet_size = count_alphabet(cb);
}

}  // namespace

Codebook build_real_codebook(const BoolFun& f, const std::vector<std::uint8_t>& eps) {
    require_cyclic_bent(f);
    const auto& F = f.field();
    if (eps.size() != F.size() - 1) throw std::invalid_argument("eps needs one bit per nonzero field element");
    Codebook cb;
    cb.dim = f.size();
    append_standard_basis(cb);
    append_character_basis(cb, F, {false, 0}, std::vector<std::uint8_t>(cb.dim, 0));
    for (gf2::Elem a = 1; a < F.size(); ++a) {
        const BoolFun fa = scale_compose(f, a, eps[a - 1] & 1);
        append_character_basis(cb, F, {false, a}, {fa.table().begin(), fa.table().end()});
    }
    finish(cb);
    return cb;
}

Codebook build_semibent_codebook(const BoolFun& g) {
    require_cyclic_semibent(g);
    const auto& F = g.field();
    Codebook cb;
    cb.dim = g.size();
    append_standard_basis(cb);
    append_character_basis(cb, F, {false, 0}, std::vector<std::uint8_t>(cb.dim, 0));
    for (gf2::Elem a = 1; a < F.size(); ++a) {
        const BoolFun ga = scale_compose(g, a);
        append_character_basis(cb, F, {false, a}, {ga.table().begin(), ga.table().end()});
    }
    finish(cb);
    return cb;
}

Codebook build_semibent_codebook_from_bent(const BoolFun& f, const std::vector<std::uint8_t>& eps) {
    require_cyclic_bent(f);
    const auto& F = f.field();
    if (eps.size() != F.size() - 1) throw std::invalid_argument("eps needs one bit per nonzero field element");
    Codebook cb;
    cb.dim = F.size();
    append_standard_basis(cb);
    append_character_basis(cb, F, {false, 0}, std::vector<std::uint8_t>(cb.dim, 0));
    const auto fam = semibent_family(f, eps);
    for (gf2::Elem a = 1; a < F.size(); ++a)
        append_character_basis(cb, F, {false, a}, {fam[a - 1].table().begin(), fam[a - 1].table().end()});
    finish(cb);
    return cb;
}

MubSet build_mub(const BoolFun& f) {
    require_cyclic_bent(f);
    const auto& F = f.field();
    const std::size_t q = F.size();
    MubSet s;
    s.dim = q;
    std::vector<GaussInt> id(q * q);
    for (std::size_t i = 0; i < q; ++i) id[i * q + i] = 1;
    s.labels.push_back({true, 0});
    s.bases.push_back(std::move(id));
    s.norm_sq.push_back(1);
    for (gf2::Elem a = 0; a < q; ++a) {
        std::vector<GaussInt> A(q);
        for (gf2::Elem x = 0; x < q; ++x) {
            const gf2::Elem ax = F.mul(a, x);
            const std::int64_t s0 = f.at(ax, 0) ? -1 : 1, s1 = f.at(ax, 1) ? -1 : 1;
            A[x] = GaussInt((s0 + s1) / 2, (s0 - s1) / 2);
        }
        std::vector<GaussInt> block(q * q);
        for (gf2::Elem lambda = 0; lambda < q; ++lambda) {
            const auto mask = F.trace_mask(lambda);
            for (gf2::Elem x = 0; x < q; ++x) block[lambda * q + x] = parity(mask & x) ? -A[x] : A[x];
        }
        s.labels.push_back({false, a});
        s.bases.push_back(std::move(block));
        s.norm_sq.push_back(static_cast<std::int64_t>(q));
    }
    return s;
}

MubReport verify_mub(const MubSet& s) {
    MubReport rep;
    const std::size_t d = s.dim, nb = s.bases.size();
    auto dot = [d](const GaussInt* u, const GaussInt* v) {
        GaussInt acc;
        for (std::size_t k = 0; k < d; ++k) acc += u[k] * v[k].conj();
        return acc;
    };
    for (std::size_t b1 = 0; b1 < nb; ++b1)
        for (std::size_t b2 = b1; b2 < nb; ++b2)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    const GaussInt z = dot(&s.bases[b1][i * d], &s.bases[b2][j * d]);
                    ++rep.vector_pairs;
                    const std::int64_t n1 = s.norm_sq[b1], n2 = s.norm_sq[b2];
                    if (b1 == b2) {
                        const GaussInt want = i == j ? GaussInt(n1) : GaussInt(0);
                        if (z != want && rep.orthonormal) {
                            rep.orthonormal = false;
                            rep.first_violation = "basis " + to_string(s.labels[b1]) + " vectors " + std::to_string(i) +
                                                  "," + std::to_string(j) + " inner " + to_string(z);
                        }
                    } else if (z.norm() * static_cast<std::int64_t>(d) != n1 * n2 && rep.unbiased) {
                        // |<u,v>|^2 / (n1 n2) must equal 1/d.
                        rep.unbiased = false;
                        rep.first_violation = "bases " + to_string(s.labels[b1]) + "," + to_string(s.labels[b2]) +
                                              " vectors " + std::to_string(i) + "," + std::to_string(j) + " inner " +
                                              to_string(z);
                    }
                }
    return rep;
}

Codebook mub_to_codebook(const MubSet& s) {
    Codebook cb;
    cb.dim = s.dim;
    for (std::size_t b = 0; b < s.bases.size(); ++b) {
        cb.bases.push_back(s.labels[b]);
        cb.entries.insert(cb.entries.end(), s.bases[b].begin(), s.bases[b].end());
        for (std::size_t i = 0; i < s.dim; ++i) cb.norm_sq.push_back(s.norm_sq[b]);
    }
    finish(cb);
    return cb;
}

std::pair<WalshSpectrum, WalshSpectrum> mub_pair_spectra(const BoolFun& f, gf2::Elem a, gf2::Elem a2) {
    const BoolFun fa = scale_compose(f, a, 0);
    return {walsh(fa ^ scale_compose(f, a2, 0)), walsh(fa ^ scale_compose(f, a2, 1))};
}

GaussInt mub_inner_via_walsh(const std::pair<WalshSpectrum, WalshSpectrum>& sp, gf2::Elem lambda, gf2::Elem lambda2) {
    const std::int64_t w0 = sp.first.at(lambda ^ lambda2, 0), w1 = sp.second.at(lambda ^ lambda2, 1);
    if ((w0 | w1) & 1) throw std::logic_error("odd Walsh value in a MUB inner product");
    return {w0 / 2, w1 / 2};
}

WalshSpectrum real_pair_spectrum(const BoolFun& f, const std::vector<std::uint8_t>& eps, gf2::Elem a, gf2::Elem b) {
    const auto& F = f.field();
    if (eps.size() != F.size() - 1) throw std::invalid_argument("eps needs one bit per nonzero field element");
    auto piece = [&](gf2::Elem c) {
        if (c == 0) return BoolFun::on_field_times_bit(f.field_ptr(), [](gf2::Elem, unsigned) { return 0; });
        return scale_compose(f, c, eps[c - 1] & 1);
    };
    return walsh(piece(a) ^ piece(b));
}

}  // namespace cyclicbent
