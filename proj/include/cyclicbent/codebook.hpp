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

#ifndef CYCLICBENT_CODEBOOK_HPP
#define CYCLICBENT_CODEBOOK_HPP

#include "cyclicbent/boolfun.hpp"
#include "cyclicbent/exact.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cyclicbent {

/// Identifies one basis of a codebook or MUB set: the standard basis, or the
/// basis attached to field element a. In real codebooks B_0 is the pure
/// character basis.
struct BasisLabel {
    bool infinity = false;
    gf2::Elem a = 0;
    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

std::string to_string(const BasisLabel& b);

/// N unit vectors in C^K stored unnormalized. Row r belongs to basis r / K.
struct Codebook {
    std::size_t n_rows = 0;
    std::size_t dim = 0;
    std::vector<GaussInt> entries;
    std::vector<std::int64_t> norm_sq;
    std::vector<BasisLabel> bases;
    std::size_t alphabet_size = 0;

    std::span<const GaussInt> row(std::size_t i) const { return {entries.data() + i * dim, dim}; }
};

/// sum_k row_i[k] * conj(row_j[k]), unnormalized.
GaussInt inner(const Codebook& cb, std::size_t i, std::size_t j);

/// Distinct normalized entry values across all rows.
std::size_t count_alphabet(const Codebook& cb);

/// Squared bounds. Throw std::domain_error when N is too small for the bound to apply.
Rational levenshtein_real_sq(std::int64_t n, std::int64_t k);
Rational levenshtein_complex_sq(std::int64_t n, std::int64_t k);

/// max over i < j of |<c_i, c_j>|^2 / (|c_i|^2 |c_j|^2).
Rational imax_sq(const Codebook& cb);

/// Rows (-1)^(f(a x1, x2 + eps[a-1]) + tr(lambda x1) + nu x2); B_inf, B_0, then B_a by index.
/// Throws std::invalid_argument unless f certifies as cyclic bent.
Codebook build_real_codebook(const BoolFun& f, const std::vector<std::uint8_t>& eps);

/// Rows (-1)^(g(a x) + tr(lambda x)); g must certify as cyclic semi-bent.
Codebook build_semibent_codebook(const BoolFun& g);
/// Rows (-1)^(f(a x1, eps[a-1]) + tr(lambda x1)) from a cyclic bent f.
Codebook build_semibent_codebook_from_bent(const BoolFun& f, const std::vector<std::uint8_t>& eps);

/// Complete set of 2^(m-1)+1 mutually unbiased bases of C^(2^(m-1)).
/// Entry x of v_(a,lambda) is A(a,x) (-1)^tr(lambda x) with
/// A(a,x) = ((s0+s1) + i(s0-s1))/2, s_e = (-1)^f(a x, e).
struct MubSet {
    std::size_t dim = 0;
    std::vector<BasisLabel> labels;
    /// One dim x dim row-major block per basis.
    std::vector<std::vector<GaussInt>> bases;
    std::vector<std::int64_t> norm_sq;
};

MubSet build_mub(const BoolFun& f);

struct MubReport {
    bool orthonormal = true;
    bool unbiased = true;
    std::size_t vector_pairs = 0;
    std::string first_violation;
    bool ok() const { return orthonormal && unbiased; }
};

/// Exhaustive exact check of orthonormality and pairwise unbiasedness.
MubReport verify_mub(const MubSet& mubs);

Codebook mub_to_codebook(const MubSet& mubs);

/// Spectra of f(a x1, x2) + f(a' x1, x2) and f(a x1, x2) + f(a' x1, x2 + 1).
std::pair<WalshSpectrum, WalshSpectrum> mub_pair_spectra(const BoolFun& f, gf2::Elem a, gf2::Elem a2);
/// <v_(a,lambda), v_(a',lambda2)> unnormalized, as (W0(lambda+lambda2, 0) + i W1(lambda+lambda2, 1)) / 2.
GaussInt mub_inner_via_walsh(const std::pair<WalshSpectrum, WalshSpectrum>& spectra, gf2::Elem lambda,
                             gf2::Elem lambda2);

/// Spectrum of the sum of the two basis-defining functions of a real codebook;
/// label a = 0 stands for B_0. Inner product of rows (lambda,nu) and (lambda2,nu2)
/// is the spectrum at (lambda + lambda2, nu + nu2).
WalshSpectrum real_pair_spectrum(const BoolFun& f, const std::vector<std::uint8_t>& eps, gf2::Elem a, gf2::Elem b);

}  // namespace cyclicbent

#endif
