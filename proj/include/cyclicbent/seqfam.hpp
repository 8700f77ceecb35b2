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

#ifndef CYCLICBENT_SEQFAM_HPP
#define CYCLICBENT_SEQFAM_HPP

#include "cyclicbent/boolfun.hpp"
#include "cyclicbent/exact.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cyclicbent {

enum class SeqAlphabet { Quaternary, Binary };

/// lambda in F or infinity; nu only for the interleaved binary family.
struct SeqLabel {
    bool infinity = false;
    gf2::Elem lambda = 0;
    unsigned nu = 0;
    friend bool operator==(const SeqLabel&, const SeqLabel&) = default;
};

std::string to_string(const SeqLabel& l);

struct SequenceFamily {
    SeqAlphabet alphabet = SeqAlphabet::Binary;
    std::size_t period = 0;
    std::vector<SeqLabel> labels;
    std::vector<std::vector<GaussInt>> members;
};

/// Histogram of correlation values over all (member, member, shift) triples.
struct CorrDist {
    std::map<GaussInt, std::uint64_t> counts;
    std::uint64_t total = 0;
    friend bool operator==(const CorrDist&, const CorrDist&) = default;
};

/// s_lambda(t) = A(1, beta^t) (-1)^tr(lambda beta^t) for lambda in index order, then
/// s_inf(t) = (-1)^tr(beta^t). f must be cyclic bent with f(0,0) = f(0,1) = 0.
SequenceFamily quaternary_family(const BoolFun& f);

/// Interleaved binary sequences of period 2(2^(m-1)-1): even positions use
/// f(beta^t0, 0), odd positions f(beta^(2^(m-2)) beta^t0, 1) with an extra nu.
/// Members (lambda, nu), tr(lambda) = 0, ordered by lambda + nu 2^(m-1).
/// Requires f cyclic bent, normalized, and f(x1,0)+f(x1,1) = tr(x1).
SequenceFamily binary_family(const BoolFun& f);

/// s_lambda(t) = (-1)^(g(beta^t) + tr(lambda beta^t)) plus s_inf. g cyclic semi-bent, g(0) = 0.
SequenceFamily semibent_sequence_family(const BoolFun& g);

/// sum_t s(t + tau) conj(s2(t)), indices mod the period.
GaussInt correlate(std::span<const GaussInt> s, std::span<const GaussInt> s2, std::size_t tau);

CorrDist full_distribution(const SequenceFamily& fam);
/// Largest |R|^2 over all triples except (same member, tau = 0).
std::int64_t r_max_sq(const SequenceFamily& fam);

/// Closed-form distributions for the three families.
CorrDist table_quaternary(unsigned m);
CorrDist table_binary(unsigned m);
CorrDist table_semibent(unsigned n);

}  // namespace cyclicbent

#endif
