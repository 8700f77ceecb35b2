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

#ifndef CYCLICBENT_CONSTRUCT_HPP
#define CYCLICBENT_CONSTRUCT_HPP

#include "cyclicbent/boolfun.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyclicbent {

/// Chain parameters: 1 = e_0 | e_1 | ... | e_l = m-1 (strict), gamma_j in GF(2^e_j),
/// every prefix sum of gamma nonzero. gamma holds element indices of GF(2^(m-1)).
struct ChainSpec {
    unsigned m = 0;
    std::vector<unsigned> e;
    std::vector<gf2::Elem> gamma;
};

/// Throws std::invalid_argument naming the violated condition.
void validate(const ChainSpec& spec, const gf2::Field& field);

/// All divisor chains from 1 to m-1.
std::vector<std::vector<unsigned>> divisor_chains(unsigned m);
/// All admissible gamma tuples for the chain, lexicographic by element index.
std::vector<std::vector<gf2::Elem>> admissible_gammas(const gf2::Field& field, const std::vector<unsigned>& e);
/// Every admissible ChainSpec for m.
std::vector<ChainSpec> admissible_specs(const gf2::FieldPtr& field, unsigned m);

BoolFun kerdock_fn(unsigned m);
BoolFun kerdock_fn(const gf2::FieldPtr& field);
BoolFun chain_fn(const ChainSpec& spec);
BoolFun chain_fn(const ChainSpec& spec, const gf2::FieldPtr& field);

enum class CertKind { Bent, SemiBent };
enum class CertMode { Full, Reduced };
enum class CertFailure { None, NotBent, NotSemiBent, HypothesisViolated };

const char* to_string(CertKind k);
const char* to_string(CertMode m);
const char* to_string(CertFailure f);

struct Witness {
    gf2::Elem a = 0;
    gf2::Elem b = 0;
    unsigned eps = 0;
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// A failed certificate carries the first failing (a, b, eps) in the scan order.
/// In reduced mode, "f itself not bent" is reported as (1, 0, 0), a failing
/// f(x1,x2)+f(b x1,x2) as (1, b, 0), and a violated difference hypothesis as (1, 1, 1),
/// the pair whose sum f(x1,x2)+f(x1,x2+1) should have been affine.
struct CyclicCertificate {
    CertKind kind = CertKind::Bent;
    CertMode mode = CertMode::Full;
    std::uint64_t verified_pairs = 0;
    std::optional<Witness> witness;
    CertFailure failure = CertFailure::None;
    /// (lambda, nu) with f(x1,x2+1)+f(x1,x2) = tr(lambda x1)+nu, reduced bent mode only.
    std::optional<std::pair<gf2::Elem, unsigned>> difference;

    bool passed() const noexcept { return failure == CertFailure::None; }
};

struct CertifyOptions {
    /// Lift the default size caps (full: m <= 8 or n <= 7; reduced: m <= 16 or n <= 15).
    /// Exceeding a cap throws std::length_error.
    bool allow_large = false;
};

/// (lambda, nu) with f(x1,x2+1)+f(x1,x2) = tr(lambda x1)+nu, if any.
std::optional<std::pair<gf2::Elem, unsigned>> affine_difference(const BoolFun& f);

CyclicCertificate is_cyclic_bent_full(const BoolFun& f, const CertifyOptions& opt = {});
CyclicCertificate is_cyclic_bent_reduced(const BoolFun& f, const CertifyOptions& opt = {});
CyclicCertificate is_cyclic_semibent(const BoolFun& g, CertMode mode, const CertifyOptions& opt = {});

/// f(x1,x2) + f(0,x2).
BoolFun normalize_zero(const BoolFun& f);

/// {f(a x1, x2 + eps[a-1]) : a = 1 .. 2^(m-1)-1}. Does not re-certify f.
std::vector<BoolFun> bent_family(const BoolFun& f, const std::vector<std::uint8_t>& eps);
/// x1 -> f(x1, eps).
BoolFun derive_semibent(const BoolFun& f, unsigned eps);
/// {x1 -> f(a x1, eps[a-1]) : a = 1 .. 2^(m-1)-1}.
std::vector<BoolFun> semibent_family(const BoolFun& f, const std::vector<std::uint8_t>& eps);

}  // namespace cyclicbent

#endif
