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

#ifndef CYCLICBENT_CODES_HPP
#define CYCLICBENT_CODES_HPP

#include "cyclicbent/boolfun.hpp"
#include "cyclicbent/exact.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace cyclicbent {

enum class CodeKind { FromBent, FromSemiBent };

/// Codeword bit j is the value at BoolFun table index j.
/// Label order: C(f) index = ((a * q + lambda) * 2 + u) * 2 + v, C(g) index = (a * q + lambda) * 2 + u.
class NonlinearCode {
public:
    NonlinearCode(CodeKind kind, unsigned field_degree, std::size_t length, std::vector<std::uint64_t> bits);

    CodeKind kind() const { return kind_; }
    unsigned field_degree() const { return field_degree_; }
    std::size_t length() const { return length_; }
    std::size_t words() const { return words_; }
    std::size_t size() const { return bits_.size() / words_; }
    std::span<const std::uint64_t> codeword(std::size_t i) const { return {bits_.data() + i * words_, words_}; }
    bool bit(std::size_t i, std::size_t pos) const { return (bits_[i * words_ + pos / 64] >> (pos % 64)) & 1; }
    std::size_t weight(std::size_t i) const;

    std::size_t index_f(gf2::Elem a, gf2::Elem lambda, unsigned u, unsigned v) const;
    std::size_t index_g(gf2::Elem a, gf2::Elem lambda, unsigned u) const;

private:
    CodeKind kind_;
    unsigned field_degree_;
    std::size_t length_, words_;
    std::vector<std::uint64_t> bits_;
};

/// f must be cyclic bent with f(0,0) = f(0,1) = 0.
NonlinearCode build_code_f(const BoolFun& f);
/// g must be cyclic semi-bent with g(0) = 0.
NonlinearCode build_code_g(const BoolFun& g);

struct DistributionReport {
    std::map<std::size_t, std::uint64_t> weight;
    std::map<std::size_t, Rational> distance;
    std::size_t min_distance() const;
};

DistributionReport weight_distance_distributions(const NonlinearCode& code);
bool all_distinct(const NonlinearCode& code);
bool is_self_complementary(const NonlinearCode& code);
bool is_linear(const NonlinearCode& code);

/// Weight distribution the construction predicts for C(f) (m even) and C(g) (n odd).
std::map<std::size_t, std::uint64_t> expected_weights_f(unsigned m);
std::map<std::size_t, std::uint64_t> expected_weights_g(unsigned n);

struct DesignResult {
    unsigned t = 0;
    std::size_t v = 0, k = 0, b = 0;
    std::optional<std::uint64_t> lambda;
    /// On failure: a t-subset whose coverage differs from the first one.
    std::vector<std::size_t> witness;
    std::uint64_t witness_coverage = 0, reference_coverage = 0;
    bool passed() const { return lambda.has_value(); }
};

/// Blocks are the distinct supports of weight-k codewords.
std::vector<std::vector<std::size_t>> support_blocks(const NonlinearCode& code, std::size_t k);
DesignResult support_design(const NonlinearCode& code, std::size_t k, unsigned t);
DesignResult check_design(std::size_t v, std::size_t k, unsigned t, const std::vector<std::vector<std::size_t>>& blocks);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace cyclicbent

#endif
