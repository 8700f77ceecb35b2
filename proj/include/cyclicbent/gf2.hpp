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

#ifndef CYCLICBENT_GF2_HPP
#define CYCLICBENT_GF2_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace cyclicbent::gf2 {

/// Field element. Bit i is the coefficient of x^i in the polynomial basis,
/// so the integer value doubles as the element's index.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr unsigned max_degree = 24;

/// Built-in primitive modulus for degree d (bit i = coefficient of x^i).
std::uint32_t default_modulus(unsigned d);

/// Polynomial helpers over GF(2), packed into integers.
bool poly_is_irreducible(std::uint64_t p);
std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b);
int poly_degree(std::uint64_t p);

/// Distinct prime divisors of n in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

class Field {
public:
    /// Throws std::invalid_argument for d outside [1, 24] or a reducible modulus.
    static FieldPtr make(unsigned d, std::optional<std::uint32_t> modulus = std::nullopt);

    unsigned degree() const noexcept { return degree_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t size() const noexcept { return std::uint32_t{1} << degree_; }
    std::uint32_t mult_order() const noexcept { return size() - 1; }
    bool contains(Elem a) const noexcept { return a < size(); }

    /// Primitive element. This is x unless a user modulus made x non-primitive.
    Elem generator() const noexcept { return generator_; }
    bool has_log_tables() const noexcept { return !exp_.empty(); }

    static constexpr Elem add(Elem a, Elem b) noexcept { return a ^ b; }
    Elem mul(Elem a, Elem b) const noexcept;
    Elem sqr(Elem a) const noexcept { return mul(a, a); }
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// a^(2^k)
    Elem frobenius(Elem a, unsigned k) const noexcept;
    /// generator()^k, negative k allowed.
    Elem gen_pow(std::int64_t k) const noexcept;
    /// Discrete log to base generator(); nullopt for zero.
    std::optional<std::uint32_t> log(Elem a) const;

    /// Relative trace onto GF(2^r). Requires r | degree().
    Elem trace(Elem x, unsigned r = 1) const;
    /// Absolute trace as a bit, via a precomputed linear functional.
    unsigned abs_trace(Elem x) const noexcept;
    bool in_subfield(Elem x, unsigned r) const;
    /// Elements of GF(2^r) inside this field, increasing index order.
    std::vector<Elem> subfield_elements(unsigned r) const;

    /// Bit j of the result is tr(lambda * x^j).
    std::uint32_t trace_mask(Elem lambda) const noexcept;

private:
    Field(unsigned d, std::uint32_t modulus, bool user_modulus);
    Elem mul_slow(Elem a, Elem b) const noexcept;
    bool has_full_order(Elem g) const;

    unsigned degree_;
    std::uint32_t modulus_;
    Elem generator_ = 1;
    std::uint32_t trace_vec_ = 0;
    std::vector<std::uint32_t> mask_basis_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
};

/// Image of x under the unique embedding of `small` into `big` that sends
/// small's polynomial root to the smallest-index root in `big`.
Elem subfield_embed(const Field& big, const Field& small, Elem x);

}  // namespace cyclicbent::gf2

#endif
