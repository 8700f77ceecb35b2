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

#include "cyclicbent/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace cyclicbent::gf2 {

namespace {

// Primitive moduli by degree, index 0 unused.
constexpr std::uint32_t primitive_table[max_degree + 1] = {
    0,
    0x3,        // x + 1
    0x7,        // x^2 + x + 1
    0xB,        // x^3 + x + 1
    0x13,       // x^4 + x + 1
    0x25,       // x^5 + x^2 + 1
    0x43,       // x^6 + x + 1
    0x83,       // x^7 + x + 1
    0x11D,      // x^8 + x^4 + x^3 + x^2 + 1
    0x211,      // x^9 + x^4 + 1
    0x409,      // x^10 + x^3 + 1
    0x805,      // x^11 + x^2 + 1
    0x1053,     // x^12 + x^6 + x^4 + x + 1
    0x201B,     // x^13 + x^4 + x^3 + x + 1
    0x4443,     // x^14 + x^10 + x^6 + x + 1
    0x8003,     // x^15 + x + 1
    0x1100B,    // x^16 + x^12 + x^3 + x + 1
    0x20009,    // x^17 + x^3 + 1
    0x40081,    // x^18 + x^7 + 1
    0x80027,    // x^19 + x^5 + x^2 + x + 1
    0x100009,   // x^20 + x^3 + 1
    0x200005,   // x^21 + x^2 + 1
    0x400003,   // x^22 + x + 1
    0x800021,   // x^23 + x^5 + 1
    0x1000087,  // x^24 + x^7 + x^2 + x + 1
};

constexpr unsigned log_table_limit = 20;

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
    const int dp = poly_degree(p);
    for (int i = poly_degree(a); i >= dp; --i)
        if ((a >> i) & 1) a ^= p << (i - dp);
    return a;
}

}  // namespace

int poly_degree(std::uint64_t p) { return p ? 63 - std::countl_zero(p) : -1; }

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a = poly_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

bool poly_is_irreducible(std::uint64_t p) {
    const int d = poly_degree(p);
    if (d < 1 || d > 31) return false;
    if (d == 1) return true;
    // x^(2^i) mod p for i <= d/2; a shared factor with x^(2^i) - x means a factor of degree dividing i.
    std::uint64_t t = 2;
    for (int i = 1; i <= d / 2; ++i) {
        t = poly_mod(clmul(t, t), p);
        if (poly_gcd(p, t ^ 2) != 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint32_t default_modulus(unsigned d) {
    if (d < 1 || d > max_degree)
        throw std::invalid_argument("field degree must lie in [1, 24], got " + std::to_string(d));
    return primitive_table[d];
}

FieldPtr Field::make(unsigned d, std::optional<std::uint32_t> modulus) {
    if (d < 1 || d > max_degree)
        throw std::invalid_argument("field degree must lie in [1, 24], got " + std::to_string(d));
    const bool user = modulus.has_value();
    const std::uint32_t p = user ? *modulus : primitive_table[d];
    if (poly_degree(p) != static_cast<int>(d))
        throw std::invalid_argument("modulus degree does not match field degree");
    if (!poly_is_irreducible(p)) throw std::invalid_argument("modulus is reducible");
    return FieldPtr(new Field(d, p, user));
}

Field::Field(unsigned d, std::uint32_t modulus, bool user_modulus) : degree_(d), modulus_(modulus) {
    if (d == 1) {
        generator_ = 1;
    } else if (has_full_order(2)) {
        generator_ = 2;
    } else if (!user_modulus) {
        throw std::logic_error("built-in modulus is not primitive for degree " + std::to_string(d));
    } else {
        // Irreducible but not primitive: take the smallest element of full order.
        generator_ = 0;
        for (Elem g = 3; g < size(); ++g)
            if (has_full_order(g)) {
                generator_ = g;
                break;
            }
    }

    if (d <= log_table_limit) {
        const std::uint32_t order = mult_order();
        exp_.resize(2 * static_cast<std::size_t>(order));
        log_.assign(size(), 0);
        Elem v = 1;
        for (std::uint32_t k = 0; k < order; ++k) {
            exp_[k] = v;
            exp_[k + order] = v;
            log_[v] = k;
            v = mul_slow(v, generator_);
        }
    }

    for (unsigned j = 0; j < d; ++j) {
        Elem v = Elem{1} << j, t = 0;
        for (unsigned i = 0; i < d; ++i) {
            t ^= v;
            v = mul(v, v);
        }
        trace_vec_ |= (t & 1u) << j;
    }
    mask_basis_.resize(d);
    for (unsigned i = 0; i < d; ++i) {
        std::uint32_t m = 0;
        for (unsigned j = 0; j < d; ++j)
            m |= static_cast<std::uint32_t>(abs_trace(mul(Elem{1} << i, Elem{1} << j))) << j;
        mask_basis_[i] = m;
    }
}

Elem Field::mul_slow(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(poly_mod(clmul(a, b), modulus_));
}

bool Field::has_full_order(Elem g) const {
    const std::uint64_t order = mult_order();
    if (g == 0) return false;
    auto slow_pow = [&](std::uint64_t e) {
        Elem r = 1, b = g;
        while (e) {
            if (e & 1) r = mul_slow(r, b);
            b = mul_slow(b, b);
            e >>= 1;
        }
        return r;
    };
    if (slow_pow(order) != 1) return false;
    for (auto p : prime_divisors(order))
        if (slow_pow(order / p) == 1) return false;
    return true;
}

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (!exp_.empty()) {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    return mul_slow(a, b);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!exp_.empty()) return exp_[(mult_order() - log_[a]) % mult_order()];
    return pow(a, mult_order() - 1);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!exp_.empty()) return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % mult_order())) % mult_order()];
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::frobenius(Elem a, unsigned k) const noexcept {
    k %= degree_;
    if (!exp_.empty() && a != 0)
        return exp_[(static_cast<std::uint64_t>(log_[a]) << k) % mult_order()];
    for (unsigned i = 0; i < k; ++i) a = mul(a, a);
    return a;
}

Elem Field::gen_pow(std::int64_t k) const noexcept {
    const std::int64_t order = mult_order();
    const auto r = static_cast<std::uint64_t>(((k % order) + order) % order);
    if (!exp_.empty()) return exp_[r];
    return pow(generator_, r);
}

std::optional<std::uint32_t> Field::log(Elem a) const {
    if (a == 0) return std::nullopt;
    if (!exp_.empty()) return log_[a];
    Elem v = 1;
    for (std::uint32_t k = 0; k < mult_order(); ++k, v = mul(v, generator_))
        if (v == a) return k;
    return std::nullopt;
}

Elem Field::trace(Elem x, unsigned r) const {
    if (r == 0 || degree_ % r) throw std::invalid_argument("trace target degree must divide field degree");
    if (r == 1) return abs_trace(x);
    Elem t = 0;
    for (unsigned i = 0; i < degree_ / r; ++i) {
        t ^= x;
        x = frobenius(x, r);
    }
    return t;
}

unsigned Field::abs_trace(Elem x) const noexcept {
    return static_cast<unsigned>(std::popcount(x & trace_vec_) & 1);
}

bool Field::in_subfield(Elem x, unsigned r) const {
    if (r == 0 || degree_ % r) throw std::invalid_argument("subfield degree must divide field degree");
    return frobenius(x, r) == x;
}

std::vector<Elem> Field::subfield_elements(unsigned r) const {
    if (r == 0 || degree_ % r) throw std::invalid_argument("subfield degree must divide field degree");
    const std::uint64_t sub_order = (std::uint64_t{1} << r) - 1;
    const std::uint64_t step = mult_order() / sub_order;
    std::vector<Elem> out{0};
    for (std::uint64_t k = 0; k < sub_order; ++k) out.push_back(gen_pow(static_cast<std::int64_t>(k * step)));
    std::sort(out.begin(), out.end());
    return out;
}

std::uint32_t Field::trace_mask(Elem lambda) const noexcept {
    std::uint32_t m = 0;
    for (unsigned i = 0; lambda; ++i, lambda >>= 1)
        if (lambda & 1) m ^= mask_basis_[i];
    return m;
}

Elem subfield_embed(const Field& big, const Field& small, Elem x) {
    const unsigned r = small.degree();
    if (big.degree() % r) throw std::invalid_argument("subfield degree must divide field degree");
    if (!small.contains(x)) throw std::out_of_range("element outside the small field");
    const std::uint32_t q = small.modulus();
    Elem root = 0;
    bool found = false;
    for (Elem c : big.subfield_elements(r)) {
        Elem acc = 0, pw = 1;
        for (unsigned i = 0; i <= r; ++i) {
            if ((q >> i) & 1) acc ^= pw;
            pw = big.mul(pw, c);
        }
        if (acc == 0) {
            root = c;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("no root of the small modulus in the big field");
    Elem out = 0, pw = 1;
    for (unsigned i = 0; i < r; ++i) {
        if ((x >> i) & 1) out ^= pw;
        pw = big.mul(pw, root);
    }
    return out;
}

}  // namespace cyclicbent::gf2
