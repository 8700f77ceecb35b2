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

#ifndef CYCLICBENT_BOOLFUN_HPP
#define CYCLICBENT_BOOLFUN_HPP

#include "cyclicbent/gf2.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cyclicbent {

/// PlainField: inputs are elements of F. FieldTimesBit: inputs are (x1, x2) in
/// F x GF(2), stored at index x2 * |F| + x1.
enum class Domain { PlainField, FieldTimesBit };

enum class SpectrumClass { Bent, SemiBent, Neither };

const char* to_string(Domain d);
const char* to_string(SpectrumClass c);

class BoolFun {
public:
    BoolFun(gf2::FieldPtr field, Domain domain, std::vector<std::uint8_t> table);

    template <class Fn>
    static BoolFun on_field(gf2::FieldPtr field, Fn&& fn) {
        std::vector<std::uint8_t> t(field->size());
        for (gf2::Elem x = 0; x < field->size(); ++x) t[x] = static_cast<std::uint8_t>(fn(x) & 1);
        return BoolFun(std::move(field), Domain::PlainField, std::move(t));
    }

    template <class Fn>
    static BoolFun on_field_times_bit(gf2::FieldPtr field, Fn&& fn) {
        const std::size_t q = field->size();
        std::vector<std::uint8_t> t(2 * q);
        for (unsigned x2 = 0; x2 < 2; ++x2)
            for (gf2::Elem x1 = 0; x1 < q; ++x1) t[x2 * q + x1] = static_cast<std::uint8_t>(fn(x1, x2) & 1);
        return BoolFun(std::move(field), Domain::FieldTimesBit, std::move(t));
    }

    const gf2::Field& field() const noexcept { return *field_; }
    const gf2::FieldPtr& field_ptr() const noexcept { return field_; }
    Domain domain() const noexcept { return domain_; }
    unsigned n_vars() const noexcept;
    std::size_t size() const noexcept { return table_.size(); }
    std::span<const std::uint8_t> table() const noexcept { return table_; }

    unsigned operator[](std::size_t idx) const noexcept { return table_[idx]; }
    unsigned at(gf2::Elem x1, unsigned x2) const noexcept { return table_[(std::size_t{x2} << field_->degree()) | x1]; }

    friend bool operator==(const BoolFun& a, const BoolFun& b);

private:
    gf2::FieldPtr field_;
    Domain domain_;
    std::vector<std::uint8_t> table_;
};

/// Values indexed like the function table: lambda for PlainField,
/// nu * |F| + lambda for FieldTimesBit, with
/// W(lambda, nu) = sum_x (-1)^(f(x) + tr(lambda x1) + nu x2).
struct WalshSpectrum {
    std::vector<std::int64_t> values;
    unsigned n_vars = 0;
    Domain domain = Domain::PlainField;
    SpectrumClass cls = SpectrumClass::Neither;

    std::int64_t at(gf2::Elem lambda, unsigned nu = 0) const {
        return values[(static_cast<std::size_t>(nu) * (values.size() / (domain == Domain::FieldTimesBit ? 2 : 1))) |
                      lambda];
    }
};

WalshSpectrum walsh(const BoolFun& f);
SpectrumClass classify(std::span<const std::int64_t> values, unsigned n_vars);
/// Recovers the (+1/-1) sign table of f from its spectrum.
std::vector<std::int64_t> inverse_walsh(const WalshSpectrum& s, const gf2::Field& field);

/// g(x1, x2) = f(a x1, x2 + eps) on FieldTimesBit, or g(x) = f(a x) on PlainField (eps ignored).
BoolFun scale_compose(const BoolFun& f, gf2::Elem a, unsigned eps = 0);
BoolFun operator^(const BoolFun& f, const BoolFun& g);
BoolFun add_constant(const BoolFun& f, unsigned c);
/// x1 -> f(x1, eps), a function on F.
BoolFun restrict_x2(const BoolFun& f, unsigned eps);

unsigned algebraic_degree(const BoolFun& f);
/// Dimension of the radical of f(x+y)+f(x)+f(y)+f(0); nullopt above degree 2.
std::optional<unsigned> quadratic_radical_dim(const BoolFun& f);

/// Number of mu with W_g(mu,0) = (-1)^e1 2^(n/2) and W_h(mu,1) = (-1)^e2 2^(n/2).
std::size_t count_j(const WalshSpectrum& g, const WalshSpectrum& h, unsigned e1, unsigned e2);

namespace detail {
void fwht(std::span<std::int64_t> v);
/// Classifies the 0/1 table directly. `scratch` is resized as needed.
SpectrumClass classify_table(std::span<const std::uint8_t> table, unsigned n_vars, std::vector<std::int64_t>& scratch);
}  // namespace detail

}  // namespace cyclicbent

#endif
