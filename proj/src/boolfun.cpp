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

#include "cyclicbent/boolfun.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace cyclicbent {

const char* to_string(Domain d) { return d == Domain::PlainField ? "field" : "field_times_bit"; }

const char* to_string(SpectrumClass c) {
    switch (c) {
        case SpectrumClass::Bent: return "bent";
        case SpectrumClass::SemiBent: return "semi-bent";
        default: return "neither";
    }
}

BoolFun::BoolFun(gf2::FieldPtr field, Domain domain, std::vector<std::uint8_t> table)
    : field_(std::move(field)), domain_(domain), table_(std::move(table)) {
    if (!field_) throw std::invalid_argument("null field");
    const std::size_t want = static_cast<std::size_t>(field_->size()) * (domain_ == Domain::FieldTimesBit ? 2 : 1);
    if (table_.size() != want) throw std::invalid_argument("truth table length does not match the domain");
    for (auto& b : table_)
        if (b > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
}

unsigned BoolFun::n_vars() const noexcept { return field_->degree() + (domain_ == Domain::FieldTimesBit ? 1 : 0); }

bool operator==(const BoolFun& a, const BoolFun& b) {
    return a.domain_ == b.domain_ && a.field_->degree() == b.field_->degree() &&
           a.field_->modulus() == b.field_->modulus() && a.table_ == b.table_;
}

namespace detail {

void fwht(std::span<std::int64_t> v) {
    for (std::size_t h = 1; h < v.size(); h <<= 1)
        for (std::size_t i = 0; i < v.size(); i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) {
                const auto a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
}

SpectrumClass classify_table(std::span<const std::uint8_t> table, unsigned n_vars, std::vector<std::int64_t>& scratch) {
    scratch.resize(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) scratch[i] = table[i] ? -1 : 1;
    fwht(scratch);
    return classify(scratch, n_vars);
}

}  // namespace detail

SpectrumClass classify(std::span<const std::int64_t> values, unsigned n_vars) {
    if (n_vars % 2 == 0) {
        const std::int64_t amp = std::int64_t{1} << (n_vars / 2);
        for (auto w : values)
            if (std::llabs(w) != amp) return SpectrumClass::Neither;
        return SpectrumClass::Bent;
    }
    const std::int64_t amp = std::int64_t{1} << ((n_vars + 1) / 2);
    for (auto w : values)
        if (w != 0 && std::llabs(w) != amp) return SpectrumClass::Neither;
    return SpectrumClass::SemiBent;
}

namespace {

std::uint32_t spectrum_mask(const gf2::Field& F, Domain dom, std::size_t idx) {
    const unsigned d = F.degree();
    const auto lambda = static_cast<gf2::Elem>(idx & (F.size() - 1));
    std::uint32_t m = F.trace_mask(lambda);
    if (dom == Domain::FieldTimesBit) m |= static_cast<std::uint32_t>(idx >> d) << d;
    return m;
}

}  // namespace

WalshSpectrum walsh(const BoolFun& f) {
    std::vector<std::int64_t> raw(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) raw[i] = f[i] ? -1 : 1;
    detail::fwht(raw);
    WalshSpectrum s;
    s.n_vars = f.n_vars();
    s.domain = f.domain();
    s.values.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) s.values[i] = raw[spectrum_mask(f.field(), f.domain(), i)];
    s.cls = classify(s.values, s.n_vars);
    return s;
}

std::vector<std::int64_t> inverse_walsh(const WalshSpectrum& s, const gf2::Field& field) {
    std::vector<std::int64_t> raw(s.values.size());
    for (std::size_t i = 0; i < raw.size(); ++i) raw[spectrum_mask(field, s.domain, i)] = s.values[i];
    detail::fwht(raw);
    for (auto& v : raw) v >>= s.n_vars;
    return raw;
}

BoolFun scale_compose(const BoolFun& f, gf2::Elem a, unsigned eps) {
    const auto& F = f.field();
    if (!F.contains(a)) throw std::out_of_range("scalar outside the field");
    if (f.domain() == Domain::PlainField)
        return BoolFun::on_field(f.field_ptr(), [&](gf2::Elem x) { return f[F.mul(a, x)]; });
    return BoolFun::on_field_times_bit(f.field_ptr(),
                                       [&](gf2::Elem x1, unsigned x2) { return f.at(F.mul(a, x1), x2 ^ (eps & 1)); });
}

BoolFun operator^(const BoolFun& f, const BoolFun& g) {
    if (f.domain() != g.domain() || f.field().degree() != g.field().degree() ||
        f.field().modulus() != g.field().modulus())
        throw std::invalid_argument("xor of functions on different domains");
    std::vector<std::uint8_t> t(f.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint8_t>(f[i] ^ g[i]);
    return BoolFun(f.field_ptr(), f.domain(), std::move(t));
}

BoolFun add_constant(const BoolFun& f, unsigned c) {
    std::vector<std::uint8_t> t(f.table().begin(), f.table().end());
    for (auto& b : t) b ^= static_cast<std::uint8_t>(c & 1);
    return BoolFun(f.field_ptr(), f.domain(), std::move(t));
}

BoolFun restrict_x2(const BoolFun& f, unsigned eps) {
    if (f.domain() != Domain::FieldTimesBit) throw std::invalid_argument("restriction needs a F x GF(2) domain");
    return BoolFun::on_field(f.field_ptr(), [&](gf2::Elem x) { return f.at(x, eps & 1); });
}

unsigned algebraic_degree(const BoolFun& f) {
    std::vector<std::uint8_t> anf(f.table().begin(), f.table().end());
    for (std::size_t h = 1; h < anf.size(); h <<= 1)
        for (std::size_t i = 0; i < anf.size(); ++i)
            if (i & h) anf[i] ^= anf[i ^ h];
    unsigned deg = 0;
    for (std::size_t i = 0; i < anf.size(); ++i)
        if (anf[i]) deg = std::max<unsigned>(deg, static_cast<unsigned>(std::popcount(i)));
    return deg;
}

std::optional<unsigned> quadratic_radical_dim(const BoolFun& f) {
    if (algebraic_degree(f) > 2) return std::nullopt;
    const unsigned n = f.n_vars();
    std::vector<std::uint32_t> rows(n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            const std::size_t ei = std::size_t{1} << i, ej = std::size_t{1} << j;
            const unsigned b = f[ei ^ ej] ^ f[ei] ^ f[ej] ^ f[0];
            rows[i] |= static_cast<std::uint32_t>(b) << j;
        }
    unsigned rank = 0;
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = rank;
        while (piv < n && !((rows[piv] >> col) & 1)) ++piv;
        if (piv == n) continue;
        std::swap(rows[piv], rows[rank]);
        for (unsigned r = 0; r < n; ++r)
            if (r != rank && ((rows[r] >> col) & 1)) rows[r] ^= rows[rank];
        ++rank;
    }
    return n - rank;
}

std::size_t count_j(const WalshSpectrum& g, const WalshSpectrum& h, unsigned e1, unsigned e2) {
    if (g.domain != Domain::FieldTimesBit || h.domain != Domain::FieldTimesBit || g.values.size() != h.values.size())
        throw std::invalid_argument("count_j needs two spectra on the same F x GF(2)");
    const std::int64_t amp = std::int64_t{1} << (g.n_vars / 2);
    const std::int64_t t1 = (e1 & 1) ? -amp : amp, t2 = (e2 & 1) ? -amp : amp;
    const std::size_t q = g.values.size() / 2;
    std::size_t c = 0;
    for (std::size_t mu = 0; mu < q; ++mu)
        if (g.values[mu] == t1 && h.values[q + mu] == t2) ++c;
    return c;
}

}  // namespace cyclicbent
