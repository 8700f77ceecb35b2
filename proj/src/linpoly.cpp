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

#include "cyclicbent/linpoly.hpp"

#include "cyclicbent/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cyclicbent::linpoly {

namespace {

void same_field(const gf2::FieldPtr& a, const gf2::FieldPtr& b) {
    if (a->degree() != b->degree() || a->modulus() != b->modulus())
        throw std::invalid_argument("polynomials live over different fields");
}

Elem frob(const gf2::Field& F, Elem a, std::size_t k) { return F.frobenius(a, static_cast<unsigned>(k % F.degree())); }

}  // namespace

LinPoly LinPoly::zero(gf2::FieldPtr F) {
    const unsigned m = F->degree();
    return {std::move(F), std::vector<Elem>(m, 0)};
}

LinPoly LinPoly::monomial(gf2::FieldPtr F, unsigned i, Elem coeff) {
    if (i >= F->degree()) throw std::invalid_argument("monomial exponent index must be below m");
    LinPoly L = zero(std::move(F));
    L.a[i] = coeff;
    return L;
}

LinPoly operator+(const LinPoly& l, const LinPoly& r) {
    same_field(l.field, r.field);
    LinPoly s = l;
    for (std::size_t i = 0; i < s.a.size(); ++i) s.a[i] ^= r.a[i];
    return s;
}

Elem evaluate(const LinPoly& L, Elem x) {
    const auto& F = *L.field;
    Elem acc = 0, p = x;
    for (std::size_t i = 0; i < L.a.size(); ++i) {
        if (L.a[i]) acc ^= F.mul(L.a[i], p);
        p = F.sqr(p);
    }
    return acc;
}

BoolFun quad_form(const LinPoly& L) {
    const auto& F = *L.field;
    return BoolFun::on_field(L.field, [&](Elem x) { return F.abs_trace(F.mul(x, evaluate(L, x))); });
}

LinPoly adjoint(const LinPoly& L) {
    const auto& F = *L.field;
    const unsigned m = L.m();
    LinPoly s = LinPoly::zero(L.field);
    s.a[0] = L.a[0];
    for (unsigned i = 1; i < m; ++i) s.a[i] = frob(F, L.a[m - i], i);
    return s;
}

LinPoly symmetrize(const LinPoly& L) { return L + adjoint(L); }

LinPoly phi(const LinPoly& L, Elem tau) {
    if (tau < 2) throw std::invalid_argument("phi needs tau outside GF(2)");
    const auto& F = *L.field;
    LinPoly s = symmetrize(L);
    for (unsigned i = 0; i < s.m(); ++i) s.a[i] = F.mul(s.a[i], 1 ^ F.mul(frob(F, tau, i), tau));
    return s;
}

Elem phi_eval(const LinPoly& L, Elem tau, Elem x) {
    if (tau < 2) throw std::invalid_argument("phi needs tau outside GF(2)");
    const auto& F = *L.field;
    const LinPoly s = symmetrize(L);
    return evaluate(s, x) ^ F.mul(tau, evaluate(s, F.mul(tau, x)));
}

unsigned rank(const LinPoly& L) {
    const unsigned m = L.m();
    std::vector<std::uint32_t> rows(m);
    for (unsigned j = 0; j < m; ++j) rows[j] = evaluate(L, Elem{1} << j);
    unsigned r = 0;
    for (unsigned bit = 0; bit < m && r < m; ++bit) {
        auto piv = std::find_if(rows.begin() + r, rows.end(), [&](std::uint32_t v) { return (v >> bit) & 1; });
        if (piv == rows.end()) continue;
        std::iter_swap(rows.begin() + r, piv);
        for (unsigned k = 0; k < m; ++k)
            if (k != r && ((rows[k] >> bit) & 1)) rows[k] ^= rows[r];
        ++r;
    }
    return r;
}

unsigned kernel_dim(const LinPoly& L) { return L.m() - rank(L); }

void SkewPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

SkewPoly make_skew(gf2::FieldPtr F, std::vector<Elem> c) {
    SkewPoly p{std::move(F), std::move(c)};
    p.trim();
    return p;
}

SkewPoly associated(const LinPoly& L) { return make_skew(L.field, L.a); }

SkewPoly x_m_minus_1(gf2::FieldPtr F) {
    std::vector<Elem> c(F->degree() + 1, 0);
    c.front() = 1;
    c.back() = 1;
    return make_skew(std::move(F), std::move(c));
}

SkewPoly operator+(const SkewPoly& l, const SkewPoly& r) {
    same_field(l.field, r.field);
    std::vector<Elem> c(std::max(l.c.size(), r.c.size()), 0);
    for (std::size_t i = 0; i < l.c.size(); ++i) c[i] ^= l.c[i];
    for (std::size_t i = 0; i < r.c.size(); ++i) c[i] ^= r.c[i];
    return make_skew(l.field, std::move(c));
}

SkewPoly operator*(const SkewPoly& l, const SkewPoly& r) {
    same_field(l.field, r.field);
    if (l.is_zero() || r.is_zero()) return make_skew(l.field, {});
    const auto& F = *l.field;
    std::vector<Elem> c(l.c.size() + r.c.size() - 1, 0);
    for (std::size_t i = 0; i < l.c.size(); ++i) {
        if (!l.c[i]) continue;
        for (std::size_t j = 0; j < r.c.size(); ++j)
            if (r.c[j]) c[i + j] ^= F.mul(l.c[i], frob(F, r.c[j], i));
    }
    return make_skew(l.field, std::move(c));
}

SkewDivision right_divide(const SkewPoly& p, const SkewPoly& d) {
    same_field(p.field, d.field);
    if (d.is_zero()) throw std::domain_error("right division by the zero polynomial");
    const auto& F = *p.field;
    const std::size_t k = static_cast<std::size_t>(d.degree());
    SkewPoly r = p;
    std::vector<Elem> q(p.c.size() > k ? p.c.size() - k : 0, 0);
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const std::size_t n = static_cast<std::size_t>(r.degree()), s = n - k;
        const Elem t = F.mul(r.c[n], F.inv(frob(F, d.c[k], s)));
        q[s] ^= t;
        for (std::size_t j = 0; j <= k; ++j)
            if (d.c[j]) r.c[s + j] ^= F.mul(t, frob(F, d.c[j], s));
        r.trim();
    }
    return {make_skew(p.field, std::move(q)), std::move(r)};
}

SkewPoly monic(const SkewPoly& p) {
    if (p.is_zero()) return p;
    const auto& F = *p.field;
    const Elem s = F.inv(p.c.back());
    SkewPoly out = p;
    for (auto& x : out.c) x = F.mul(s, x);
    return out;
}

SkewPoly gcrd(const SkewPoly& p, const SkewPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcrd of two zero polynomials");
    SkewPoly a = p, b = q;
    while (!b.is_zero()) {
        SkewPoly r = right_divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Elem apply(const SkewPoly& p, Elem x) {
    const auto& F = *p.field;
    Elem acc = 0;
    for (std::size_t i = 0; i < p.c.size(); ++i)
        if (p.c[i]) acc ^= F.mul(p.c[i], frob(F, x, i));
    return acc;
}

QuadraticReport is_cyclic_semibent_quadratic(const LinPoly& L, Path path) {
    const unsigned m = L.m();
    if (m % 2 == 0) throw std::invalid_argument("quadratic cyclic semi-bent test needs odd m");
    const SkewPoly target = x_m_minus_1(L.field);
    auto measure = [&](const LinPoly& P) -> unsigned {
        if (path == Path::Rank) return kernel_dim(P);
        if (std::all_of(P.a.begin(), P.a.end(), [](Elem e) { return e == 0; })) return m;
        return static_cast<unsigned>(gcrd(associated(P), target).degree());
    };
    QuadraticReport rep;
    rep.path = path;
    rep.base_degree = measure(symmetrize(L));
    if (rep.base_degree != 1) return rep;
    const std::size_t total = L.field->size() - 2;
    std::vector<unsigned> degs(total, 0);
    const std::size_t hit = parallel::first_failure(total, [&](std::size_t k) {
        const unsigned d = measure(phi(L, static_cast<Elem>(k + 2)));
        degs[k] = d;
        return d != 1;
    });
    rep.taus_checked = hit == total ? total : hit + 1;
    if (hit < total) {
        rep.failing_tau = static_cast<Elem>(hit + 2);
        rep.failing_degree = degs[hit];
        return rep;
    }
    rep.cyclic_semibent = true;
    return rep;
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view term) {
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        s.remove_prefix(2);
        base = 16;
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad number in term '" + std::string(term) + "'");
    return v;
}

Elem parse_coeff(const gf2::Field& F, std::string_view s, std::string_view term) {
    s = strip(s);
    if (!s.empty() && s[0] == 'b') {
        s = strip(s.substr(1));
        if (s.empty()) return F.generator();
        if (s[0] != '^') throw std::invalid_argument("bad coefficient in term '" + std::string(term) + "'");
        return F.gen_pow(static_cast<std::int64_t>(parse_uint(strip(s.substr(1)), term)));
    }
    const auto v = parse_uint(s, term);
    if (v >= F.size()) throw std::invalid_argument("coefficient index out of range in term '" + std::string(term) + "'");
    return static_cast<Elem>(v);
}

}  // namespace

LinPoly parse(gf2::FieldPtr F, std::string_view text) {
    LinPoly L = LinPoly::zero(F);
    if (strip(text).empty()) throw std::invalid_argument("empty linearized polynomial");
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t plus = std::min(text.find('+', start), text.size());
        const std::string_view term = strip(text.substr(start, plus - start));
        if (term.empty()) throw std::invalid_argument("empty term");
        const std::size_t star = term.find('*');
        const Elem coeff = star == std::string_view::npos ? 1 : parse_coeff(*F, term.substr(0, star), term);
        std::string_view mono = strip(star == std::string_view::npos ? term : term.substr(star + 1));
        if (mono.empty() || mono[0] != 'x') throw std::invalid_argument("term '" + std::string(term) + "' has no x");
        mono = strip(mono.substr(1));
        std::uint64_t e = 1;
        if (!mono.empty()) {
            if (mono[0] != '^') throw std::invalid_argument("bad exponent in term '" + std::string(term) + "'");
            e = parse_uint(strip(mono.substr(1)), term);
        }
        if (e == 0 || !std::has_single_bit(e) || std::countr_zero(e) >= static_cast<int>(F->degree()))
            throw std::invalid_argument("exponent in term '" + std::string(term) + "' must be 2^i with i < m");
        L.a[static_cast<std::size_t>(std::countr_zero(e))] ^= coeff;
        start = plus + 1;
    }
    return L;
}

std::string to_string(const LinPoly& L) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < L.a.size(); ++i) {
        if (!L.a[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (L.a[i] != 1) os << L.a[i] << "*";
        os << "x^" << (std::uint64_t{1} << i);
    }
    return first ? "0" : os.str();
}

}  // namespace cyclicbent::linpoly
