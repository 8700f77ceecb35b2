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

#include "cyclicbent/construct.hpp"

#include "cyclicbent/parallel.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cyclicbent {

const char* to_string(CertKind k) { return k == CertKind::Bent ? "bent" : "semi-bent"; }
const char* to_string(CertMode m) { return m == CertMode::Full ? "full" : "reduced"; }
const char* to_string(CertFailure f) {
    switch (f) {
        case CertFailure::None: return "none";
        case CertFailure::NotBent: return "not-bent";
        case CertFailure::NotSemiBent: return "not-semi-bent";
        default: return "hypothesis-violated";
    }
}

namespace {

gf2::FieldPtr field_for_m(unsigned m) {
    if (m < 2 || m % 2) throw std::invalid_argument("m must be an even integer >= 2, got " + std::to_string(m));
    return gf2::Field::make(m - 1);
}

void chains_from(unsigned cur, unsigned top, std::vector<unsigned>& path, std::vector<std::vector<unsigned>>& out) {
    if (cur == top) {
        out.push_back(path);
        return;
    }
    for (unsigned nxt = cur + 1; nxt <= top; ++nxt)
        if (nxt % cur == 0 && top % nxt == 0) {
            path.push_back(nxt);
            chains_from(nxt, top, path, out);
            path.pop_back();
        }
}

}  // namespace

void validate(const ChainSpec& spec, const gf2::Field& field) {
    const unsigned m = spec.m;
    if (m < 4 || m % 2) throw std::invalid_argument("chain construction needs an even m >= 4");
    if (field.degree() != m - 1) throw std::invalid_argument("field degree must be m-1");
    const auto& e = spec.e;
    if (e.size() < 2) throw std::invalid_argument("chain needs e_0 and e_l");
    if (e.front() != 1) throw std::invalid_argument("e_0 must be 1");
    if (e.back() != m - 1) throw std::invalid_argument("e_l must be m-1");
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        if (e[i] == e[i + 1]) throw std::invalid_argument("consecutive chain entries must differ");
        if (e[i] == 0 || e[i + 1] % e[i]) throw std::invalid_argument("each chain entry must divide the next");
    }
    if (spec.gamma.size() != e.size() - 1) throw std::invalid_argument("gamma needs exactly l entries");
    gf2::Elem prefix = 0;
    for (std::size_t j = 0; j < spec.gamma.size(); ++j) {
        const auto g = spec.gamma[j];
        if (!field.contains(g)) throw std::invalid_argument("gamma entry outside GF(2^(m-1))");
        if (!field.in_subfield(g, e[j]))
            throw std::invalid_argument("gamma_" + std::to_string(j) + " is not in GF(2^" + std::to_string(e[j]) + ")");
        prefix ^= g;
        if (prefix == 0) throw std::invalid_argument("prefix sum of gamma up to index " + std::to_string(j) + " is zero");
    }
}

std::vector<std::vector<unsigned>> divisor_chains(unsigned m) {
    if (m < 4 || m % 2) throw std::invalid_argument("chain construction needs an even m >= 4");
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> path{1};
    chains_from(1, m - 1, path, out);
    return out;
}

std::vector<std::vector<gf2::Elem>> admissible_gammas(const gf2::Field& field, const std::vector<unsigned>& e) {
    std::vector<std::vector<gf2::Elem>> out;
    if (e.size() < 2) return out;
    std::vector<gf2::Elem> cur{1};
    auto rec = [&](auto&& self, std::size_t j, gf2::Elem prefix) -> void {
        if (j == e.size() - 1) {
            out.push_back(cur);
            return;
        }
        for (auto g : field.subfield_elements(e[j])) {
            if ((prefix ^ g) == 0) continue;
            cur.push_back(g);
            self(self, j + 1, prefix ^ g);
            cur.pop_back();
        }
    };
    rec(rec, 1, 1);
    return out;
}

std::vector<ChainSpec> admissible_specs(const gf2::FieldPtr& field, unsigned m) {
    std::vector<ChainSpec> out;
    for (auto& e : divisor_chains(m))
        for (auto& g : admissible_gammas(*field, e)) out.push_back({m, e, g});
    return out;
}

BoolFun kerdock_fn(const gf2::FieldPtr& field) {
    const auto& F = *field;
    const unsigned m = F.degree() + 1;
    if (m % 2) throw std::invalid_argument("kerdock_fn needs even m");
    return BoolFun::on_field_times_bit(field, [&](gf2::Elem x1, unsigned x2) {
        unsigned v = 0;
        for (unsigned i = 1; i <= (m - 2) / 2; ++i) v ^= F.abs_trace(F.mul(F.frobenius(x1, i), x1));
        return v ^ (x2 & F.abs_trace(x1));
    });
}

BoolFun kerdock_fn(unsigned m) { return kerdock_fn(field_for_m(m)); }

BoolFun chain_fn(const ChainSpec& spec, const gf2::FieldPtr& field) {
    validate(spec, *field);
    const auto& F = *field;
    const unsigned top = spec.m - 1;
    return BoolFun::on_field_times_bit(field, [&](gf2::Elem x1, unsigned x2) {
        unsigned v = 0;
        for (std::size_t j = 0; j < spec.gamma.size(); ++j) {
            const unsigned ej = spec.e[j], fj = top / ej;
            const gf2::Elem y = F.mul(spec.gamma[j], x1);
            gf2::Elem s = 0;
            for (unsigned i = 1; i <= (fj - 1) / 2; ++i) s ^= F.mul(F.frobenius(y, i * ej), y);
            v ^= F.abs_trace(s);
        }
        return v ^ (x2 & F.abs_trace(x1));
    });
}

BoolFun chain_fn(const ChainSpec& spec) { return chain_fn(spec, field_for_m(spec.m)); }

std::optional<std::pair<gf2::Elem, unsigned>> affine_difference(const BoolFun& f) {
    if (f.domain() != Domain::FieldTimesBit) throw std::invalid_argument("needs a F x GF(2) domain");
    const auto& F = f.field();
    const BoolFun d = BoolFun::on_field(f.field_ptr(), [&](gf2::Elem x) { return f.at(x, 0) ^ f.at(x, 1); });
    const auto w = walsh(d);
    const std::int64_t full = F.size();
    for (gf2::Elem lambda = 0; lambda < F.size(); ++lambda)
        if (std::llabs(w.values[lambda]) == full) return std::pair{lambda, w.values[lambda] < 0 ? 1u : 0u};
    return std::nullopt;
}

namespace {

void check_cap(bool ok, const CertifyOptions& opt, const char* what) {
    if (!ok && !opt.allow_large) throw std::length_error(std::string(what) + " exceeds the default size cap");
}

// Tables of f(a x1, x2) for every a, laid out like f.
std::vector<std::vector<std::uint8_t>> scaled_tables(const BoolFun& f) {
    const auto& F = f.field();
    std::vector<std::vector<std::uint8_t>> rows(F.size());
    parallel::for_chunks(F.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t a = b; a < e; ++a) {
            const BoolFun fa = scale_compose(f, static_cast<gf2::Elem>(a), 0);
            rows[a].assign(fa.table().begin(), fa.table().end());
        }
    });
    return rows;
}

bool table_has_class(std::span<const std::uint8_t> t, unsigned n, SpectrumClass want) {
    thread_local std::vector<std::int64_t> scratch;
    return detail::classify_table(t, n, scratch) == want;
}

}  // namespace

CyclicCertificate is_cyclic_bent_full(const BoolFun& f, const CertifyOptions& opt) {
    if (f.domain() != Domain::FieldTimesBit || f.n_vars() % 2)
        throw std::invalid_argument("cyclic bent certification needs F x GF(2) with m even");
    const unsigned m = f.n_vars();
    check_cap(m <= 8, opt, "full certification");
    const std::size_t q = f.field().size();
    const auto rows = scaled_tables(f);
    const std::size_t total = q * (q - 1) * 2;
    auto decode = [q](std::size_t k) {
        const std::size_t p = k >> 1, a = p / (q - 1), r = p % (q - 1);
        return Witness{static_cast<gf2::Elem>(a), static_cast<gf2::Elem>(r < a ? r : r + 1), static_cast<unsigned>(k & 1)};
    };
    const std::size_t hit = parallel::first_failure(total, [&](std::size_t k) {
        thread_local std::vector<std::uint8_t> t;
        const Witness w = decode(k);
        const auto& ra = rows[w.a];
        const auto& rb = rows[w.b];
        t.resize(2 * q);
        for (std::size_t x2 = 0; x2 < 2; ++x2)
            for (std::size_t x1 = 0; x1 < q; ++x1) t[x2 * q + x1] = ra[x2 * q + x1] ^ rb[(x2 ^ w.eps) * q + x1];
        return !table_has_class(t, m, SpectrumClass::Bent);
    });
    CyclicCertificate c{CertKind::Bent, CertMode::Full, hit, std::nullopt, CertFailure::None, std::nullopt};
    if (hit < total) {
        c.witness = decode(hit);
        c.failure = CertFailure::NotBent;
    }
    return c;
}

CyclicCertificate is_cyclic_bent_reduced(const BoolFun& f, const CertifyOptions& opt) {
    if (f.domain() != Domain::FieldTimesBit || f.n_vars() % 2)
        throw std::invalid_argument("cyclic bent certification needs F x GF(2) with m even");
    const unsigned m = f.n_vars();
    check_cap(m <= 16, opt, "reduced certification");
    CyclicCertificate c{CertKind::Bent, CertMode::Reduced, 0, std::nullopt, CertFailure::None, std::nullopt};
    c.difference = affine_difference(f);
    if (!c.difference) {
        c.failure = CertFailure::HypothesisViolated;
        c.witness = Witness{1, 1, 1};
        return c;
    }
    if (!table_has_class(f.table(), m, SpectrumClass::Bent)) {
        c.failure = CertFailure::NotBent;
        c.witness = Witness{1, 0, 0};
        return c;
    }
    c.verified_pairs = 1;
    const auto& F = f.field();
    const std::size_t q = F.size();
    // b runs over F \ GF(2), i.e. indices 2 .. q-1.
    const std::size_t total = q > 2 ? q - 2 : 0;
    const std::size_t hit = parallel::first_failure(total, [&](std::size_t k) {
        thread_local std::vector<std::uint8_t> t;
        const auto b = static_cast<gf2::Elem>(k + 2);
        t.resize(2 * q);
        for (unsigned x2 = 0; x2 < 2; ++x2)
            for (gf2::Elem x1 = 0; x1 < q; ++x1) t[x2 * q + x1] = f.at(x1, x2) ^ f.at(F.mul(b, x1), x2);
        return !table_has_class(t, m, SpectrumClass::Bent);
    });
    c.verified_pairs += hit;
    if (hit < total) {
        c.failure = CertFailure::NotBent;
        c.witness = Witness{1, static_cast<gf2::Elem>(hit + 2), 0};
    }
    return c;
}

CyclicCertificate is_cyclic_semibent(const BoolFun& g, CertMode mode, const CertifyOptions& opt) {
    if (g.domain() != Domain::PlainField || g.n_vars() % 2 == 0)
        throw std::invalid_argument("cyclic semi-bent certification needs a function on GF(2^n), n odd");
    const unsigned n = g.n_vars();
    const auto& F = g.field();
    const std::size_t q = F.size();
    CyclicCertificate c{CertKind::SemiBent, mode, 0, std::nullopt, CertFailure::None, std::nullopt};
    auto sum_is_semibent = [&](gf2::Elem a, gf2::Elem b) {
        thread_local std::vector<std::uint8_t> t;
        t.resize(q);
        for (gf2::Elem x = 0; x < q; ++x) t[x] = static_cast<std::uint8_t>(g[F.mul(a, x)] ^ g[F.mul(b, x)]);
        return table_has_class(t, n, SpectrumClass::SemiBent);
    };
    if (mode == CertMode::Full) {
        check_cap(n <= 7, opt, "full certification");
        std::vector<std::pair<gf2::Elem, gf2::Elem>> pairs;
        pairs.reserve(q * (q - 1) / 2);
        for (gf2::Elem a = 0; a < q; ++a)
            for (gf2::Elem b = a + 1; b < q; ++b) pairs.emplace_back(a, b);
        const std::size_t hit = parallel::first_failure(
            pairs.size(), [&](std::size_t k) { return !sum_is_semibent(pairs[k].first, pairs[k].second); });
        c.verified_pairs = hit;
        if (hit < pairs.size()) {
            c.failure = CertFailure::NotSemiBent;
            c.witness = Witness{pairs[hit].first, pairs[hit].second, 0};
        }
        return c;
    }
    check_cap(n <= 15, opt, "reduced certification");
    if (!table_has_class(g.table(), n, SpectrumClass::SemiBent)) {
        c.failure = CertFailure::NotSemiBent;
        c.witness = Witness{1, 0, 0};
        return c;
    }
    c.verified_pairs = 1;
    const std::size_t total = q > 2 ? q - 2 : 0;
    const std::size_t hit = parallel::first_failure(
        total, [&](std::size_t k) { return !sum_is_semibent(1, static_cast<gf2::Elem>(k + 2)); });
    c.verified_pairs += hit;
    if (hit < total) {
        c.failure = CertFailure::NotSemiBent;
        c.witness = Witness{1, static_cast<gf2::Elem>(hit + 2), 0};
    }
    return c;
}

BoolFun normalize_zero(const BoolFun& f) {
    if (f.domain() != Domain::FieldTimesBit) throw std::invalid_argument("needs a F x GF(2) domain");
    return BoolFun::on_field_times_bit(f.field_ptr(), [&](gf2::Elem x1, unsigned x2) { return f.at(x1, x2) ^ f.at(0, x2); });
}

std::vector<BoolFun> bent_family(const BoolFun& f, const std::vector<std::uint8_t>& eps) {
    if (f.domain() != Domain::FieldTimesBit) throw std::invalid_argument("needs a F x GF(2) domain");
    const std::size_t q = f.field().size();
    if (eps.size() != q - 1) throw std::invalid_argument("eps needs one bit per nonzero field element");
    std::vector<BoolFun> out;
    out.reserve(q - 1);
    for (gf2::Elem a = 1; a < q; ++a) out.push_back(scale_compose(f, a, eps[a - 1] & 1));
    return out;
}

BoolFun derive_semibent(const BoolFun& f, unsigned eps) { return restrict_x2(f, eps); }

std::vector<BoolFun> semibent_family(const BoolFun& f, const std::vector<std::uint8_t>& eps) {
    if (f.domain() != Domain::FieldTimesBit) throw std::invalid_argument("needs a F x GF(2) domain");
    const auto& F = f.field();
    const std::size_t q = F.size();
    if (eps.size() != q - 1) throw std::invalid_argument("eps needs one bit per nonzero field element");
    std::vector<BoolFun> out;
    out.reserve(q - 1);
    for (gf2::Elem a = 1; a < q; ++a)
        out.push_back(BoolFun::on_field(f.field_ptr(), [&](gf2::Elem x) { return f.at(F.mul(a, x), eps[a - 1] & 1); }));
    return out;
}

}  // namespace cyclicbent
