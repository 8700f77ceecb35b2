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

#include "cyclicbent/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cyclicbent::io {

std::string hex_pack(std::span<const std::uint8_t> bits) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve((bits.size() + 7) / 8 * 2);
    for (std::size_t j = 0; j < bits.size(); j += 8) {
        unsigned byte = 0;
        for (std::size_t k = 0; k < 8 && j + k < bits.size(); ++k) byte |= (bits[j + k] & 1u) << k;
        out += digits[byte >> 4];
        out += digits[byte & 15];
    }
    return out;
}

std::vector<std::uint8_t> hex_unpack(const std::string& hex, std::size_t n_bits) {
    if (hex.size() != (n_bits + 7) / 8 * 2) throw std::invalid_argument("hex string length does not match table size");
    auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw std::invalid_argument("bad hex digit");
    };
    std::vector<std::uint8_t> bits(n_bits);
    for (std::size_t j = 0; j < n_bits; ++j) {
        const unsigned byte = nibble(hex[j / 8 * 2]) << 4 | nibble(hex[j / 8 * 2 + 1]);
        bits[j] = static_cast<std::uint8_t>((byte >> (j % 8)) & 1);
    }
    return bits;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json to_json(const Rational& r) { return {{"exact", to_string(r)}, {"value", std::stod(format_double(to_double(r)))}}; }

json to_json(const BoolFun& f) {
    const auto& F = f.field();
    return {{"n", f.n_vars()},
            {"domain", to_string(f.domain())},
            {"field_degree", F.degree()},
            {"modulus", F.modulus()},
            {"table", hex_pack(f.table())}};
}

BoolFun boolfun_from_json(const json& j) {
    const auto F = gf2::Field::make(j.at("field_degree").get<unsigned>(), j.at("modulus").get<std::uint32_t>());
    const std::string dom = j.at("domain").get<std::string>();
    Domain d;
    if (dom == to_string(Domain::PlainField))
        d = Domain::PlainField;
    else if (dom == to_string(Domain::FieldTimesBit))
        d = Domain::FieldTimesBit;
    else
        throw std::invalid_argument("unknown domain '" + dom + "'");
    const std::size_t size = std::size_t{F->size()} * (d == Domain::FieldTimesBit ? 2 : 1);
    BoolFun f(F, d, hex_unpack(j.at("table").get<std::string>(), size));
    if (j.contains("n") && j.at("n").get<unsigned>() != f.n_vars()) throw std::invalid_argument("n does not match domain");
    return f;
}

json to_json(const WalshSpectrum& w) {
    return {{"n", w.n_vars}, {"domain", to_string(w.domain)}, {"class", to_string(w.cls)}, {"values", w.values}};
}

json to_json(const ChainSpec& s) { return {{"m", s.m}, {"e", s.e}, {"gamma", s.gamma}}; }

ChainSpec chain_from_json(const json& j) {
    return {j.at("m").get<unsigned>(), j.at("e").get<std::vector<unsigned>>(), j.at("gamma").get<std::vector<gf2::Elem>>()};
}

json to_json(const CyclicCertificate& c) {
    json j{{"kind", to_string(c.kind)},
           {"mode", to_string(c.mode)},
           {"passed", c.passed()},
           {"failure", to_string(c.failure)},
           {"verified_pairs", c.verified_pairs}};
    j["witness"] = c.witness ? json{{"a", c.witness->a}, {"b", c.witness->b}, {"eps", c.witness->eps}} : json(nullptr);
    j["difference"] = c.difference ? json{{"lambda", c.difference->first}, {"nu", c.difference->second}} : json(nullptr);
    return j;
}

json to_json(const CorrDist& d) {
    json rows = json::array();
    for (auto& [v, c] : d.counts) rows.push_back({{"value", to_string(v)}, {"count", c}});
    return {{"total", d.total}, {"distribution", rows}};
}

json to_json(const DistributionReport& r) {
    json w = json::array(), b = json::array();
    for (auto& [i, a] : r.weight) w.push_back({{"i", i}, {"count", a}});
    for (auto& [i, x] : r.distance) b.push_back({{"i", i}, {"count", to_json(x)}});
    return {{"weight", w}, {"distance", b}, {"min_distance", r.min_distance()}};
}

json to_json(const DesignResult& d) {
    json j{{"t", d.t}, {"v", d.v}, {"k", d.k}, {"b", d.b}, {"passed", d.passed()}};
    j["lambda"] = d.lambda ? json(*d.lambda) : json(nullptr);
    if (!d.passed())
        j["witness"] = {{"subset", d.witness}, {"coverage", d.witness_coverage}, {"reference_coverage", d.reference_coverage}};
    return j;
}

json to_json(const NonlinearCode& c) {
    json words = json::array();
    std::vector<std::uint8_t> bits(c.length());
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t p = 0; p < c.length(); ++p) bits[p] = c.bit(i, p);
        words.push_back(hex_pack(bits));
    }
    return {{"kind", c.kind() == CodeKind::FromBent ? "C(f)" : "C(g)"},
            {"field_degree", c.field_degree()},
            {"length", c.length()},
            {"size", c.size()},
            {"codewords", words}};
}

json to_json(const linpoly::LinPoly& L) {
    return {{"m", L.m()}, {"modulus", L.field->modulus()}, {"coefficients", L.a}, {"text", linpoly::to_string(L)}};
}

json to_json(const linpoly::QuadraticReport& r) {
    json j{{"cyclic_semibent", r.cyclic_semibent},
           {"path", r.path == linpoly::Path::Gcrd ? "gcrd" : "rank"},
           {"base_degree", r.base_degree},
           {"taus_checked", r.taus_checked}};
    j["failing_tau"] = r.failing_tau ? json(*r.failing_tau) : json(nullptr);
    if (r.failing_tau) j["failing_degree"] = r.failing_degree;
    return j;
}

json to_json(const MubReport& r) {
    return {{"orthonormal", r.orthonormal}, {"unbiased", r.unbiased}, {"vector_pairs", r.vector_pairs},
            {"first_violation", r.first_violation}};
}

std::string codebook_csv(const Codebook& cb) {
    std::ostringstream os;
    os << "row,basis";
    for (std::size_t k = 0; k < cb.dim; ++k) os << ",re" << k << ",im" << k;
    os << '\n';
    for (std::size_t r = 0; r < cb.n_rows; ++r) {
        const double s = 1.0 / std::sqrt(static_cast<double>(cb.norm_sq[r]));
        os << r << ',' << to_string(cb.bases[r / cb.dim]);
        for (auto z : cb.row(r))
            os << ',' << format_double(static_cast<double>(z.re) * s) << ',' << format_double(static_cast<double>(z.im) * s);
        os << '\n';
    }
    return os.str();
}

std::string sequences_csv(const SequenceFamily& fam) {
    std::ostringstream os;
    os << "lambda,nu";
    for (std::size_t t = 0; t < fam.period; ++t) os << ",s" << t;
    os << '\n';
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const auto& l = fam.labels[i];
        os << (l.infinity ? std::string("inf") : std::to_string(l.lambda)) << ',' << l.nu;
        for (auto z : fam.members[i]) {
            const char* sym = z == GaussInt(1)    ? "1"
                              : z == GaussInt(-1) ? "-1"
                              : z == GaussInt(0, 1) ? "i"
                              : z == GaussInt(0, -1) ? "-i"
                                                     : nullptr;
            if (!sym) throw std::logic_error("sequence symbol is not a fourth root of unity");
            os << ',' << sym;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace cyclicbent::io
