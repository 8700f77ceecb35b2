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

// Command-line front end. Every subcommand prints a short text report, or JSON
// with --format json, and exits 0 only when all of its checks pass.

#include "cyclicbent/codebook.hpp"
#include "cyclicbent/codes.hpp"
#include "cyclicbent/construct.hpp"
#include "cyclicbent/linpoly.hpp"
#include "cyclicbent/parallel.hpp"
#include "cyclicbent/seqfam.hpp"
#include "cyclicbent/serialize.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace cyclicbent;
using io::json;

namespace {

struct Options {
    unsigned threads = 0;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string out;
    unsigned m = 0, n = 0;
    std::vector<unsigned> chain;
    std::vector<std::string> gamma;
    bool all_gammas = false;
    std::string mode = "auto";
    std::string kind;
    std::string in;
    std::string lin;
    bool table_check = false;
    bool codewords = false;
    std::vector<std::size_t> k;
    unsigned t = 3;
    std::string eps = "seed";
};

struct Report {
    bool ok = true;
    std::ostringstream text;
    json data = json::object();
    std::string csv;

    void check(const std::string& what, bool pass) {
        text << what << ": " << (pass ? "PASS" : "FAIL") << '\n';
        data["checks"].push_back({{"name", what}, {"passed", pass}});
        ok = ok && pass;
    }
};

gf2::Elem parse_elem(const gf2::Field& F, const std::string& tok) {
    if (tok.rfind("b^", 0) == 0) return F.gen_pow(std::stoll(tok.substr(2)));
    if (tok == "b") return F.generator();
    std::uint64_t v = 0;
    int base = 10;
    std::string_view s = tok;
    if (s.rfind("0x", 0) == 0) {
        s.remove_prefix(2);
        base = 16;
    }
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) throw std::invalid_argument("bad field element '" + tok + "'");
    if (v >= F.size()) throw std::invalid_argument("field element '" + tok + "' out of range");
    return static_cast<gf2::Elem>(v);
}

unsigned need_m(const Options& o) {
    if (o.m == 0) throw std::invalid_argument("--m is required");
    return o.m;
}

std::vector<ChainSpec> selected_specs(const Options& o) {
    const unsigned m = need_m(o);
    auto F = gf2::Field::make(m - 1);
    if (o.chain.empty()) {
        if (!o.gamma.empty()) throw std::invalid_argument("--gamma needs --chain");
        // The two-step chain (1, m-1) with gamma = 1 is the Kerdock function.
        ChainSpec k{m, {1, m - 1}, {1}};
        validate(k, *F);
        return {k};
    }
    if (o.all_gammas) {
        std::vector<ChainSpec> out;
        for (auto& g : admissible_gammas(*F, o.chain)) out.push_back({m, o.chain, g});
        if (out.empty()) throw std::invalid_argument("chain admits no gamma");
        return out;
    }
    ChainSpec s{m, o.chain, {}};
    if (o.gamma.empty()) {
        // Validate the chain shape first so its error is reported, not "no gamma".
        validate(ChainSpec{m, o.chain, std::vector<gf2::Elem>(o.chain.size() - 1, 1)}, *F);
        auto gs = admissible_gammas(*F, o.chain);
        if (gs.empty()) throw std::invalid_argument("chain admits no gamma");
        s.gamma = gs.front();
    } else {
        for (auto& tok : o.gamma) s.gamma.push_back(parse_elem(*F, tok));
    }
    validate(s, *F);
    return {s};
}

BoolFun bent_from(const Options& o) { return chain_fn(selected_specs(o).front()); }

std::vector<std::uint8_t> eps_vector(const Options& o, std::size_t len) {
    std::vector<std::uint8_t> eps(len, 0);
    if (o.eps == "zero") return eps;
    if (o.eps != "seed") throw std::invalid_argument("--eps must be 'seed' or 'zero'");
    std::mt19937_64 rng(o.seed);
    for (auto& e : eps) e = static_cast<std::uint8_t>(rng() & 1);
    return eps;
}

/// Semi-bent g with g(0) = 0: tr(x L(x)) from --L, else f(x1, 0) for the bent f at m = n + 1.
BoolFun semibent_from(const Options& o) {
    if (!o.lin.empty()) {
        const unsigned n = o.n ? o.n : o.m;
        if (n == 0) throw std::invalid_argument("--n is required with --L");
        return linpoly::quad_form(linpoly::parse(gf2::Field::make(n), o.lin));
    }
    Options b = o;
    if (o.n) b.m = o.n + 1;
    if (b.m == 0) throw std::invalid_argument("--n or --m is required");
    return derive_semibent(normalize_zero(bent_from(b)), 0);
}

std::string describe(const ChainSpec& s) {
    std::ostringstream os;
    os << "m=" << s.m << " chain=(";
    for (std::size_t i = 0; i < s.e.size(); ++i) os << (i ? "," : "") << s.e[i];
    os << ") gamma=(";
    for (std::size_t i = 0; i < s.gamma.size(); ++i) os << (i ? "," : "") << s.gamma[i];
    os << ")";
    return os.str();
}

CertMode bent_mode(const Options& o, unsigned m) {
    if (o.mode == "full") return CertMode::Full;
    if (o.mode == "reduced") return CertMode::Reduced;
    if (o.mode != "auto") throw std::invalid_argument("--mode must be full, reduced or auto");
    return m <= 8 ? CertMode::Full : CertMode::Reduced;
}

CyclicCertificate certify(const BoolFun& f, CertMode mode) {
    if (f.domain() == Domain::FieldTimesBit)
        return mode == CertMode::Full ? is_cyclic_bent_full(f) : is_cyclic_bent_reduced(f);
    return is_cyclic_semibent(f, mode);
}

std::string cert_line(const CyclicCertificate& c) {
    std::ostringstream os;
    os << "cyclic " << (c.kind == CertKind::Bent ? "bent" : "semi-bent") << " (" << to_string(c.mode)
       << "): " << (c.passed() ? "yes" : "no") << " verified_pairs=" << c.verified_pairs;
    if (c.witness) os << " witness=(" << c.witness->a << "," << c.witness->b << "," << c.witness->eps << ")";
    return os.str();
}

void cmd_construct(const Options& o, Report& r) {
    for (auto& s : selected_specs(o)) {
        const BoolFun f = chain_fn(s);
        const auto c = certify(f, bent_mode(o, s.m));
        r.text << describe(s) << '\n' << cert_line(c) << '\n';
        r.data["functions"].push_back({{"spec", io::to_json(s)}, {"function", io::to_json(f)}, {"certificate", io::to_json(c)}});
        r.check("certificate " + describe(s), c.passed());
    }
}

void cmd_verify(const Options& o, Report& r) {
    if (o.in.empty()) throw std::invalid_argument("--in is required");
    std::ifstream is(o.in);
    if (!is) throw std::invalid_argument("cannot open " + o.in);
    json j = json::parse(is);
    if (j.contains("functions")) j = j["functions"].at(0);
    if (j.contains("function")) j = j["function"];
    const BoolFun f = io::boolfun_from_json(j);
    const auto w = walsh(f);
    const auto c = certify(f, bent_mode(o, f.n_vars()));
    r.text << "n=" << f.n_vars() << " spectrum=" << to_string(w.cls) << '\n' << cert_line(c) << '\n';
    r.data["spectrum_class"] = to_string(w.cls);
    r.data["certificate"] = io::to_json(c);
    r.check("certificate", c.passed());
}

void emit_codebook(const Codebook& cb, const Rational& im, const Rational& bound, Report& r, bool equal_expected) {
    r.text << "N=" << cb.n_rows << " K=" << cb.dim << " imax_sq=" << to_string(im) << " bound_sq=" << to_string(bound);
    r.data["N"] = cb.n_rows;
    r.data["K"] = cb.dim;
    r.data["alphabet"] = cb.alphabet_size;
    r.data["imax_sq"] = io::to_json(im);
    r.data["bound_sq"] = io::to_json(bound);
    r.csv = io::codebook_csv(cb);
    if (equal_expected) {
        r.text << (im == bound ? " OPTIMAL" : " NOT OPTIMAL") << '\n';
        r.check("imax meets the Levenshtein bound", im == bound);
    }
}

void cmd_codebook(const Options& o, Report& r) {
    const std::string kind = o.kind.empty() ? "real" : o.kind;
    r.data["kind"] = kind;
    if (kind == "real") {
        const BoolFun f = bent_from(o);
        const auto cb = build_real_codebook(f, eps_vector(o, f.field().size() - 1));
        const auto im = imax_sq(cb);
        emit_codebook(cb, im, levenshtein_real_sq(static_cast<std::int64_t>(cb.n_rows), static_cast<std::int64_t>(cb.dim)), r, true);
    } else if (kind == "complex") {
        const auto cb = mub_to_codebook(build_mub(normalize_zero(bent_from(o))));
        const auto im = imax_sq(cb);
        emit_codebook(cb, im, levenshtein_complex_sq(static_cast<std::int64_t>(cb.n_rows), static_cast<std::int64_t>(cb.dim)), r, true);
        r.text << "alphabet=" << cb.alphabet_size << '\n';
    } else if (kind == "semibent") {
        const BoolFun g = semibent_from(o);
        const auto cb = build_semibent_codebook(g);
        const auto im = imax_sq(cb);
        const auto bound = levenshtein_real_sq(static_cast<std::int64_t>(cb.n_rows), static_cast<std::int64_t>(cb.dim));
        emit_codebook(cb, im, bound, r, false);
        const Rational expected(1, std::int64_t{1} << (g.n_vars() - 1));
        r.text << " ratio_sq=" << to_string(im / bound) << '\n';
        r.data["ratio_sq"] = io::to_json(im / bound);
        r.check("imax_sq equals 2^(1-n)", im == expected);
    } else {
        throw std::invalid_argument("--kind must be real, complex or semibent");
    }
}

void cmd_mub(const Options& o, Report& r) {
    const auto set = build_mub(normalize_zero(bent_from(o)));
    const auto rep = verify_mub(set);
    r.text << "bases=" << set.labels.size() << " dim=" << set.dim << " vector_pairs=" << rep.vector_pairs
           << " orthonormal=" << (rep.orthonormal ? "yes" : "no") << " unbiased=" << (rep.unbiased ? "yes" : "no") << '\n';
    if (!rep.ok()) r.text << "first violation: " << rep.first_violation << '\n';
    r.data["bases"] = set.labels.size();
    r.data["dim"] = set.dim;
    r.data["report"] = io::to_json(rep);
    r.csv = io::codebook_csv(mub_to_codebook(set));
    r.check("complete set of mutually unbiased bases", rep.ok() && set.labels.size() == set.dim + 1);
}

void cmd_seqfam(const Options& o, Report& r) {
    const std::string kind = o.kind.empty() ? "quaternary" : o.kind;
    SequenceFamily fam;
    CorrDist expected;
    std::int64_t rmax_expected = 0;
    bool exact_rmax = true;
    if (kind == "quaternary") {
        const BoolFun f = normalize_zero(bent_from(o));
        fam = quaternary_family(f);
        expected = table_quaternary(f.n_vars());
        rmax_expected = std::int64_t{1} << (f.n_vars() - 1);
        exact_rmax = false;
    } else if (kind == "binary") {
        const BoolFun f = normalize_zero(bent_from(o));
        fam = binary_family(f);
        expected = table_binary(f.n_vars());
        const std::int64_t v = (std::int64_t{1} << (f.n_vars() / 2)) + 2;
        rmax_expected = v * v;
    } else if (kind == "semibent") {
        const BoolFun g = semibent_from(o);
        fam = semibent_sequence_family(g);
        expected = table_semibent(g.n_vars());
        const std::int64_t v = 1 + (std::int64_t{1} << ((g.n_vars() + 1) / 2));
        rmax_expected = v * v;
    } else {
        throw std::invalid_argument("--kind must be quaternary, binary or semibent");
    }
    const auto d = full_distribution(fam);
    const auto rmax = r_max_sq(fam);
    r.text << "family=" << kind << " N=" << fam.members.size() << " period=" << fam.period << " r_max_sq=" << rmax << '\n';
    for (auto& [v, c] : d.counts) r.text << "  " << to_string(v) << ": " << c << '\n';
    r.data["kind"] = kind;
    r.data["N"] = fam.members.size();
    r.data["period"] = fam.period;
    r.data["r_max_sq"] = rmax;
    r.data["distribution"] = io::to_json(d);
    r.csv = io::sequences_csv(fam);
    if (o.table_check) {
        r.check("distribution matches closed form", d == expected);
        if (exact_rmax) {
            r.check("r_max_sq equals closed form", rmax == rmax_expected);
        } else {
            // |R|^2 <= (1 + sqrt(2^(m-1)))^2, compared without square roots.
            const std::int64_t slack = rmax - 1 - rmax_expected;
            r.check("r_max within 1 + sqrt(2^(m-1))", slack <= 0 || slack * slack <= 4 * rmax_expected);
        }
    }
}

NonlinearCode code_from(const Options& o, std::map<std::size_t, std::uint64_t>& expected) {
    const std::string kind = o.kind.empty() ? "f" : o.kind;
    if (kind == "f") {
        const BoolFun f = normalize_zero(bent_from(o));
        expected = expected_weights_f(f.n_vars());
        return build_code_f(f);
    }
    if (kind == "g") {
        const BoolFun g = semibent_from(o);
        expected = expected_weights_g(g.n_vars());
        return build_code_g(g);
    }
    throw std::invalid_argument("--kind must be f or g");
}

void cmd_code(const Options& o, Report& r) {
    std::map<std::size_t, std::uint64_t> expected;
    const auto code = code_from(o, expected);
    const auto rep = weight_distance_distributions(code);
    r.text << "(" << code.length() << "," << code.size() << "," << rep.min_distance() << ")\n";
    for (auto& [i, a] : rep.weight) r.text << "  A_" << i << " = " << a << '\n';
    r.data["parameters"] = {code.length(), code.size(), rep.min_distance()};
    r.data["distributions"] = io::to_json(rep);
    if (o.codewords) r.data["code"] = io::to_json(code);
    bool same = rep.distance.size() == rep.weight.size();
    for (auto& [i, b] : rep.distance) same = same && rep.weight.count(i) && b == Rational(static_cast<std::int64_t>(rep.weight.at(i)));
    r.check("weight distribution matches closed form", rep.weight == expected);
    r.check("distance distribution equals weight distribution", same);
    r.check("self-complementary", is_self_complementary(code));
}

void cmd_design(const Options& o, Report& r) {
    std::map<std::size_t, std::uint64_t> expected;
    const auto code = code_from(o, expected);
    std::vector<std::size_t> ks = o.k;
    if (ks.empty())
        for (auto& [w, c] : expected)
            if (w != 0 && w != code.length() && w >= o.t) ks.push_back(w);
    for (auto k : ks) {
        const auto d = support_design(code, k, o.t);
        std::ostringstream name;
        name << o.t << "-design at k=" << k;
        if (d.passed())
            r.text << o.t << "-(" << d.v << "," << d.k << "," << *d.lambda << ") b=" << d.b << '\n';
        else
            r.text << "k=" << k << " b=" << d.b << " not a " << o.t << "-design\n";
        r.data["designs"].push_back(io::to_json(d));
        r.check(name.str(), d.passed());
    }
}

void cmd_charquad(const Options& o, Report& r) {
    const unsigned m = need_m(o);
    if (o.lin.empty()) throw std::invalid_argument("--L is required");
    const auto L = linpoly::parse(gf2::Field::make(m), o.lin);
    const auto g = linpoly::is_cyclic_semibent_quadratic(L, linpoly::Path::Gcrd);
    const auto k = linpoly::is_cyclic_semibent_quadratic(L, linpoly::Path::Rank);
    const bool agree = g.cyclic_semibent == k.cyclic_semibent;
    r.text << "L = " << linpoly::to_string(L) << '\n'
           << "cyclic-semi-bent: " << (g.cyclic_semibent ? "true" : "false") << (agree ? " (both paths agree)" : " (paths DISAGREE)")
           << '\n';
    r.data["L"] = io::to_json(L);
    r.data["gcrd"] = io::to_json(g);
    r.data["rank"] = io::to_json(k);
    r.check("gcrd and rank paths agree", agree);
    if (m <= 9) {
        const auto mode = m <= 7 ? CertMode::Full : CertMode::Reduced;
        const bool w = is_cyclic_semibent(linpoly::quad_form(L), mode, {.allow_large = true}).passed();
        r.data["walsh"] = w;
        r.check("Walsh certifier agrees", w == g.cyclic_semibent);
    }
}

void cmd_selftest(const Options& o, Report& r) {
    r.check("kerdock m=4 cyclic bent (full)", is_cyclic_bent_full(kerdock_fn(4)).passed());
    {
        const auto f = kerdock_fn(4);
        const auto cb = build_real_codebook(f, eps_vector(o, 7));
        r.check("real codebook m=4 optimal", imax_sq(cb) == levenshtein_real_sq(144, 16));
        const auto set = build_mub(f);
        r.check("MUB m=4", verify_mub(set).ok());
        r.check("quaternary family m=4", full_distribution(quaternary_family(f)) == table_quaternary(4));
        r.check("binary family m=4", full_distribution(binary_family(f)) == table_binary(4));
        r.check("semi-bent family n=3", full_distribution(semibent_sequence_family(derive_semibent(f, 0))) == table_semibent(3));
        const auto code = build_code_f(f);
        r.check("C(f) m=4 weights", weight_distance_distributions(code).weight == expected_weights_f(4));
        r.check("C(f) m=4 3-design k=6", support_design(code, 6, 3).lambda == std::optional<std::uint64_t>(4));
    }
    std::mt19937_64 rng(o.seed);
    auto F = gf2::Field::make(5);
    bool agree = true;
    for (int t = 0; t < 20; ++t) {
        linpoly::LinPoly L = linpoly::LinPoly::zero(F);
        for (auto& c : L.a) c = static_cast<gf2::Elem>(rng() % F->size());
        const bool g = linpoly::is_cyclic_semibent_quadratic(L, linpoly::Path::Gcrd).cyclic_semibent;
        agree = agree && g == linpoly::is_cyclic_semibent_quadratic(L, linpoly::Path::Rank).cyclic_semibent &&
                g == is_cyclic_semibent(linpoly::quad_form(L), CertMode::Full).passed();
    }
    r.check("quadratic verdicts agree on 20 random L at m=5", agree);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic bent functions: constructions, codebooks, MUBs, sequences, codes and designs"};
    app.require_subcommand(1, 1);
    Options o;
    app.add_option("--threads", o.threads, "worker threads (0 = hardware)");
    app.add_option("--seed", o.seed, "seed for epsilon vectors and random corpora");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", o.out, "write json/csv output to this file");

    auto with_fn = [&](CLI::App* c) {
        c->add_option("--m", o.m, "m (the function lives on GF(2^(m-1)) x GF(2))");
        c->add_option("--chain", o.chain, "divisor chain e_0,...,e_l")->delimiter(',');
        c->add_option("--gamma", o.gamma, "gamma indices (decimal, 0x hex or b^k)")->delimiter(',');
        c->add_flag("--all-gammas", o.all_gammas, "use every admissible gamma");
        c->add_option("--eps", o.eps, "epsilon vector: seed or zero");
        c->fallthrough();
    };
    auto with_semi = [&](CLI::App* c) {
        c->add_option("--n", o.n, "n for semi-bent inputs");
        c->add_option("--L", o.lin, "linearized polynomial, e.g. x^4 + b^3*x^2");
    };

    std::map<std::string, std::function<void(const Options&, Report&)>> handlers;
    auto add = [&](const char* name, const char* help, std::function<void(const Options&, Report&)> fn) {
        auto* c = app.add_subcommand(name, help);
        handlers[name] = std::move(fn);
        return c;
    };
    auto* construct = add("construct", "build and certify chain or Kerdock functions", cmd_construct);
    with_fn(construct);
    construct->add_option("--mode", o.mode, "full, reduced or auto");
    auto* verify = add("verify", "certify a function read from JSON", cmd_verify);
    verify->add_option("--in", o.in, "JSON file")->required();
    verify->add_option("--mode", o.mode, "full, reduced or auto");
    verify->fallthrough();
    auto* codebook = add("codebook", "build a codebook and compare with the Levenshtein bound", cmd_codebook);
    with_fn(codebook);
    with_semi(codebook);
    codebook->add_option("--kind", o.kind, "real, complex or semibent");
    auto* mub = add("mub", "build and verify a complete set of MUBs", cmd_mub);
    with_fn(mub);
    auto* seqfam = add("seqfam", "sequence family correlation distribution", cmd_seqfam);
    with_fn(seqfam);
    with_semi(seqfam);
    seqfam->add_option("--kind", o.kind, "quaternary, binary or semibent");
    seqfam->add_flag("--table-check", o.table_check, "compare with the closed-form distribution");
    auto* code = add("code", "nonlinear code parameters and distributions", cmd_code);
    with_fn(code);
    with_semi(code);
    code->add_option("--kind", o.kind, "f or g");
    code->add_flag("--codewords", o.codewords, "include codewords in JSON output");
    auto* design = add("design", "support designs of a code", cmd_design);
    with_fn(design);
    with_semi(design);
    design->add_option("--kind", o.kind, "f or g");
    design->add_option("--k", o.k, "block sizes (default: every nontrivial weight)")->delimiter(',');
    design->add_option("--t", o.t, "design strength");
    auto* charquad = add("charquad", "cyclic semi-bent test for tr(x L(x))", cmd_charquad);
    charquad->add_option("--m", o.m, "field degree (odd)")->required();
    charquad->add_option("--L", o.lin, "linearized polynomial")->required();
    charquad->fallthrough();
    add("selftest", "quick end-to-end checks", cmd_selftest)->fallthrough();

    CLI11_PARSE(app, argc, argv);
    parallel::set_thread_count(o.threads);

    const std::string name = app.get_subcommands().front()->get_name();
    Report r;
    try {
        handlers.at(name)(o, r);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    r.data["command"] = name;
    r.data["ok"] = r.ok;

    std::string payload;
    if (o.format == "json") payload = r.data.dump(2) + "\n";
    if (o.format == "csv") {
        if (r.csv.empty()) {
            std::cerr << "error: " << name << " has no CSV output\n";
            return 2;
        }
        payload = r.csv;
    }
    if (!o.out.empty()) {
        std::ofstream os(o.out);
        if (!os) {
            std::cerr << "error: cannot write " << o.out << '\n';
            return 2;
        }
        os << (payload.empty() ? r.data.dump(2) + "\n" : payload);
        std::cout << r.text.str();
    } else {
        std::cout << (payload.empty() ? r.text.str() : payload);
    }
    return r.ok ? 0 : 1;
}
