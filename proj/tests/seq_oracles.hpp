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

// Walsh-side evaluators for sequence correlations, and the spectrum counting
// helpers used by the distribution proofs. Each returns the value predicted
// from spectra of derived functions, never from the sequences themselves.

#ifndef CYCLICBENT_TESTS_SEQ_ORACLES_HPP
#define CYCLICBENT_TESTS_SEQ_ORACLES_HPP

#include "cyclicbent/boolfun.hpp"
#include "cyclicbent/exact.hpp"
#include "cyclicbent/seqfam.hpp"
#include "oracles.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace seq_oracle {

using cyclicbent::BoolFun;
using cyclicbent::GaussInt;
using cyclicbent::SeqLabel;
using cyclicbent::WalshSpectrum;
using cyclicbent::gf2::Elem;
using cyclicbent::gf2::Field;

inline BoolFun f1b(const BoolFun& f, Elem b, unsigned eps) {
    return f ^ cyclicbent::scale_compose(f, b, eps);
}

/// Spectra are cached per shift because every lambda pair reuses them.
class QuaternaryPredictor {
public:
    explicit QuaternaryPredictor(const BoolFun& f) : f_(f), F_(f.field()) {}

    GaussInt operator()(const SeqLabel& s, const SeqLabel& s2, std::size_t tau) {
        const Elem bt = F_.gen_pow(static_cast<std::int64_t>(tau));
        if (s.infinity && s2.infinity) return tau == 0 ? GaussInt(static_cast<std::int64_t>(F_.size()) - 1) : GaussInt(-1);
        if (!s.infinity && !s2.infinity) {
            const auto& w0 = spec(0, bt, 0);
            const auto& w1 = spec(0, bt, 1);
            const Elem mu = F_.mul(s.lambda, bt) ^ s2.lambda;
            return half(w0.at(mu, 0), -w1.at(mu, 1)) - GaussInt(1);
        }
        if (!s.infinity) {
            const auto& w = spec(1, bt, 0);
            const Elem mu = F_.mul(s.lambda, bt) ^ 1;
            return half(w.at(mu, 0), w.at(mu, 1)) - GaussInt(1);
        }
        const auto& w = spec(2, 0, 0);
        const Elem mu = s2.lambda ^ bt;
        return half(w.at(mu, 0), -w.at(mu, 1)) - GaussInt(1);
    }

private:
    static GaussInt half(std::int64_t re, std::int64_t im) {
        if ((re | im) & 1) throw std::logic_error("odd Walsh combination");
        return {re / 2, im / 2};
    }
    // kind 0: f_{1,b,eps}; kind 1: f(b x1, x2); kind 2: f itself.
    const WalshSpectrum& spec(int kind, Elem b, unsigned eps) {
        auto key = std::tuple{kind, b, eps};
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        BoolFun g = kind == 0 ? f1b(f_, b, eps) : kind == 1 ? cyclicbent::scale_compose(f_, b, 0) : f_;
        return cache_.emplace(key, cyclicbent::walsh(g)).first->second;
    }
    const BoolFun& f_;
    const Field& F_;
    std::map<std::tuple<int, Elem, unsigned>, WalshSpectrum> cache_;
};

class BinaryPredictor {
public:
    explicit BinaryPredictor(const BoolFun& f) : f_(f), F_(f.field()) {}

    GaussInt operator()(const SeqLabel& s, const SeqLabel& s2, std::size_t tau) {
        const unsigned m = f_.n_vars();
        const std::int64_t sn = s.nu ? -1 : 1, sn2 = s2.nu ? -1 : 1;
        const unsigned nu = s.nu ^ s2.nu;
        if (tau % 2) {
            const Elem b = F_.gen_pow(static_cast<std::int64_t>(tau / 2 + (std::size_t{1} << (m - 2))));
            const auto& w = spec(b, 1);
            return GaussInt(sn * w.at(F_.mul(s.lambda, b) ^ s2.lambda, nu) - sn - sn2);
        }
        const Elem b = F_.gen_pow(static_cast<std::int64_t>(tau / 2));
        const auto& w = spec(b, 0);
        return GaussInt(w.at(F_.mul(s.lambda, b) ^ s2.lambda, nu) - 1 - (nu ? -1 : 1));
    }

private:
    const WalshSpectrum& spec(Elem b, unsigned eps) {
        auto key = std::pair{b, eps};
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, cyclicbent::walsh(f1b(f_, b, eps))).first->second;
    }
    const BoolFun& f_;
    const Field& F_;
    std::map<std::pair<Elem, unsigned>, WalshSpectrum> cache_;
};

class SemibentPredictor {
public:
    explicit SemibentPredictor(const BoolFun& g) : g_(g), F_(g.field()), wg_(cyclicbent::walsh(g)) {}

    GaussInt operator()(const SeqLabel& s, const SeqLabel& s2, std::size_t tau) {
        const Elem bt = F_.gen_pow(static_cast<std::int64_t>(tau));
        if (s.infinity && s2.infinity) return tau == 0 ? GaussInt(static_cast<std::int64_t>(F_.size()) - 1) : GaussInt(-1);
        if (!s.infinity && !s2.infinity) {
            auto it = cache_.find(bt);
            if (it == cache_.end()) it = cache_.emplace(bt, cyclicbent::walsh(g_ ^ cyclicbent::scale_compose(g_, bt))).first;
            return GaussInt(it->second.at(F_.mul(s.lambda, bt) ^ s2.lambda) - 1);
        }
        if (!s.infinity) return GaussInt(wg_.at(s.lambda ^ F_.gen_pow(-static_cast<std::int64_t>(tau))) - 1);
        return GaussInt(wg_.at(s2.lambda ^ bt) - 1);
    }

private:
    const BoolFun& g_;
    const Field& F_;
    WalshSpectrum wg_;
    std::map<Elem, WalshSpectrum> cache_;
};

/// #{mu : W_g(mu, nu) = (-1)^eps 2^(m/2)}
inline std::size_t n_count(const WalshSpectrum& w, unsigned nu, unsigned eps) {
    const std::int64_t amp = std::int64_t{1} << (w.n_vars / 2);
    const std::int64_t target = eps ? -amp : amp;
    std::size_t c = 0;
    for (Elem mu = 0; mu < w.values.size() / 2; ++mu) c += w.at(mu, nu) == target;
    return c;
}

/// #{(l1, l2) in H x H : W_g(b l1 + l2, u) = (-1)^eps 2^(m/2)}, H = trace-zero elements.
inline std::size_t t_count(const WalshSpectrum& w, const Field& F, Elem b, unsigned u, unsigned eps) {
    const std::int64_t amp = std::int64_t{1} << (w.n_vars / 2);
    const std::int64_t target = eps ? -amp : amp;
    std::size_t c = 0;
    for (Elem l1 = 0; l1 < F.size(); ++l1) {
        if (oracle::tr(F, l1)) continue;
        for (Elem l2 = 0; l2 < F.size(); ++l2) {
            if (oracle::tr(F, l2)) continue;
            c += w.at(F.mul(b, l1) ^ l2, u) == target;
        }
    }
    return c;
}

}  // namespace seq_oracle

#endif
