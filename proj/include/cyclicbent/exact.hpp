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

#ifndef CYCLICBENT_EXACT_HPP
#define CYCLICBENT_EXACT_HPP

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace cyclicbent {

using Rational = boost::rational<std::int64_t>;

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// Gaussian integer. Codebook entries, sequence values and correlations all live here.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussInt() = default;
    constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

    constexpr std::int64_t norm() const { return re * re + im * im; }
    constexpr GaussInt conj() const { return {re, -im}; }

    constexpr GaussInt& operator+=(GaussInt o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    constexpr GaussInt& operator-=(GaussInt o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend constexpr GaussInt operator+(GaussInt a, GaussInt b) { return a += b; }
    friend constexpr GaussInt operator-(GaussInt a, GaussInt b) { return a -= b; }
    friend constexpr GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
    friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr bool operator==(GaussInt, GaussInt) = default;
    friend constexpr auto operator<=>(GaussInt, GaussInt) = default;
};

/// "3", "-2i", "1+4i", "-1-1i".
std::string to_string(GaussInt z);

}  // namespace cyclicbent

#endif
