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

#ifndef CYCLICBENT_LINPOLY_HPP
#define CYCLICBENT_LINPOLY_HPP

#include "cyclicbent/boolfun.hpp"
#include "cyclicbent/gf2.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyclicbent::linpoly {

using gf2::Elem;

/// L(x) = sum_i a[i] x^(2^i), exactly m coefficients.
struct LinPoly {
    gf2::FieldPtr field;
    std::vector<Elem> a;

    static LinPoly zero(gf2::FieldPtr F);
    /// x^(2^i)
    static LinPoly monomial(gf2::FieldPtr F, unsigned i, Elem coeff = 1);
    unsigned m() const { return field->degree(); }
    friend bool operator==(const LinPoly& l, const LinPoly& r) { return l.a == r.a; }
};

LinPoly operator+(const LinPoly& l, const LinPoly& r);
Elem evaluate(const LinPoly& L, Elem x);
/// tr(x L(x)) as a function on the field.
BoolFun quad_form(const LinPoly& L);
LinPoly adjoint(const LinPoly& L);
/// L + L*; its constant-position coefficient is always zero.
LinPoly symmetrize(const LinPoly& L);
/// Coefficients (a_i + a_{m-i}^(2^i)) (1 + tau^(2^i + 1)). Throws for tau in GF(2).
LinPoly phi(const LinPoly& L, Elem tau);
/// x -> (L + L*)(x) + tau (L + L*)(tau x), evaluated directly.
Elem phi_eval(const LinPoly& L, Elem tau, Elem x);

/// Rank of L as a GF(2)-linear map, through its matrix in the polynomial basis.
unsigned rank(const LinPoly& L);
unsigned kernel_dim(const LinPoly& L);

/// Twisted polynomial ring over GF(2^m): x a = a^2 x. c[i] is the coefficient of x^i.
struct SkewPoly {
    gf2::FieldPtr field;
    std::vector<Elem> c;

    /// Drops leading zeros.
    void trim();
    bool is_zero() const { return c.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    friend bool operator==(const SkewPoly& l, const SkewPoly& r) { return l.c == r.c; }
};

SkewPoly make_skew(gf2::FieldPtr F, std::vector<Elem> c);
/// sum a_i x^i
SkewPoly associated(const LinPoly& L);
/// x^m - 1
SkewPoly x_m_minus_1(gf2::FieldPtr F);
SkewPoly operator+(const SkewPoly& l, const SkewPoly& r);
SkewPoly operator*(const SkewPoly& l, const SkewPoly& r);

struct SkewDivision {
    SkewPoly quotient, remainder;
};
/// p = quotient * d + remainder, deg remainder < deg d. Throws std::domain_error for d = 0.
SkewDivision right_divide(const SkewPoly& p, const SkewPoly& d);
/// Scales on the left so the leading coefficient is 1.
SkewPoly monic(const SkewPoly& p);
/// Monic greatest common right divisor. Throws std::invalid_argument if both are zero.
SkewPoly gcrd(const SkewPoly& p, const SkewPoly& q);
/// Evaluates the skew polynomial as the linear map sum c_i x^(2^i).
Elem apply(const SkewPoly& p, Elem x);

enum class Path { Gcrd, Rank };

struct QuadraticReport {
    bool cyclic_semibent = false;
    Path path = Path::Gcrd;
    /// deg gcrd(l + l*, x^m - 1), or kernel_dim(L + L*) on the rank path.
    unsigned base_degree = 0;
    /// First tau (index order) whose phi fails, if any.
    std::optional<Elem> failing_tau;
    unsigned failing_degree = 0;
    std::size_t taus_checked = 0;
};

/// Decides whether tr(x L(x)) is cyclic semi-bent. Requires odd m.
QuadraticReport is_cyclic_semibent_quadratic(const LinPoly& L, Path path = Path::Gcrd);

/// Parses sums of terms like "x^4", "b^3*x^2", "5*x", "0x3*x^8" (b is the field generator,
/// bare integers are element indices). Exponents must be powers of two below 2^m.
LinPoly parse(gf2::FieldPtr F, std::string_view text);
std::string to_string(const LinPoly& L);

}  // namespace cyclicbent::linpoly

#endif
