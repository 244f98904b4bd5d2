/*
   Copyright 2026 The schur-cyclic Authors

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

#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "schur/gf.hpp"

namespace schur {

/*
 * Dense univariate polynomial over a fixed FieldCtx.  Coefficients run from
 * degree 0 upward and are kept trimmed, so the leading coefficient is nonzero
 * unless the polynomial is zero (empty coefficient vector, degree -1).
 *
 * Binary operations require both operands to share the same context object.
 */
class Poly {
public:
    static Poly zero(std::shared_ptr<const FieldCtx> f);
    static Poly one(std::shared_ptr<const FieldCtx> f);
    static Poly x(std::shared_ptr<const FieldCtx> f);
    static Poly monomial(std::shared_ptr<const FieldCtx> f, size_t degree, FqElem c);
    static Poly from_coeffs(std::shared_ptr<const FieldCtx> f, std::vector<FqElem> coeffs);
    static Poly x_pow_n_minus_one(std::shared_ptr<const FieldCtx> f, uint64_t n);

    const std::shared_ptr<const FieldCtx>& field() const { return f_; }
    int64_t degree() const { return int64_t(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    FqElem coeff(size_t i) const { return i < c_.size() ? c_[i] : FqElem{0}; }
    const std::vector<FqElem>& coeffs() const { return c_; }
    FqElem leading() const { return c_.empty() ? FqElem{0} : c_.back(); }

    Poly plus(const Poly& b) const;
    Poly minus(const Poly& b) const;
    Poly times(const Poly& b) const;
    Poly scaled(FqElem c) const;
    /* multiply by X^j */
    Poly shifted_up(size_t j) const;
    std::pair<Poly, Poly> divmod(const Poly& b) const;
    Poly mod(const Poly& b) const { return divmod(b).second; }
    Poly make_monic() const;
    FqElem eval(FqElem point) const;

    std::string to_string() const;

    friend Poly operator+(const Poly& a, const Poly& b) { return a.plus(b); }
    friend Poly operator-(const Poly& a, const Poly& b) { return a.minus(b); }
    friend Poly operator*(const Poly& a, const Poly& b) { return a.times(b); }
    friend bool operator==(const Poly& a, const Poly& b)
    {
        return a.f_.get() == b.f_.get() && a.c_ == b.c_;
    }

private:
    Poly(std::shared_ptr<const FieldCtx> f, std::vector<FqElem> c);
    void trim();
    void check_same_field(const Poly& b) const;

    std::shared_ptr<const FieldCtx> f_;
    std::vector<FqElem> c_;
};

/* Monic greatest common divisor (zero if both inputs are zero). */
Poly poly_gcd(Poly a, Poly b);

}  // namespace schur
