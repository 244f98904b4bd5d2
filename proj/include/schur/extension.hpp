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

#include <cstdint>
#include <memory>
#include <vector>

#include "schur/gf.hpp"
#include "schur/poly.hpp"

namespace schur {

/* Least r >= 1 with q^r = 1 (mod n); requires gcd(n, q) = 1. */
uint32_t ord_mod(uint64_t q, uint64_t n);

/*
 * The splitting-field context for X^n - 1 over GF(q): the extension
 * GF(q^r) with r = ord_n(q), together with a fixed primitive n-th root of
 * unity beta and the change-of-basis data needed to move elements between
 * the base field and the extension.
 *
 * beta = gamma^((q^r-1)/n) for the canonical generator gamma of GF(q^r),
 * so every derived quantity is reproducible across runs.
 *
 * flatten() writes a big-field element in the basis {1, x, ..., x^{r-1}}
 * (x the residue class of the big modulus) with coefficients in the
 * embedded base field; coordinate 0 is the base component.
 */
class ExtensionCtx {
public:
    static std::shared_ptr<const ExtensionCtx> build(std::shared_ptr<const FieldCtx> base,
                                                     uint64_t n, uint32_t r_cap = 24);

    const std::shared_ptr<const FieldCtx>& base() const { return base_; }
    const std::shared_ptr<const FieldCtx>& big() const { return big_; }
    uint64_t n() const { return n_; }
    uint32_t r() const { return r_; }
    FqElem beta() const { return beta_; }
    /* beta^(i mod n) */
    FqElem beta_pow(uint64_t i) const;

    FqElem embed(FqElem a) const;
    std::vector<FqElem> flatten(FqElem z) const;
    FqElem unflatten(const std::vector<FqElem>& coords) const;
    bool in_base(FqElem z) const;
    /* inverse of embed; rejects elements outside the embedded base field */
    FqElem project(FqElem z) const;

    /* Evaluate a base-field polynomial at a big-field point. */
    FqElem eval_lifted(const Poly& f, FqElem point) const;

    ExtensionCtx(const ExtensionCtx&) = delete;
    ExtensionCtx& operator=(const ExtensionCtx&) = delete;

private:
    ExtensionCtx() = default;

    std::shared_ptr<const FieldCtx> base_, big_;
    uint64_t n_ = 0;
    uint32_t r_ = 0;
    FqElem beta_{0};
    std::vector<FqElem> embed_;      // base value -> big value
    std::vector<FqElem> beta_pow_;   // cached when n is small enough
    std::vector<uint32_t> flat_;     // (e*r) x (e*r) matrix over F_p, row-major
};

/* Minimal polynomial over GF(q) of beta^i, i.e. the product of X - beta^j
 * over the q-cyclotomic coset of i mod n. */
Poly minimal_poly(const ExtensionCtx& ext, uint64_t i);

}  // namespace schur
