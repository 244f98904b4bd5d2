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

namespace schur {

/* Element of GF(p^e), packed in base p: v = c_0 + c_1*p + ... + c_{e-1}*p^{e-1}. */
struct FqElem {
    uint32_t v = 0;
    friend bool operator==(const FqElem&, const FqElem&) = default;
    friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/*
 * Arithmetic context for GF(p^e), immutable once built and shared by every
 * object living over the same field.
 *
 * The canonical context for (p, e) uses the monic primitive modulus with the
 * least packed encoding, so element encodings are reproducible across runs
 * and processes.  Multiplication and inversion go through log/antilog tables
 * whenever q <= 2^20; the table-free routines stay public because they are
 * the reference the tables are differentially tested against.
 */
class FieldCtx {
public:
    /* q = p^e must stay within the supported envelope. */
    static constexpr uint64_t max_q = uint64_t(1) << 24;

    /* Canonical (memoized) context for GF(p^e). */
    static std::shared_ptr<const FieldCtx> get(uint32_t p, uint32_t e);

    /* Context with an explicit monic irreducible modulus, low to high degree,
     * length e+1.  Not memoized. */
    static std::shared_ptr<const FieldCtx> with_modulus(uint32_t p,
                                                        const std::vector<uint32_t>& modulus);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return mod_; }

    FqElem zero() const { return {0}; }
    FqElem one() const { return {1}; }
    /* A fixed primitive element (order q-1). */
    FqElem generator() const { return gen_; }
    FqElem from_value(uint32_t v) const;
    /* Base-p digits of the packed encoding, length e. */
    std::vector<uint32_t> coeffs(FqElem a) const;
    FqElem from_coeffs(const std::vector<uint32_t>& c) const;

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    FqElem inv(FqElem a) const;
    FqElem div(FqElem a, FqElem b) const;
    FqElem pow(FqElem a, uint64_t k) const;
    /* Multiplicative order; a must be nonzero. */
    uint64_t ord(FqElem a) const;

    /* Table-free reference path (always available). */
    FqElem add_generic(FqElem a, FqElem b) const;
    FqElem mul_generic(FqElem a, FqElem b) const;
    FqElem inv_generic(FqElem a) const;
    bool has_tables() const { return !exp_.empty(); }

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

private:
    FieldCtx(uint32_t p, uint32_t e, std::vector<uint32_t> modulus);

    FqElem pow_generic(FqElem a, uint64_t k) const;

    uint32_t p_, e_, q_;
    std::vector<uint32_t> mod_;
    FqElem gen_;
    std::vector<uint64_t> group_factors_;  // distinct primes of q-1
    std::vector<uint32_t> exp_;            // exp_[i] = generator^i, i < q-1
    std::vector<uint32_t> log_;            // log_[exp_[i]] = i
};

}  // namespace schur
