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

#include "schur/extension.hpp"
#include "schur/gen_matrix.hpp"
#include "schur/gf.hpp"
#include "schur/index_set.hpp"
#include "schur/poly.hpp"

namespace schur {

struct BoundsReport {
    uint64_t n = 0;
    uint64_t dim_c = 0;
    uint64_t d_c_lower = 0;
    uint64_t dim_csq = 0;
    uint64_t d_csq_lower = 0;
    /* upper cap on the true square distance, not on the lower bound */
    uint64_t singleton_cap = 0;
};

/*
 * Cyclic code of length n over GF(q), gcd(n, q) = 1, described by its
 * generating set I (a union of q-cyclotomic cosets mod n).  The defining
 * set J is the complement of I, and the generator polynomial is
 * g = prod_{j in J} (X - beta^j), which always lands back in GF(q).
 *
 * dim = |I|; I = emptyset is the zero code with g = X^n - 1, kept
 * representable so duality closes over the extremes.
 */
class CyclicCode {
public:
    /* maximum base field size accepted for code construction */
    static constexpr uint64_t max_q = uint64_t(1) << 16;

    static CyclicCode from_generating_set(std::shared_ptr<const FieldCtx> base,
                                          const IndexSet& gen, bool auto_close = false);

    const std::shared_ptr<const FieldCtx>& field() const { return ext_->base(); }
    const std::shared_ptr<const ExtensionCtx>& ext() const { return ext_; }
    uint64_t length() const { return I_.n(); }
    uint64_t dim() const { return I_.size(); }
    bool is_zero_code() const { return I_.empty(); }
    const IndexSet& generating_set() const { return I_; }
    const IndexSet& defining_set() const { return J_; }
    const Poly& generator_poly() const { return g_; }

    /* The Schur square: the cyclic code with generating set I + I. */
    CyclicCode square() const;
    /* Dual code: generating set -J. */
    CyclicCode dual() const;
    /* Amplitude-based distance lower bounds for the code and its square. */
    BoundsReport bounds() const;

    /* dim shifted copies of g, the standard cyclic generator matrix */
    GenMatrix generator_matrix() const;
    /* membership test: the word polynomial vanishes at beta^j for j in J */
    bool contains(const std::vector<FqElem>& word) const;

private:
    CyclicCode(std::shared_ptr<const ExtensionCtx> ext, IndexSet gen);

    std::shared_ptr<const ExtensionCtx> ext_;
    IndexSet I_;
    IndexSet J_;
    Poly g_;
};

/*
 * Basis of B(M) restricted to the base field: words (f(1), f(beta), ...,
 * f(beta^{n-1})) with f supported on M over GF(q^r), kept only when every
 * coordinate lies in GF(q).  Independent of the cyclic-code layer; used as
 * an oracle against it.
 */
GenMatrix subfield_subcode(const IndexSet& m, const ExtensionCtx& ext);

/*
 * Square generator oracle: gcd of the coordinatewise products of the
 * coefficient vector of g with those of g X^j mod (X^n - 1), for
 * j = 0..dim-1, made monic.  All products zero returns X^n - 1.
 */
Poly mir12_square_generator(const CyclicCode& c);

}  // namespace schur
