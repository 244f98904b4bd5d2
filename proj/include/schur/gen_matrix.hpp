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
#include <optional>
#include <vector>

#include "schur/gf.hpp"

namespace schur {

struct DistanceBudget {
    /* enumerate the whole code iff q^rank <= 2^exhaustive_cap_bits */
    uint32_t exhaustive_cap_bits = 26;
    /* random words tried past the cap; 0 means report the bound only */
    uint64_t samples = 100000;
    uint64_t seed = 0;
    /* a trusted lower bound; a sampled witness matching it certifies exactness */
    std::optional<uint64_t> known_lower;
};

enum class DistanceMethod { exhaustive, witness, bound_only };

struct DistanceResult {
    uint64_t value = 0;
    bool exact = false;
    DistanceMethod method = DistanceMethod::bound_only;
    std::vector<FqElem> witness;  // a codeword of weight `value` unless bound_only
    uint64_t seed = 0;
};

/*
 * Generator matrix over a FieldCtx.  GF(2) matrices are stored bit-packed
 * (64 coordinates per word); other fields use one encoded element per entry.
 * The packed kernels are differentially tested against the generic ones,
 * which force_generic() exposes on the same data.
 *
 * normalized() returns the canonical reduced row-echelon basis with zero
 * rows dropped, so row spaces are equal exactly when normalized rows match.
 */
class GenMatrix {
public:
    GenMatrix(std::shared_ptr<const FieldCtx> f, uint64_t n);
    static GenMatrix from_rows(std::shared_ptr<const FieldCtx> f, uint64_t n,
                               const std::vector<std::vector<FqElem>>& rows);
    static GenMatrix identity(std::shared_ptr<const FieldCtx> f, uint64_t n);

    const std::shared_ptr<const FieldCtx>& field() const { return f_; }
    uint64_t length() const { return n_; }
    size_t row_count() const;
    std::vector<FqElem> row(size_t i) const;
    void append_row(const std::vector<FqElem>& r);

    GenMatrix normalized() const;
    uint64_t rank() const;
    bool row_space_equals(const GenMatrix& other) const;

    /* Span of all coordinatewise products of codeword pairs. */
    GenMatrix schur_square() const;
    /* Rank of the Schur square without materializing a reduced basis. */
    uint64_t schur_square_rank() const;

    GenMatrix puncture(const std::vector<uint64_t>& positions) const;
    GenMatrix shorten(const std::vector<uint64_t>& positions) const;
    GenMatrix repeat(uint32_t copies) const;
    /* Basis of {x : G x^T = 0}. */
    GenMatrix nullspace() const;

    DistanceResult min_distance(const DistanceBudget& budget = {}) const;

    bool packed() const { return packed_; }
    /* Same matrix, generic storage; every operation then runs the generic path. */
    GenMatrix force_generic() const;

private:
    void pack_row(const std::vector<FqElem>& r);
    std::vector<std::vector<uint32_t>> generic_rows() const;

    std::shared_ptr<const FieldCtx> f_;
    uint64_t n_;
    bool packed_;
    std::vector<std::vector<uint64_t>> wrows_;
    std::vector<std::vector<uint32_t>> grows_;
};

/* Evaluations of polynomials of degree <= m at the given distinct points. */
GenMatrix reed_solomon(std::shared_ptr<const FieldCtx> f,
                       const std::vector<FqElem>& points, uint32_t m);

/* Binary Reed-Muller code RM(r, k): multilinear monomials of degree <= r
 * evaluated on all of GF(2)^k, points in increasing binary order. */
GenMatrix reed_muller(uint32_t r, uint32_t k);

struct ConcatParams {
    uint64_t length;
    uint64_t dim;
    uint64_t d_square_lower;
};

/* Parameters of the outer-RS/inner-repetition concatenation family;
 * requires m * (q^s + 1) < q^(2s+1). */
ConcatParams concat_params(uint32_t q, uint32_t s, uint64_t m);

}  // namespace schur
