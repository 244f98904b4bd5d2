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

#include "schur/restricted.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "schur/extension.hpp"
#include "schur/poly.hpp"

namespace schur {

namespace {

/* q^k when it fits in 63 bits, 0 otherwise. */
uint64_t pow_fits(uint32_t q, uint32_t k) {
    unsigned __int128 v = 1;
    for (uint32_t i = 0; i < k; ++i) {
        v *= q;
        if (v >> 63) return 0;
    }
    return uint64_t(v);
}

void check_params(uint32_t q, uint32_t k, uint32_t s) {
    if (q < 2) throw std::invalid_argument("digit base must be at least 2");
    if (s < 1 || s > k) throw std::invalid_argument("window length must satisfy 1 <= s <= k");
}

/* k base-q digits of t, least significant first, in a reused buffer. */
const std::vector<uint32_t>& digits_of(uint64_t t, uint32_t q, uint32_t k) {
    thread_local std::vector<uint32_t> d;
    d.assign(k, 0);
    for (uint32_t i = 0; i < k && t > 0; ++i) {
        d[i] = uint32_t(t % q);
        t /= q;
    }
    return d;
}

/* Largest t whose cyclic s-windows all have digit sum <= cap, built digit
 * by digit from the most significant end.  A nonnegative budget also caps
 * the total digit sum.  Unplaced digits count as zero, so a partial string
 * that passes extends to a full one (pad with zeros), and the most
 * significant feasible digit always dominates any smaller choice. */
uint64_t greedy_extremal(uint32_t q, uint32_t k, uint32_t s, uint32_t cap,
                         int64_t budget) {
    std::vector<uint32_t> dig(k, 0);
    auto windows_ok = [&]() {
        for (uint32_t i = 0; i < k; ++i) {
            uint64_t w = 0;
            for (uint32_t j = 0; j < s; ++j) w += dig[(i + j) % k];
            if (w > cap) return false;
        }
        return true;
    };
    int64_t spent = 0;
    for (uint32_t pos = 0; pos < k; ++pos) {
        for (uint32_t d = q - 1; d > 0; --d) {
            if (budget >= 0 && spent + d > budget) continue;
            dig[pos] = d;
            if (windows_ok()) {
                spent += d;
                break;
            }
            dig[pos] = 0;
        }
    }
    uint64_t value = 0;
    for (uint32_t i = 0; i < k; ++i) value = value * q + dig[i];
    return value;
}

/* Binary closed form: floor(k/s) blocks of m ones then s-m zeros, and ones
 * on the top of the k mod s leftover low positions until s-m trailing
 * zeros remain. */
uint64_t closed_b(uint32_t k, uint32_t s, uint32_t m) {
    uint64_t v = 0;
    for (uint32_t i = 0; i < k / s; ++i)
        for (uint32_t j = 1; j <= m; ++j) v += uint64_t(1) << (k - i * s - j);
    uint32_t rem = k % s;
    for (uint32_t i = s - m; i < rem; ++i) v += uint64_t(1) << i;
    return v;
}

/* Same shape with window cap 2m, then the lowest ones swapped back to zero
 * until the digit budget 2*floor(mk/s) is met. */
uint64_t closed_bhat(uint32_t k, uint32_t s, uint32_t m) {
    uint64_t v = 0;
    for (uint32_t i = 0; i < k / s; ++i)
        for (uint32_t j = 1; j <= 2 * m; ++j) v += uint64_t(1) << (k - i * s - j);
    int64_t rem = k % s;
    int64_t slack = 2 * int64_t((uint64_t(m) * k) / s) - int64_t(2 * m) * (k / s);
    int64_t u = std::max<int64_t>(int64_t(s) - 2 * m, rem - slack);
    for (int64_t i = u; i < rem; ++i) v += uint64_t(1) << i;
    return v;
}

void append_flag(TableRow& row, const char* flag) { row.flags.emplace_back(flag); }

bool dsq_exact_family(uint32_t q, uint32_t k, uint32_t s, uint32_t m) {
    if (q != 2 || k % s != 0) return false;
    return (s == 3 && m == 1) || (s == 5 && m == 2);
}

}  // namespace

uint32_t wq(uint64_t t, uint32_t q, uint32_t k) {
    check_params(q, k, k);
    uint64_t cap = pow_fits(q, k);
    if (cap != 0 && t >= cap) throw std::invalid_argument("value has more than k digits");
    uint32_t w = 0;
    while (t > 0) {
        w += uint32_t(t % q);
        t /= q;
    }
    return w;
}

uint32_t wqs(uint64_t t, uint32_t q, uint32_t k, uint32_t s) {
    check_params(q, k, s);
    uint64_t cap = pow_fits(q, k);
    if (cap != 0 && t >= cap) throw std::invalid_argument("value has more than k digits");
    const std::vector<uint32_t>& dig = digits_of(t, q, k);
    uint64_t w = 0;
    for (uint32_t j = 0; j < s; ++j) w += dig[j];
    uint64_t best = w;
    for (uint32_t i = 1; i < k; ++i) {
        w += dig[(i + s - 1) % k];
        w -= dig[i - 1];
        best = std::max(best, w);
    }
    return uint32_t(best);
}

IndexSet w_set(const RWParams& p) {
    check_params(p.q, p.k, p.s);
    uint64_t size = pow_fits(p.q, p.k);
    if (size == 0 || size > IndexSet::max_n)
        throw std::invalid_argument("q^k too large to enumerate");
    uint64_t n = size - 1;
    IndexSet w(n, p.q);
    for (uint64_t t = 0; t < n; ++t)
        if (wqs(t, p.q, p.k, p.s) <= p.m) w.insert(t);
    if (!w.is_coset_union())
        throw std::logic_error("restricted-weight set is not closed under the coset shift");
    return w;
}

std::vector<uint64_t> walk_members(uint32_t q, uint32_t k, uint32_t s, uint32_t m) {
    check_params(q, k, s);
    if (pow_fits(q, k) == 0) throw std::invalid_argument("q^k too large to enumerate");
    std::vector<uint64_t> out;
    std::vector<uint32_t> dig(k, 0);
    // Digits are placed most significant first; the window ending at the
    // current position is complete, so an overfull one prunes the branch.
    // Windows wrapping around the ends stay incomplete until the last digit
    // and are checked at the leaves.
    auto rec = [&](auto&& self, uint32_t pos) -> void {
        if (pos == k) {
            for (uint32_t i = k - s + 1; i < k; ++i) {
                uint64_t w = 0;
                for (uint32_t j = 0; j < s; ++j) w += dig[(i + j) % k];
                if (w > m) return;
            }
            uint64_t value = 0;
            for (uint32_t i = 0; i < k; ++i) value = value * q + dig[i];
            out.push_back(value);
            return;
        }
        uint32_t lo = pos >= s - 1 ? pos - (s - 1) : 0;
        uint64_t placed = 0;
        for (uint32_t i = lo; i < pos; ++i) placed += dig[i];
        for (uint32_t d = 0; d < q; ++d) {
            if (placed + d > m) break;
            dig[pos] = d;
            self(self, pos + 1);
        }
        dig[pos] = 0;
    };
    rec(rec, 0);
    // Members are residues mod q^k - 1; the all-(q-1) string aliases 0 and
    // only sneaks in under a cap of at least s(q-1).
    if (!out.empty() && out.back() == pow_fits(q, k) - 1) out.pop_back();
    return out;
}

uint64_t b_max(const RWParams& p) {
    check_params(p.q, p.k, p.s);
    if (pow_fits(p.q, p.k) == 0) throw std::invalid_argument("q^k overflows the value type");
    uint64_t greedy = greedy_extremal(p.q, p.k, p.s, p.m, -1);
    if (p.q == 2 && p.m >= 1 && p.m <= p.s - 1) {
        if (greedy != closed_b(p.k, p.s, p.m))
            throw std::logic_error("greedy maximum disagrees with the closed formula");
    }
    return greedy;
}

uint64_t bhat_max(const RWParams& p) {
    check_params(p.q, p.k, p.s);
    if (pow_fits(p.q, p.k) == 0) throw std::invalid_argument("q^k overflows the value type");
    int64_t budget = 2 * int64_t((uint64_t(p.m) * p.k) / p.s);
    uint64_t greedy = greedy_extremal(p.q, p.k, p.s, 2 * p.m, budget);
    if (p.q == 2 && p.m >= 1 && 2 * p.m <= p.s - 1) {
        if (greedy != closed_bhat(p.k, p.s, p.m))
            throw std::logic_error("greedy maximum disagrees with the closed formula");
    }
    return greedy;
}

WalkGraph build_graph(uint32_t q, uint32_t s, uint32_t m) {
    if (q < 2) throw std::invalid_argument("digit base must be at least 2");
    if (s < 2) throw std::invalid_argument("window length must be at least 2");
    if (m < 1 || m >= s) throw std::invalid_argument("weight cap must satisfy 1 <= m < s");

    constexpr size_t vertex_cap = 4096;
    WalkGraph graph;
    graph.q = q;
    graph.s = s;
    graph.m = m;

    // Vertices: (s-1)-digit strings of digit sum <= m, in increasing
    // numeric value (digit strings are most significant first).
    std::vector<uint32_t> cur(s - 1, 0);
    std::map<std::vector<uint32_t>, uint32_t> index;
    auto gen = [&](auto&& self, uint32_t pos, uint32_t sum) -> void {
        if (pos == s - 1) {
            if (graph.vertices.size() >= vertex_cap)
                throw std::invalid_argument("walk graph exceeds the vertex cap");
            index.emplace(cur, uint32_t(graph.vertices.size()));
            graph.vertices.push_back(cur);
            return;
        }
        for (uint32_t d = 0; d < q && sum + d <= m; ++d) {
            cur[pos] = d;
            self(self, pos + 1, sum + d);
        }
        cur[pos] = 0;
    };
    gen(gen, 0, 0);

    const size_t g = graph.vertices.size();
    graph.adj.assign(g, std::vector<uint8_t>(g, 0));
    for (size_t i = 0; i < g; ++i) {
        const auto& x = graph.vertices[i];
        uint32_t sum = 0;
        for (uint32_t d : x) sum += d;
        std::vector<uint32_t> y(x.begin() + 1, x.end());
        y.push_back(0);
        // Successors shift off the leading digit; the appended digit d must
        // keep the s-string (x, d) within the cap.
        for (uint32_t d = 0; d < q && sum + d <= m; ++d) {
            y[s - 2] = d;
            graph.adj[i][index.at(y)] = 1;
        }
    }

    // Traces of A^0..A^g feed Newton's identities; all arithmetic is exact.
    std::vector<std::vector<bigint>> power(g, std::vector<bigint>(g, 0));
    for (size_t i = 0; i < g; ++i) power[i][i] = 1;
    graph.traces.assign(g + 1, 0);
    graph.traces[0] = bigint(g);
    for (size_t t = 1; t <= g; ++t) {
        std::vector<std::vector<bigint>> next(g, std::vector<bigint>(g, 0));
        for (size_t i = 0; i < g; ++i)
            for (size_t u = 0; u < g; ++u) {
                if (power[i][u] == 0) continue;
                for (size_t j = 0; j < g; ++j)
                    if (graph.adj[u][j]) next[i][j] += power[i][u];
            }
        power.swap(next);
        bigint tr = 0;
        for (size_t i = 0; i < g; ++i) tr += power[i][i];
        graph.traces[t] = tr;
    }

    std::vector<bigint> e(g + 1);
    e[0] = 1;
    for (size_t i = 1; i <= g; ++i) {
        bigint acc = 0;
        for (size_t j = 1; j <= i; ++j) {
            if (j % 2 == 1)
                acc += e[i - j] * graph.traces[j];
            else
                acc -= e[i - j] * graph.traces[j];
        }
        if (acc % int64_t(i) != 0)
            throw std::logic_error("characteristic polynomial came out non-integral");
        e[i] = acc / int64_t(i);
    }
    graph.charpoly.assign(g + 1, 0);
    graph.charpoly[g] = 1;
    for (size_t i = 1; i <= g; ++i)
        graph.charpoly[g - i] = (i % 2 == 1) ? -e[i] : e[i];
    return graph;
}

bigint n_count(const WalkGraph& graph, uint32_t k) {
    const size_t g = graph.vertices.size();
    if (g == 0) throw std::invalid_argument("walk graph has no vertices");
    if (k <= g) return graph.traces[k];
    std::vector<bigint> val(graph.traces);
    val.resize(size_t(k) + 1);
    for (size_t t = g + 1; t <= k; ++t) {
        bigint acc = 0;
        for (size_t j = 1; j <= g; ++j) acc -= graph.charpoly[g - j] * val[t - j];
        val[t] = acc;
    }
    return val[k];
}

bigint n_count(uint32_t q, uint32_t s, uint32_t m, uint32_t k) {
    return n_count(build_graph(q, s, m), k);
}

std::pair<CyclicCode, TableRow> construct_restricted(
    std::shared_ptr<const FieldCtx> base, uint32_t k, uint32_t s, uint32_t m,
    bool drop_zero) {
    if (!base) throw std::invalid_argument("construction needs a field context");
    uint32_t q = base->q();
    if (m < 1 || 2 * m > s - 1)
        throw std::invalid_argument("weight cap must satisfy 1 <= m <= (s-1)/2");
    if (s > k) throw std::invalid_argument("window length must not exceed k");
    uint64_t digit_budget = 2 * ((uint64_t(m) * k) / s);
    if (drop_zero && digit_budget >= k)
        throw std::invalid_argument("dropping zero needs 2*floor(mk/s) < k");

    RWParams p{q, k, s, m};
    IndexSet w = w_set(p);
    uint64_t n = w.n();
    IndexSet gen = w;
    if (drop_zero) {
        std::vector<uint64_t> members = w.members();
        members.erase(std::remove(members.begin(), members.end(), uint64_t(0)),
                      members.end());
        gen = IndexSet::from_members(n, q, members);
    }
    CyclicCode code = CyclicCode::from_generating_set(base, gen);

    uint64_t shift = drop_zero ? 1 : 0;
    TableRow row;
    row.k = k;
    row.n = n;
    row.dim_c = code.dim();
    row.d_c_lower = n - b_max(p) + shift;
    row.dim_csq = sumset(gen, gen).size();
    row.d_csq_lower = n - bhat_max(p) + shift;
    if (drop_zero) append_flag(row, "drop_zero");
    if (!drop_zero && dsq_exact_family(q, k, s, m)) append_flag(row, "dsq_exact");
    return {std::move(code), std::move(row)};
}

std::pair<CyclicCode, TableRow> construct_bch_t(
    std::shared_ptr<const FieldCtx> base, uint64_t n, uint64_t t) {
    if (!base) throw std::invalid_argument("construction needs a field context");
    if (n < 2) throw std::invalid_argument("length must be at least 2");
    if (t < 1 || t >= n) throw std::invalid_argument("threshold must satisfy 0 < t < n");
    uint32_t q = base->q();

    IndexSet gen(n, q);
    for (uint64_t u = 0; u <= t; ++u) {
        if (gen.contains(u)) continue;
        IndexSet cs = coset(n, q, u);
        std::vector<uint64_t> members = cs.members();
        if (*std::max_element(members.begin(), members.end()) > t) continue;
        for (uint64_t v : members) gen.insert(v);
    }
    CyclicCode code = CyclicCode::from_generating_set(base, gen);

    // The construction is guaranteed at least these many dimensions; less
    // than that means the coset scan above is broken.
    int64_t r = ord_mod(q, n);
    int64_t dim = int64_t(code.dim());
    int64_t floor1 = std::max<int64_t>(1, int64_t(n) - int64_t(n - t - 1) * r);
    if (dim < floor1)
        throw std::logic_error("dimension fell below the coset-counting floor");
    if (q == 2 && 2 * dim < std::max<int64_t>(2, 2 * int64_t(n) - int64_t(n - t) * r))
        throw std::logic_error("dimension fell below the binary coset-counting floor");

    TableRow row;
    row.k = uint32_t(r);
    row.n = n;
    row.dim_c = code.dim();
    row.d_c_lower = n - t;
    row.dim_csq = sumset(gen, gen).size();
    row.d_csq_lower = 2 * t >= n ? 1 : n - 2 * t;
    return {std::move(code), std::move(row)};
}

std::pair<CyclicCode, TableRow> construct_qweight(
    std::shared_ptr<const FieldCtx> base, uint32_t k, uint32_t h) {
    if (!base) throw std::invalid_argument("construction needs a field context");
    uint32_t q = base->q();
    if (h < 1 || 2 * h > k) throw std::invalid_argument("level must satisfy 1 <= h <= k/2");
    uint64_t size = pow_fits(q, k);
    if (size == 0 || size > IndexSet::max_n)
        throw std::invalid_argument("q^k too large to enumerate");
    uint64_t n = size - 1;
    uint64_t cap = uint64_t(q - 1) * h;

    IndexSet gen(n, q);
    for (uint64_t u = 0; u < n; ++u)
        if (wq(u, q, k) <= cap) gen.insert(u);
    CyclicCode code = CyclicCode::from_generating_set(base, gen);

    uint64_t qh = 1;
    for (uint32_t i = 0; i < k - h; ++i) qh *= q;
    uint64_t q2h = 1;
    for (uint32_t i = 0; i < k - 2 * h; ++i) q2h *= q;

    TableRow row;
    row.k = k;
    row.n = n;
    row.dim_c = code.dim();
    row.d_c_lower = qh - 1;
    row.dim_csq = sumset(gen, gen).size();
    row.d_csq_lower = std::max<uint64_t>(1, q2h - 1);
    return {std::move(code), std::move(row)};
}

std::vector<FqElem> special_low_weight_word(uint32_t k, uint32_t family_s) {
    if (family_s != 3 && family_s != 5)
        throw std::invalid_argument("only the window-3 and window-5 families apply");
    if (k % family_s != 0)
        throw std::invalid_argument("the window length must divide k");
    uint32_t m = family_s == 3 ? 1 : 2;
    auto base = FieldCtx::get(2, 1);
    auto [code, row] = construct_restricted(base, k, family_s, m, false);
    CyclicCode square = code.square();

    uint64_t n = row.n;
    uint64_t p = (uint64_t(1) << family_s) - 1;
    uint64_t step = n / p;
    // (X^n - 1)/(X^step - 1) evaluates to 1 exactly at the p-th roots of
    // unity among the powers of the primitive root, so the evaluation
    // vector has weight n/p.
    std::vector<FqElem> coeffs(size_t(n - step) + 1, base->zero());
    for (uint64_t i = 0; i < p; ++i) coeffs[size_t(i * step)] = base->one();
    Poly f = Poly::from_coeffs(base, std::move(coeffs));

    const auto& ext = *code.ext();
    std::vector<FqElem> word(static_cast<size_t>(n));
    uint64_t weight = 0;
    for (uint64_t j = 0; j < n; ++j) {
        word[size_t(j)] = ext.project(ext.eval_lifted(f, ext.beta_pow(j)));
        if (!(word[size_t(j)] == base->zero())) ++weight;
    }
    if (weight != step)
        throw std::logic_error("evaluation word missed the expected weight");
    if (!square.contains(word))
        throw std::logic_error("evaluation word fell outside the square");
    return word;
}

std::vector<TableRow> table(TableId which, uint32_t k_min, uint32_t k_max) {
    const uint32_t s = which == TableId::t1 ? 3 : 5;
    const uint32_t m = which == TableId::t1 ? 1 : 2;
    uint32_t lo = std::max(k_min, s);
    if (k_max < lo) throw std::invalid_argument("empty k range");
    if (k_max > 26) throw std::invalid_argument("k above the enumeration cap");

    WalkGraph graph = build_graph(2, s, m);
    std::vector<TableRow> rows;
    uint64_t d = (uint64_t(1) << (s - 1)) - 1;
    uint64_t dh = (uint64_t(1) << (s - 2)) - 1;
    if (which == TableId::t2) {
        d = 7;
        dh = 1;
    }
    for (uint32_t k = s; k <= k_max; ++k) {
        if (k > s) {
            if (which == TableId::t1) {
                d = k % 3 == 0 ? 2 * d - 3 : 2 * d + 1;
                dh = k % 3 == 0 ? 2 * dh - 5 : 2 * dh + 1;
            } else {
                d = (k % 5 == 0 || k % 5 == 4) ? 2 * d - 7 : 2 * d + 1;
                dh = (k % 5 == 0 || k % 5 == 3) ? 2 * dh - 5 : 2 * dh + 1;
            }
        }
        if (k < lo) continue;

        uint64_t n = (uint64_t(1) << k) - 1;
        uint64_t dim = n_count(graph, k).convert_to<uint64_t>();
        std::vector<uint64_t> members = walk_members(2, k, s, m);
        if (members.size() != dim)
            throw std::logic_error("walk enumeration disagrees with the trace recurrence");
        IndexSet w = IndexSet::from_members(n, 2, members);

        TableRow row;
        row.k = k;
        row.n = n;
        row.dim_c = dim;
        row.d_c_lower = d;
        row.dim_csq = sumset(w, w).size();
        row.d_csq_lower = dh;
        if (k % s == 0) append_flag(row, "dsq_exact");
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace schur
