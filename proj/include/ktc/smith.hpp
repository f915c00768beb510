#pragma once

#include <cstdint>
#include <queue>
#include <vector>
#include <algorithm>

#include "bigint.hpp"
#include "cube_complex.hpp"  // for Error

namespace ktc {

using DenseMat = std::vector<std::vector<BigInt>>;

struct SnfResult {
    std::vector<BigInt> factors;  // positive invariant factors, d_i | d_{i+1}
    size_t rank() const { return factors.size(); }
    bool has_transforms = false;
    DenseMat U, V;  // U*A*V = diag(factors) when has_transforms
};

// ---------------------------------------------------------------------------
// dense SNF; pivot = smallest nonzero magnitude, lowest (row, col) tiebreak

namespace snf_detail {

inline void row_axpy(DenseMat& m, size_t dst, size_t src, const BigInt& q) {
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}
inline void col_axpy(DenseMat& m, size_t dst, size_t src, const BigInt& q) {
    for (size_t i = 0; i < m.size(); ++i) m[i][dst] -= q * m[i][src];
}
inline void row_swap(DenseMat& m, size_t a, size_t b) { std::swap(m[a], m[b]); }
inline void col_swap(DenseMat& m, size_t a, size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}
inline void row_neg(DenseMat& m, size_t a) {
    for (auto& x : m[a]) x.negate();
}

}  // namespace snf_detail

inline SnfResult smith_normal_form_dense(DenseMat a, bool want_transforms) {
    using namespace snf_detail;
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    SnfResult out;
    out.has_transforms = want_transforms;
    if (want_transforms) {
        out.U.assign(m, std::vector<BigInt>(m));
        out.V.assign(n, std::vector<BigInt>(n));
        for (size_t i = 0; i < m; ++i) out.U[i][i] = BigInt(1);
        for (size_t j = 0; j < n; ++j) out.V[j][j] = BigInt(1);
    }
    size_t t = 0;
    while (t < m && t < n) {
        // pivot: smallest nonzero magnitude, lowest (row, col)
        size_t pr = m, pc = n;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                if (a[i][j].is_zero()) continue;
                if (pr == m || BigInt::cmp_abs(a[i][j], a[pr][pc]) < 0) { pr = i; pc = j; }
            }
        if (pr == m) break;
        if (pr != t) { row_swap(a, pr, t); if (want_transforms) row_swap(out.U, pr, t); }
        if (pc != t) { col_swap(a, pc, t); if (want_transforms) col_swap(out.V, pc, t); }

        bool stable = false;
        while (!stable) {
            stable = true;
            // clear column t
            for (size_t i = t + 1; i < m; ++i) {
                if (a[i][t].is_zero()) continue;
                BigInt q, r;
                BigInt::divmod(a[i][t], a[t][t], q, r);
                if (!q.is_zero()) { row_axpy(a, i, t, q); if (want_transforms) row_axpy(out.U, i, t, q); }
                if (!a[i][t].is_zero()) {
                    row_swap(a, i, t);
                    if (want_transforms) row_swap(out.U, i, t);
                    stable = false;
                }
            }
            if (!stable) continue;
            // clear row t
            for (size_t j = t + 1; j < n; ++j) {
                if (a[t][j].is_zero()) continue;
                BigInt q, r;
                BigInt::divmod(a[t][j], a[t][t], q, r);
                if (!q.is_zero()) { col_axpy(a, j, t, q); if (want_transforms) col_axpy(out.V, j, t, q); }
                if (!a[t][j].is_zero()) {
                    col_swap(a, j, t);
                    if (want_transforms) col_swap(out.V, j, t);
                    stable = false;
                }
            }
            if (!stable) continue;
            // pivot must divide the rest of the submatrix
            for (size_t i = t + 1; i < m && stable; ++i)
                for (size_t j = t + 1; j < n && stable; ++j) {
                    if (a[i][j].is_zero()) continue;
                    BigInt q, r;
                    BigInt::divmod(a[i][j], a[t][t], q, r);
                    if (!r.is_zero()) {
                        row_axpy(a, t, i, BigInt(-1));
                        if (want_transforms) row_axpy(out.U, t, i, BigInt(-1));
                        stable = false;
                    }
                }
        }
        if (a[t][t].sign() < 0) { row_neg(a, t); if (want_transforms) row_neg(out.U, t); }
        ++t;
    }
    for (size_t i = 0; i < t; ++i) out.factors.push_back(a[i][i]);
    return out;
}

// ---------------------------------------------------------------------------
// sparse matrix + SNF

struct SparseMat {
    int64_t nrows = 0, ncols = 0;
    std::vector<std::vector<std::pair<int32_t, BigInt>>> col;  // sorted by row
    std::vector<std::vector<int32_t>> rowcols;                 // candidate cols per row (lazy)
    std::vector<int32_t> colnnz, rownnz;

    void init(int64_t r, int64_t c) {
        nrows = r;
        ncols = c;
        col.assign(c, {});
        rowcols.assign(r, {});
        colnnz.assign(c, 0);
        rownnz.assign(r, 0);
    }
    void add_entry(int32_t r, int32_t c, BigInt v) {
        if (v.is_zero()) return;
        col[c].push_back({r, std::move(v)});
    }
    void finish() {
        for (int64_t c = 0; c < ncols; ++c) {
            auto& v = col[c];
            std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
            // combine duplicates
            std::vector<std::pair<int32_t, BigInt>> out;
            for (auto& e : v) {
                if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
                else out.push_back(std::move(e));
            }
            out.erase(std::remove_if(out.begin(), out.end(), [](auto& e) { return e.second.is_zero(); }),
                      out.end());
            v = std::move(out);
            colnnz[c] = static_cast<int32_t>(v.size());
            for (auto& e : v) {
                rowcols[e.first].push_back(static_cast<int32_t>(c));
                ++rownnz[e.first];
            }
        }
    }
    const BigInt* at(int32_t r, int32_t c) const {
        const auto& v = col[c];
        auto it = std::lower_bound(v.begin(), v.end(), r,
                                   [](const std::pair<int32_t, BigInt>& e, int32_t key) { return e.first < key; });
        if (it != v.end() && it->first == r) return &it->second;
        return nullptr;
    }
    // col[dst] -= q * col[src]; registers new candidate rows
    void col_axpy(int32_t dst, int32_t src, const BigInt& q) {
        const auto& s = col[src];
        auto& d = col[dst];
        std::vector<std::pair<int32_t, BigInt>> out;
        out.reserve(d.size() + s.size());
        size_t i = 0, j = 0;
        while (i < d.size() || j < s.size()) {
            if (j == s.size() || (i < d.size() && d[i].first < s[j].first)) {
                out.push_back(std::move(d[i++]));
            } else if (i == d.size() || s[j].first < d[i].first) {
                BigInt v = BigInt(0) - q * s[j].second;
                if (!v.is_zero()) {
                    rowcols[s[j].first].push_back(dst);
                    ++rownnz[s[j].first];
                    out.push_back({s[j].first, std::move(v)});
                }
                ++j;
            } else {
                BigInt v = std::move(d[i].second);
                v -= q * s[j].second;
                if (!v.is_zero()) out.push_back({d[i].first, std::move(v)});
                else --rownnz[d[i].first];
                ++i;
                ++j;
            }
        }
        colnnz[dst] = static_cast<int32_t>(out.size());
        col[dst] = std::move(out);
    }
    void clear_col(int32_t c) {
        for (auto& e : col[c]) --rownnz[e.first];
        col[c].clear();
        colnnz[c] = 0;
    }
    void remove_entry(int32_t r, int32_t c) {
        auto& v = col[c];
        auto it = std::lower_bound(v.begin(), v.end(), r,
                                   [](const std::pair<int32_t, BigInt>& e, int32_t key) { return e.first < key; });
        if (it != v.end() && it->first == r) {
            v.erase(it);
            --colnnz[c];
            --rownnz[r];
        }
    }
    // live columns of a row (filters stale candidates in place)
    void live_cols(int32_t r, std::vector<int32_t>& out) {
        out.clear();
        auto& cand = rowcols[r];
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::vector<int32_t> keep;
        for (int32_t c : cand)
            if (at(r, c)) keep.push_back(c);
        cand = std::move(keep);
        out = cand;
    }
};

// diagonal entries -> invariant factors (gcd/lcm sorting)
inline std::vector<BigInt> diagonal_to_factors(std::vector<BigInt> diag) {
    for (auto& d : diag) d = d.abs();
    size_t ones = 0;
    std::vector<BigInt> rest;
    for (auto& d : diag) {
        if (d.is_zero()) continue;
        if (d.is_one()) ++ones;
        else rest.push_back(std::move(d));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < rest.size(); ++i)
            for (size_t j = i + 1; j < rest.size(); ++j) {
                BigInt g = BigInt::gcd(rest[i], rest[j]);
                if (g == rest[i]) continue;  // already divides
                BigInt l = (rest[i] / g) * rest[j];
                rest[i] = g;
                rest[j] = l;
                changed = true;
            }
    }
    std::sort(rest.begin(), rest.end());
    std::vector<BigInt> out(ones, BigInt(1));
    for (auto& d : rest) {
        if (d.is_one()) out.insert(out.begin(), BigInt(1));
        else out.push_back(std::move(d));
    }
    return out;
}

// Sparse SNF: greedy +-1 pivots chosen by fill cost, then Euclidean steps on
// the leftovers, then a gcd/lcm pass to put the diagonal in divisibility
// order.  Factors agree with the dense routine; no transforms.
inline SnfResult smith_normal_form_sparse(SparseMat& a) {
    struct Cand {
        int64_t cost;
        int32_t r, c;
        bool operator<(const Cand& o) const {
            if (cost != o.cost) return cost > o.cost;  // min-heap
            if (r != o.r) return r > o.r;
            return c > o.c;
        }
    };
    std::priority_queue<Cand> heap;
    auto push_units_of_col = [&](int32_t c) {
        for (auto& e : a.col[c])
            if (e.second.is_pm_one())
                heap.push({int64_t(a.rownnz[e.first] - 1) * (a.colnnz[c] - 1), e.first, c});
    };
    for (int64_t c = 0; c < a.ncols; ++c) push_units_of_col(static_cast<int32_t>(c));

    std::vector<BigInt> diag;
    std::vector<int32_t> tmp_cols;

    auto eliminate_unit = [&](int32_t r, int32_t c) {
        // clear row r with column operations (pivot is +-1), then drop the
        // rest of column c (row ops against the now-singleton row r)
        const BigInt pivot = *a.at(r, c);
        a.live_cols(r, tmp_cols);
        for (int32_t j : tmp_cols) {
            if (j == c) continue;
            const BigInt* v = a.at(r, j);
            if (!v) continue;
            BigInt q = *v;
            if (pivot.sign() < 0) q.negate();
            a.col_axpy(j, c, q);
            push_units_of_col(j);
        }
        a.clear_col(c);
        diag.push_back(pivot.abs());
    };

    for (;;) {
        // unit-pivot phase
        bool progressed = false;
        while (!heap.empty()) {
            Cand t = heap.top();
            heap.pop();
            const BigInt* v = a.at(t.r, t.c);
            if (!v || !v->is_pm_one()) continue;
            int64_t cost = int64_t(a.rownnz[t.r] - 1) * (a.colnnz[t.c] - 1);
            if (cost > t.cost) {
                heap.push({cost, t.r, t.c});
                continue;
            }
            eliminate_unit(t.r, t.c);
            progressed = true;
        }
        // find any remaining nonzero: Euclidean phase
        int32_t pr = -1, pc = -1;
        {
            const BigInt* best = nullptr;
            for (int64_t c = 0; c < a.ncols; ++c)
                for (auto& e : a.col[c]) {
                    if (e.second.is_zero()) continue;
                    if (!best || BigInt::cmp_abs(e.second, *best) < 0) {
                        best = &e.second;
                        pr = e.first;
                        pc = static_cast<int32_t>(c);
                    }
                }
        }
        if (pr < 0) break;
        // reduce row pr and column pc against the pivot until it divides both
        for (;;) {
            const BigInt pivot = *a.at(pr, pc);
            bool clean = true;
            a.live_cols(pr, tmp_cols);
            for (int32_t j : tmp_cols) {
                if (j == pc) continue;
                const BigInt* v = a.at(pr, j);
                if (!v) continue;
                BigInt q, rr;
                BigInt::divmod(*v, pivot, q, rr);
                if (!q.is_zero()) {
                    a.col_axpy(j, pc, q);
                    push_units_of_col(j);
                }
                if (a.at(pr, j)) {
                    pc = j;  // smaller remainder becomes the pivot
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            // row ops against the singleton row: modifies only column pc
            bool col_clean = true;
            {
                auto entries = a.col[pc];  // copy: we mutate below
                for (auto& e : entries) {
                    if (e.first == pr) continue;
                    BigInt q, rr;
                    BigInt::divmod(e.second, pivot, q, rr);
                    a.remove_entry(e.first, pc);
                    if (!rr.is_zero()) {
                        a.add_entry(e.first, pc, rr);
                        auto& v = a.col[pc];
                        std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });
                        a.colnnz[pc] = static_cast<int32_t>(v.size());
                        ++a.rownnz[e.first];
                        a.rowcols[e.first].push_back(pc);
                        pr = e.first;  // smaller remainder becomes the pivot
                        col_clean = false;
                        break;
                    }
                }
            }
            if (!col_clean) continue;
            diag.push_back(pivot.abs());
            a.clear_col(pc);
            break;
        }
        if (!progressed && pr < 0) break;
    }
    SnfResult out;
    out.factors = diagonal_to_factors(std::move(diag));
    return out;
}

inline SnfResult smith_normal_form(const DenseMat& a, bool want_transforms = false) {
    size_t m = a.size(), n = m ? a[0].size() : 0;
    if (want_transforms || n < 64) return smith_normal_form_dense(a, want_transforms);
    SparseMat s;
    s.init(static_cast<int64_t>(m), static_cast<int64_t>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!a[i][j].is_zero()) s.add_entry(static_cast<int32_t>(i), static_cast<int32_t>(j), a[i][j]);
    s.finish();
    return smith_normal_form_sparse(s);
}

} // namespace ktc
