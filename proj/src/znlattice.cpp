#include "decforge/znlattice.hpp"

#include "decforge/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace decforge {

namespace {

std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        fail(Err::InternalInconsistency, "integer overflow in lattice arithmetic");
    return static_cast<std::int64_t>(v);
}

// row r2 -= q * r1
void row_axpy(ZRow& r2, const ZRow& r1, std::int64_t q) {
    for (std::size_t j = 0; j < r2.size(); ++j)
        r2[j] = checked(static_cast<__int128>(r2[j]) -
                        static_cast<__int128>(q) * r1[j]);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

// Unimodular row reduction to echelon form over columns [0, climit).
// Returns the rank; rows beyond it vanish on those columns.
int hnf_core(ZMat& rows, std::size_t climit) {
    std::size_t pr = 0;
    for (std::size_t col = 0; col < climit && pr < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = pr; r < rows.size(); ++r)
                if (rows[r][col] != 0 &&
                    (best == rows.size() ||
                     std::llabs(rows[r][col]) < std::llabs(rows[best][col])))
                    best = r;
            if (best == rows.size()) break; // no pivot in this column
            std::swap(rows[pr], rows[best]);
            bool clean = true;
            for (std::size_t r = pr + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                row_axpy(rows[r], rows[pr], rows[r][col] / rows[pr][col]);
                if (rows[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[pr].empty() || rows[pr][col] == 0) continue;
        if (rows[pr][col] < 0)
            for (auto& x : rows[pr]) x = -x;
        for (std::size_t r = 0; r < pr; ++r)
            row_axpy(rows[r], rows[pr], floor_div(rows[r][col], rows[pr][col]));
        ++pr;
    }
    return static_cast<int>(pr);
}

} // namespace

ZMat hnf_rows(ZMat m) {
    if (m.empty()) return m;
    int rank = hnf_core(m, m[0].size());
    m.resize(static_cast<std::size_t>(rank));
    return m;
}

ZMat left_kernel(const ZMat& a) {
    if (a.empty()) return {};
    std::size_t n = a[0].size(), rows = a.size();
    ZMat work(rows, ZRow(n + rows, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        std::copy(a[i].begin(), a[i].end(), work[i].begin());
        work[i][n + i] = 1;
    }
    int rank = hnf_core(work, n);
    ZMat ker;
    for (std::size_t i = static_cast<std::size_t>(rank); i < rows; ++i)
        ker.emplace_back(work[i].begin() + static_cast<long>(n), work[i].end());
    return hnf_rows(std::move(ker));
}

std::vector<std::int64_t> smith_invariants(ZMat m) {
    std::vector<std::int64_t> out;
    if (m.empty() || m[0].empty()) return out;
    std::size_t R = m.size(), C = m[0].size(), t = 0;
    auto col_axpy = [&](std::size_t c2, std::size_t c1, std::int64_t q) {
        for (std::size_t i = 0; i < R; ++i)
            m[i][c2] = checked(static_cast<__int128>(m[i][c2]) -
                               static_cast<__int128>(q) * m[i][c1]);
    };
    while (t < R && t < C) {
        std::size_t bi = R, bj = C;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j)
                if (m[i][j] != 0 && (bi == R || std::llabs(m[i][j]) <
                                                    std::llabs(m[bi][bj]))) {
                    bi = i;
                    bj = j;
                }
        if (bi == R) break; // the rest of the matrix is zero
        std::swap(m[t], m[bi]);
        for (std::size_t i = 0; i < R; ++i) std::swap(m[i][t], m[i][bj]);
        bool again = false;
        for (std::size_t i = t + 1; i < R; ++i)
            if (m[i][t] != 0) {
                row_axpy(m[i], m[t], m[i][t] / m[t][t]);
                if (m[i][t] != 0) again = true;
            }
        for (std::size_t j = t + 1; j < C; ++j)
            if (m[t][j] != 0) {
                col_axpy(j, t, m[t][j] / m[t][t]);
                if (m[t][j] != 0) again = true;
            }
        if (again) continue;
        std::int64_t d = std::llabs(m[t][t]);
        bool divides_all = true;
        for (std::size_t i = t + 1; i < R && divides_all; ++i)
            for (std::size_t j = t + 1; j < C; ++j)
                if (m[i][j] % d != 0) {
                    // fold the offending row in and redo the pivot step
                    for (std::size_t c = 0; c < C; ++c)
                        m[t][c] = checked(static_cast<__int128>(m[t][c]) +
                                          m[i][c]);
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;
        out.push_back(d);
        ++t;
    }
    while (out.size() < std::min(R, C)) out.push_back(0);
    return out;
}

bool hnf_solve(const ZMat& h, const ZRow& v, ZRow& x) {
    ZRow r = v;
    x.assign(h.size(), 0);
    for (std::size_t k = 0; k < h.size(); ++k) {
        std::size_t p = 0;
        while (p < h[k].size() && h[k][p] == 0) ++p;
        if (p == h[k].size()) continue;
        if (r[p] % h[k][p] != 0) return false;
        x[k] = r[p] / h[k][p];
        row_axpy(r, h[k], x[k]);
    }
    return std::all_of(r.begin(), r.end(),
                       [](std::int64_t z) { return z == 0; });
}

bool hnf_contains(const ZMat& h, const ZRow& v) {
    ZRow x;
    return hnf_solve(h, v, x);
}

} // namespace decforge
