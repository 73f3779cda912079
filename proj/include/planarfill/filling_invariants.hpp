#pragma once

// Homology of the allowable Lefschetz fibration over D^2 built from a
// positive factorization. The fiber D_n contributes one 0-handle and n
// 1-handles; each vanishing cycle attaches a 2-handle. A cycle enclosing
// holes A has class sum_{i in A} e_i in H_1(D_n) = Z^n, so
//   chi = 1 - n + m,
//   H_1 = coker(Z^m -> Z^n) given by the m x n class matrix,
//   b_2 = m - rank of the class matrix.

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "planarfill/mcg_core.hpp"
#include "planarfill/solver.hpp"

namespace planarfill {

using IntMatrix = std::vector<std::vector<long long>>;

struct SmithForm {
    std::vector<long long> diagonal;  // nonzero invariant factors d_1 | d_2 | ..., all positive
    std::size_t rows = 0;
    std::size_t cols = 0;

    std::size_t rank() const noexcept { return diagonal.size(); }
};

// Smith normal form by unimodular row and column operations. Pivots are
// chosen with least absolute value, which keeps entries bounded by the
// input for 0/1 class matrices; every operation is overflow-checked.
inline SmithForm smith_normal_form(IntMatrix a) {
    SmithForm out;
    out.rows = a.size();
    out.cols = a.empty() ? 0 : a.front().size();
    const std::size_t m = out.rows, n = out.cols;
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("ragged matrix");

    auto row_op = [&](std::size_t dst, std::size_t src, long long f) {  // row dst -= f * row src
        for (std::size_t c = 0; c < n; ++c) a[dst][c] = checked::sub(a[dst][c], checked::mul(f, a[src][c]));
    };
    auto col_op = [&](std::size_t dst, std::size_t src, long long f) {
        for (std::size_t r = 0; r < m; ++r) a[r][dst] = checked::sub(a[r][dst], checked::mul(f, a[r][src]));
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            // least nonzero |entry| in the trailing block
            std::size_t pr = m, pc = n;
            for (std::size_t r = t; r < m; ++r)
                for (std::size_t c = t; c < n; ++c)
                    if (a[r][c] != 0 && (pr == m || std::llabs(a[r][c]) < std::llabs(a[pr][pc]))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == m) {
                std::sort(out.diagonal.begin(), out.diagonal.end());
                return out;
            }
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t r = t + 1; r < m; ++r)
                if (a[r][t] != 0) {
                    row_op(r, t, a[r][t] / a[t][t]);
                    if (a[r][t] != 0) clean = false;
                }
            for (std::size_t c = t + 1; c < n; ++c)
                if (a[t][c] != 0) {
                    col_op(c, t, a[t][c] / a[t][t]);
                    if (a[t][c] != 0) clean = false;
                }
            if (!clean) continue;

            // pivot must divide the rest of the block
            bool divides = true;
            for (std::size_t r = t + 1; r < m && divides; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        for (std::size_t k = 0; k < n; ++k) a[t][k] = checked::add(a[t][k], a[r][k]);
                        divides = false;
                        break;
                    }
            if (!divides) continue;
            out.diagonal.push_back(std::llabs(a[t][t]));
            break;
        }
    }
    std::sort(out.diagonal.begin(), out.diagonal.end());
    return out;
}

struct FillingHomology {
    long long euler = 0;
    long long b2 = 0;
    std::vector<long long> torsion;  // invariant factors > 1
    long long free_rank = 0;

    // e.g. {"Z/2", "Z"}; empty when H_1 is trivial
    std::vector<std::string> h1() const {
        std::vector<std::string> v;
        for (long long d : torsion) v.push_back("Z/" + std::to_string(d));
        for (long long i = 0; i < free_rank; ++i) v.emplace_back("Z");
        return v;
    }

    bool h1_trivial() const { return torsion.empty() && free_rank == 0; }

    bool operator==(const FillingHomology&) const = default;
};

inline IntMatrix class_matrix(const MonodromyWord& w) {
    IntMatrix rows;
    for (const auto& t : w.twists()) {
        std::vector<long long> row(static_cast<std::size_t>(w.holes()), 0);
        for (Hole h : t.set) row[static_cast<std::size_t>(h)] = 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline FillingHomology filling_homology(const MonodromyWord& w) {
    if (!w.all_positive()) throw NotPositive("a Lefschetz fibration needs a word of positive twists");
    for (const auto& t : w.twists()) t.validate(w.surface());
    const long long n = w.holes();
    const long long m = static_cast<long long>(w.size());
    FillingHomology h;
    h.euler = 1 - n + m;
    if (m == 0) {
        h.free_rank = n;
        return h;
    }
    auto snf = smith_normal_form(class_matrix(w));
    const auto rank = static_cast<long long>(snf.rank());
    h.b2 = m - rank;
    h.free_rank = n - rank;
    for (long long d : snf.diagonal)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

inline FillingHomology filling_homology(const Factorization& f) { return filling_homology(f.to_word()); }

}  // namespace planarfill
