#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "operadlab/matrix.hpp"
#include "operadlab/operad3.hpp"
#include "operadlab/permutation.hpp"

namespace operadlab {

/// Degree-3 multilinear identity sum_t coeff_t * (word of a,b,c) = 0,
/// each word given as a permutation of (1,2,3).
struct MonomialIdentity {
    std::vector<std::pair<Rational, Permutation>> terms;

    bool two_term_unit() const {
        return terms.size() == 2 && abs(terms[0].first) == Rational(1) &&
               abs(terms[1].first) == Rational(1);
    }

    std::string text() const {
        std::string s;
        for (const auto& [c, p] : terms) {
            s += c.sign() < 0 ? " - " : (s.empty() ? "" : " + ");
            Rational a = abs(c);
            if (!(a == Rational(1))) s += a.str() + "*";
            s += word_name(p);
        }
        return s + " = 0";
    }
};

/// Identity set of a dual presentation, one identity per echelon relation row.
inline std::vector<MonomialIdentity> identities_of(const DualPresentation& dp) {
    std::vector<MonomialIdentity> out;
    for (const auto& row : dp.word_relations) {
        MonomialIdentity id;
        for (std::size_t j = 0; j < 6; ++j)
            if (!row[j].is_zero()) id.terms.emplace_back(row[j], sigma3()[j]);
        out.push_back(std::move(id));
    }
    return out;
}

namespace detail {

// All substitutions of an identity into degree-n words: choose a consecutive
// window, split it into three nonempty blocks, apply the identity with blocks
// substituted for a,b,c (prefix and suffix untouched).
template <typename RowFn>
void multilinear_relation_rows(const std::vector<MonomialIdentity>& ids, int n,
                               RowFn&& emit) {
    auto words = all_permutations(n);
    for (const auto& w : words) {
        const auto& img = w.images();
        for (int pre = 0; pre + 3 <= n; ++pre)
            for (int b1 = 1; pre + b1 + 2 <= n; ++b1)
                for (int b2 = 1; pre + b1 + b2 + 1 <= n; ++b2)
                    for (int b3 = 1; pre + b1 + b2 + b3 <= n; ++b3) {
                        int starts[3] = {pre, pre + b1, pre + b1 + b2};
                        int lens[3] = {b1, b2, b3};
                        int wend = pre + b1 + b2 + b3;
                        for (const auto& id : ids) {
                            SparseVec row;
                            for (const auto& [coef, perm] : id.terms) {
                                std::vector<int> ww(img.begin(), img.begin() + pre);
                                for (int k = 1; k <= 3; ++k) {
                                    int blk = perm(k) - 1;
                                    for (int j = 0; j < lens[blk]; ++j)
                                        ww.push_back(img[starts[blk] + j]);
                                }
                                ww.insert(ww.end(), img.begin() + wend, img.end());
                                std::int64_t col =
                                    static_cast<std::int64_t>(Permutation(ww).lex_rank());
                                row.emplace_back(col, coef);
                            }
                            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
                                return a.first < b.first;
                            });
                            SparseVec merged;
                            for (auto& [c, x] : row) {
                                if (!merged.empty() && merged.back().first == c)
                                    merged.back().second += x;
                                else
                                    merged.emplace_back(c, x);
                            }
                            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                                        [](const auto& p) {
                                                            return p.second.is_zero();
                                                        }),
                                         merged.end());
                            if (!merged.empty()) emit(std::move(merged));
                        }
                    }
    }
}

}  // namespace detail

/// Dimension of the degree-n multilinear component of associative algebras
/// subject to the identities: n! minus the rank of the relation matrix.
inline std::size_t multilinear_dim(const std::vector<MonomialIdentity>& ids, int n) {
    if (n < 3 || n > 6) throw std::out_of_range("multilinear_dim: degree out of range");
    SparseEchelon ech;
    detail::multilinear_relation_rows(ids, n, [&](SparseVec row) { ech.insert(std::move(row)); });
    return factorial(n) - ech.rank();
}

/// Signed union-find over words; applicable when every identity is two-term
/// with unit coefficients. A sign contradiction collapses the class to zero.
struct SignTable {
    std::size_t classes = 0;        // classes not collapsed to zero
    std::size_t contradictions = 0; // classes collapsed by a sign clash
};

struct ConsistencyReport {
    std::size_t dim;                       // rank-method dimension
    std::optional<SignTable> monomial_form;
    bool methods_agree = true;             // union-find vs rank, when applicable
};

inline ConsistencyReport consistency_report(const std::vector<MonomialIdentity>& ids, int n) {
    ConsistencyReport rep{multilinear_dim(ids, n), std::nullopt, true};
    bool monomial = !ids.empty();
    for (const auto& id : ids) monomial = monomial && id.two_term_unit();
    if (!monomial) return rep;

    std::size_t nw = factorial(n);
    std::vector<std::size_t> parent(nw);
    std::vector<int> sgn(nw, 1);
    std::vector<bool> dead(nw, false);
    for (std::size_t i = 0; i < nw; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        int s = 1;
        while (parent[x] != x) { s *= sgn[x]; x = parent[x]; }
        return std::pair<std::size_t, int>(x, s);
    };
    detail::multilinear_relation_rows(ids, n, [&](SparseVec row) {
        if (row.size() == 1) {
            dead[find(static_cast<std::size_t>(row[0].first)).first] = true;
            return;
        }
        auto [i, a] = std::pair<std::int64_t, Rational>(row[0]);
        auto [j, b] = std::pair<std::int64_t, Rational>(row[1]);
        int s = (a == b) ? -1 : 1;   // w_i = s * w_j
        auto [ri, si] = find(static_cast<std::size_t>(i));
        auto [rj, sj] = find(static_cast<std::size_t>(j));
        if (ri == rj) {
            if (si != s * sj) dead[ri] = true;
            return;
        }
        bool d = dead[ri] || dead[rj];
        parent[ri] = rj;
        sgn[ri] = si * s * sj;
        dead[rj] = d;
    });
    SignTable table;
    std::vector<bool> seen(nw, false);
    for (std::size_t i = 0; i < nw; ++i) {
        auto [r, s] = find(i);
        if (seen[r]) continue;
        seen[r] = true;
        if (dead[r]) ++table.contradictions;
        else ++table.classes;
    }
    rep.methods_agree = (table.classes == rep.dim);
    rep.monomial_form = table;
    return rep;
}

/// Dimension table of a dual operad: dims[k] = dim P!(k+1), starting at
/// arity 1 with (1, 2, ...).
inline std::vector<std::size_t> dual_dim_table(const std::vector<MonomialIdentity>& ids,
                                               int max_degree) {
    std::vector<std::size_t> dims = {1, 2};
    for (int n = 3; n <= max_degree; ++n) dims.push_back(multilinear_dim(ids, n));
    dims.resize(static_cast<std::size_t>(max_degree));
    return dims;
}

}  // namespace operadlab
