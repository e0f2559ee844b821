#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "operadlab/matrix.hpp"
#include "operadlab/structure_algebra.hpp"

namespace operadlab {

namespace detail {

// Column of d_n for the tensor basis element with digits t (length n+1):
// d_n(a_0,...,a_n) = (a_0 a_1, a_2,...) + sum (-1)^i (..., a_i a_{i+1}, ...)
//                  + (-1)^n (a_n a_0, a_1, ..., a_{n-1}).
inline SparseVec boundary_column(const StructureAlgebra& a, int n,
                                 const std::vector<std::size_t>& t) {
    std::size_t d = a.dim();
    std::vector<std::pair<std::int64_t, Rational>> acc;
    auto add = [&](const Vec& prod, const std::vector<std::size_t>& pre,
                   const std::vector<std::size_t>& suf, int sign) {
        for (std::size_t k = 0; k < d; ++k) {
            if (prod[k].is_zero()) continue;
            std::int64_t idx = 0;
            for (auto x : pre) idx = idx * static_cast<std::int64_t>(d) + static_cast<std::int64_t>(x);
            idx = idx * static_cast<std::int64_t>(d) + static_cast<std::int64_t>(k);
            for (auto x : suf) idx = idx * static_cast<std::int64_t>(d) + static_cast<std::int64_t>(x);
            acc.emplace_back(idx, sign < 0 ? -prod[k] : prod[k]);
        }
    };
    add(a.product(t[0], t[1]), {}, std::vector<std::size_t>(t.begin() + 2, t.end()), 1);
    for (int i = 1; i < n; ++i)
        add(a.product(t[i], t[i + 1]), std::vector<std::size_t>(t.begin(), t.begin() + i),
            std::vector<std::size_t>(t.begin() + i + 2, t.end()), i % 2 ? -1 : 1);
    add(a.product(t[n], t[0]), {}, std::vector<std::size_t>(t.begin() + 1, t.begin() + n),
        n % 2 ? -1 : 1);
    std::sort(acc.begin(), acc.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVec out;
    for (auto& [c, v] : acc) {
        if (!out.empty() && out.back().first == c) out.back().second += v;
        else out.emplace_back(c, v);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& p) { return p.second.is_zero(); }),
              out.end());
    return out;
}

template <typename ColFn>
void for_each_tensor(std::size_t d, int len, ColFn&& fn) {
    std::vector<std::size_t> t(static_cast<std::size_t>(len), 0);
    while (true) {
        fn(t);
        int i = len - 1;
        while (i >= 0 && ++t[static_cast<std::size_t>(i)] == d) {
            t[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
}

inline std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace detail

/// Matrix of d_n : A^{(n+1)} -> A^{(n)} in the tensor basis (dense; rows are
/// indexed by C_{n-1} basis tensors, columns by C_n basis tensors).
inline Matrix boundary_matrix(const StructureAlgebra& a, int n) {
    if (n < 1) throw std::invalid_argument("boundary_matrix: degree must be >= 1");
    std::size_t rows = detail::ipow(a.dim(), n);
    std::size_t cols = detail::ipow(a.dim(), n + 1);
    Matrix m(rows, cols);
    std::size_t col = 0;
    detail::for_each_tensor(a.dim(), n + 1, [&](const std::vector<std::size_t>& t) {
        for (const auto& [r, v] : detail::boundary_column(a, n, t))
            m.at(static_cast<std::size_t>(r), col) = v;
        ++col;
    });
    return m;
}

inline std::size_t boundary_rank(const StructureAlgebra& a, int n) {
    SparseEchelon ech;
    detail::for_each_tensor(a.dim(), n + 1, [&](const std::vector<std::size_t>& t) {
        ech.insert(detail::boundary_column(a, n, t));
    });
    return ech.rank();
}

/// True iff d_n ∘ d_{n+1} = 0 (checked exactly, column by column).
inline bool boundary_squares_to_zero(const StructureAlgebra& a, int n) {
    bool ok = true;
    detail::for_each_tensor(a.dim(), n + 2, [&](const std::vector<std::size_t>& t) {
        if (!ok) return;
        SparseVec col = detail::boundary_column(a, n + 1, t);
        std::vector<Rational> acc(detail::ipow(a.dim(), n));
        for (const auto& [j, cf] : col) {
            std::vector<std::size_t> tt(static_cast<std::size_t>(n) + 1);
            std::int64_t rest = j;
            for (int p = n; p >= 0; --p) {
                tt[static_cast<std::size_t>(p)] = static_cast<std::size_t>(rest % a.dim());
                rest /= static_cast<std::int64_t>(a.dim());
            }
            for (const auto& [r, v] : detail::boundary_column(a, n, tt))
                acc[static_cast<std::size_t>(r)] += cf * v;
        }
        for (const auto& x : acc)
            if (!x.is_zero()) { ok = false; return; }
    });
    return ok;
}

struct DegreeReport {
    int degree;
    std::size_t dim_chain;     // dim C_n = dim^(n+1)
    std::size_t rank_d;        // rank d_n
    std::size_t dim_kernel;    // dim Ker d_n
    std::size_t dim_image_next;  // dim Im d_{n+1}
    long dim_homology;         // dim H_n
};

struct ComplexReport {
    bool associative_input;
    bool warning;              // set when the input is not associative
    std::vector<DegreeReport> degrees;
};

/// Exact homology dimensions H_1..H_{up_to}. For non-associative input the
/// differential need not square to zero; raw ranks are reported with a flag.
inline ComplexReport homology_dims(const StructureAlgebra& a, int up_to) {
    if (up_to < 1) throw std::invalid_argument("homology_dims: up_to must be >= 1");
    ComplexReport rep;
    rep.associative_input = a.is_associative();
    rep.warning = !rep.associative_input;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(up_to) + 2, 0);
    for (int n = 1; n <= up_to + 1; ++n)
        ranks[static_cast<std::size_t>(n)] = boundary_rank(a, n);
    for (int n = 1; n <= up_to; ++n) {
        DegreeReport d;
        d.degree = n;
        d.dim_chain = detail::ipow(a.dim(), n + 1);
        d.rank_d = ranks[static_cast<std::size_t>(n)];
        d.dim_kernel = d.dim_chain - d.rank_d;
        d.dim_image_next = ranks[static_cast<std::size_t>(n) + 1];
        d.dim_homology = static_cast<long>(d.dim_kernel) - static_cast<long>(d.dim_image_next);
        rep.degrees.push_back(d);
    }
    return rep;
}

/// Membership of a chain in Im d_n (the chain lives in C_{n-1}).
inline bool in_boundary_image(const StructureAlgebra& a, int n, const SparseVec& target) {
    SparseEchelon ech;
    detail::for_each_tensor(a.dim(), n + 1, [&](const std::vector<std::size_t>& t) {
        ech.insert(detail::boundary_column(a, n, t));
    });
    return ech.contains(target);
}

/// Index of the basis tensor (i_0,...,i_n) in C_n.
inline std::int64_t tensor_index(const StructureAlgebra& a, const std::vector<std::size_t>& t) {
    std::int64_t idx = 0;
    for (auto x : t) idx = idx * static_cast<std::int64_t>(a.dim()) + static_cast<std::int64_t>(x);
    return idx;
}

}  // namespace operadlab
