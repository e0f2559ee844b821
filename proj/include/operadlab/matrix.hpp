#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "operadlab/rational.hpp"

namespace operadlab {

using Vec = std::vector<Rational>;

/// Dense rational matrix. Immutable after construction; all queries pure.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }
    static Matrix from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vec row(std::size_t i) const {
        return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Vec apply(const Vec& x) const {
        if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: size");
        Vec y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
        return y;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

namespace detail {

// Reduced row echelon form with deterministic pivoting (first nonzero in
// column order). Returns pivot columns; rows holds the rref basis.
inline std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols) {
    std::vector<Vec> basis;
    std::vector<std::size_t> pivots;
    for (auto& r : rows) {
        Vec v = std::move(r);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rational& f = v[pivots[b]];
            if (!f.is_zero()) {
                Rational c = f;
                for (std::size_t j = 0; j < cols; ++j)
                    if (!basis[b][j].is_zero()) v[j] -= c * basis[b][j];
            }
        }
        std::size_t lead = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (!v[j].is_zero()) { lead = j; break; }
        if (lead == cols) continue;
        Rational c = v[lead];
        for (auto& x : v) x /= c;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rational& f = basis[b][lead];
            if (!f.is_zero()) {
                Rational g = f;
                for (std::size_t j = 0; j < cols; ++j)
                    if (!v[j].is_zero()) basis[b][j] -= g * v[j];
            }
        }
        basis.push_back(std::move(v));
        pivots.push_back(lead);
    }
    // sort rows by pivot column for a canonical result
    std::vector<std::size_t> order(pivots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (pivots[order[j]] < pivots[order[i]]) std::swap(order[i], order[j]);
    std::vector<Vec> sorted;
    std::vector<std::size_t> spiv;
    for (auto k : order) {
        sorted.push_back(std::move(basis[k]));
        spiv.push_back(pivots[k]);
    }
    rows = std::move(sorted);
    return spiv;
}

}  // namespace detail

inline std::size_t rank(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return detail::rref(rows, m.cols()).size();
}

/// Basis of the right null space {v : m v = 0}. Deterministic: vectors are
/// indexed by the free columns of the rref in increasing order.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    auto pivots = detail::rref(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Rational(1);
        for (std::size_t b = 0; b < rows.size(); ++b) v[pivots[b]] = -rows[b][f];
        out.push_back(std::move(v));
    }
    return out;
}

// ---- span utilities -------------------------------------------------------

inline void check_ambient(const std::vector<Vec>& vs) {
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (vs[i].size() != vs[0].size())
            throw std::invalid_argument("ambient dimension mismatch");
}

inline std::size_t subspace_dim(std::vector<Vec> spanning) {
    if (spanning.empty()) return 0;
    check_ambient(spanning);
    return detail::rref(spanning, spanning[0].size()).size();
}

inline bool subspace_contains(std::vector<Vec> spanning, const Vec& v) {
    if (spanning.empty()) {
        for (auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    check_ambient(spanning);
    if (v.size() != spanning[0].size())
        throw std::invalid_argument("ambient dimension mismatch");
    std::size_t cols = v.size();
    auto pivots = detail::rref(spanning, cols);
    Vec w = v;
    for (std::size_t b = 0; b < spanning.size(); ++b) {
        const Rational& f = w[pivots[b]];
        if (!f.is_zero()) {
            Rational c = f;
            for (std::size_t j = 0; j < cols; ++j)
                if (!spanning[b][j].is_zero()) w[j] -= c * spanning[b][j];
        }
    }
    for (auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

inline bool subspace_equal(std::vector<Vec> a, std::vector<Vec> b) {
    if (a.empty() && b.empty()) return true;
    std::size_t cols = a.empty() ? b[0].size() : a[0].size();
    auto pa = detail::rref(a, cols);
    auto pb = detail::rref(b, cols);
    return pa == pb && a == b;
}

// ---- sparse incremental echelon -------------------------------------------

/// Sorted (column, coefficient) pairs; used for the large combinatorial
/// matrices (arity-5 free operad, degree-6 multilinear components).
using SparseVec = std::vector<std::pair<std::int64_t, Rational>>;

/// Incremental echelon over sparse rows. Rank and row membership only;
/// insertion order does not affect the rank.
class SparseEchelon {
public:
    /// Reduce and insert; returns true if the row increased the rank.
    bool insert(SparseVec row) {
        if (!reduce(row)) return false;
        const Rational lead = row.front().second;
        if (!(lead == Rational(1)))
            for (auto& [c, x] : row) x /= lead;
        std::int64_t col = row.front().first;
        pivot_of_col_[col] = rows_.size();
        rows_.push_back(std::move(row));
        return true;
    }

    /// True iff the row lies in the span of the inserted rows.
    bool contains(SparseVec row) const { return !reduce(row); }

    std::size_t rank() const { return rows_.size(); }

private:
    // Reduce against current pivots; returns false when row vanished.
    bool reduce(SparseVec& row) const {
        while (!row.empty()) {
            auto it = pivot_of_col_.find(row.front().first);
            if (it == pivot_of_col_.end()) return true;
            axpy(row, -row.front().second, rows_[it->second]);
        }
        return false;
    }

    // row += c * other (sorted merge; both sorted by column).
    static void axpy(SparseVec& row, const Rational& c, const SparseVec& other) {
        SparseVec out;
        out.reserve(row.size() + other.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < other.size()) {
            if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
                out.push_back(std::move(row[i++]));
            } else if (i == row.size() || other[j].first < row[i].first) {
                out.emplace_back(other[j].first, c * other[j].second);
                ++j;
            } else {
                Rational v = row[i].second + c * other[j].second;
                if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
                ++i, ++j;
            }
        }
        row = std::move(out);
    }

    std::vector<SparseVec> rows_;
    std::map<std::int64_t, std::size_t> pivot_of_col_;
};

inline SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) s.emplace_back(static_cast<std::int64_t>(j), v[j]);
    return s;
}

}  // namespace operadlab
