#pragma once

#include <stdexcept>
#include <vector>

#include "operadlab/algebra_tools.hpp"
#include "operadlab/multilinear.hpp"
#include "operadlab/structure_algebra.hpp"

namespace operadlab {

/// Degree-1 cochain: a linear map f(e_i) = sum_k m[i*d+k] e_k.
struct Cochain1 {
    std::size_t dim;
    std::vector<Rational> m;

    Cochain1() : dim(0) {}
    explicit Cochain1(std::size_t d) : dim(d), m(d * d) {}
    Rational& at(std::size_t i, std::size_t k) { return m[i * dim + k]; }
    const Rational& at(std::size_t i, std::size_t k) const { return m[i * dim + k]; }

    Vec apply(const Vec& x) const {
        Vec out(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t k = 0; k < dim; ++k)
                if (!at(i, k).is_zero()) out[k] += x[i] * at(i, k);
        }
        return out;
    }

    static Cochain1 identity(std::size_t d) {
        Cochain1 f(d);
        for (std::size_t i = 0; i < d; ++i) f.at(i, i) = Rational(1);
        return f;
    }
};

/// Degree-2 cochain: a bilinear map phi(e_i, e_j) = sum_k m[(i*d+j)*d+k] e_k.
struct Cochain2 {
    std::size_t dim;
    std::vector<Rational> m;

    Cochain2() : dim(0) {}
    explicit Cochain2(std::size_t d) : dim(d), m(d * d * d) {}
    Rational& at(std::size_t i, std::size_t j, std::size_t k) {
        return m[(i * dim + j) * dim + k];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return m[(i * dim + j) * dim + k];
    }

    Vec eval(const Vec& x, const Vec& y) const {
        Vec out(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                Rational f = x[i] * y[j];
                for (std::size_t k = 0; k < dim; ++k)
                    if (!at(i, j, k).is_zero()) out[k] += f * at(i, j, k);
            }
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& x : m)
            if (!x.is_zero()) return false;
        return true;
    }

    /// The multiplication itself as a 2-cochain.
    static Cochain2 of_product(const StructureAlgebra& a) {
        Cochain2 phi(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                for (std::size_t k = 0; k < a.dim(); ++k) phi.at(i, j, k) = a.c(i, j, k);
        return phi;
    }
};

/// Degree-3 multilinear map (the target of delta^2).
struct Trilinear {
    std::size_t dim;
    std::vector<Rational> m;

    explicit Trilinear(std::size_t d) : dim(d), m(d * d * d * d) {}
    Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return m[((i * dim + j) * dim + k) * dim + l];
    }
    bool is_zero() const {
        for (const auto& x : m)
            if (!x.is_zero()) return false;
        return true;
    }
};

/// delta^1 f(a,b) = f(a)b + a f(b) - f(ab).
inline Cochain2 delta1(const StructureAlgebra& alg, const Cochain1& f) {
    std::size_t d = alg.dim();
    Cochain2 out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec ea = alg.basis_vector(i), eb = alg.basis_vector(j);
            Vec v = alg.multiply(f.apply(ea), eb);
            Vec t = alg.multiply(ea, f.apply(eb));
            Vec u = f.apply(alg.product(i, j));
            for (std::size_t k = 0; k < d; ++k) out.at(i, j, k) = v[k] + t[k] - u[k];
        }
    return out;
}

/// delta^2 phi(a,b,c) = phi(ab,c) + phi(ba,c) - phi(a,bc) - phi(b,ac)
///                    + phi(a,b)c + phi(b,a)c - a phi(b,c) - b phi(a,c).
/// The sign joining the paper's two display lines is "+": it is the
/// t-linearization of the left-alternative identity for mu + t*phi, and the
/// derivation is pinned by the deformation_order1_check equivalence test.
inline Trilinear delta2(const StructureAlgebra& alg, const Cochain2& phi) {
    std::size_t d = alg.dim();
    Trilinear out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec ea = alg.basis_vector(i), eb = alg.basis_vector(j), ec = alg.basis_vector(k);
                Vec acc(d);
                auto add = [&](const Vec& v, int s) {
                    for (std::size_t l = 0; l < d; ++l)
                        acc[l] += s < 0 ? -v[l] : v[l];
                };
                add(phi.eval(alg.product(i, j), ec), 1);
                add(phi.eval(alg.product(j, i), ec), 1);
                add(phi.eval(ea, alg.product(j, k)), -1);
                add(phi.eval(eb, alg.product(i, k)), -1);
                add(alg.multiply(phi.eval(ea, eb), ec), 1);
                add(alg.multiply(phi.eval(eb, ea), ec), 1);
                add(alg.multiply(ea, phi.eval(eb, ec)), -1);
                add(alg.multiply(eb, phi.eval(ea, ec)), -1);
                for (std::size_t l = 0; l < d; ++l) out.at(i, j, k, l) = acc[l];
            }
    return out;
}

/// True iff the t^1-coefficient of A_{mu_t} ∘ Phi_{v_{G2}} vanishes for
/// mu_t = mu + t*phi; computed directly from the deformation, independently
/// of delta2. Requires a left-alternative input.
inline bool deformation_order1_check(const StructureAlgebra& alg, const Cochain2& phi) {
    if (!identity_holds(alg, subgroup_vector(2)))
        throw std::invalid_argument("deformation_order1_check: input is not left-alternative");
    std::size_t d = alg.dim();
    auto t1_associator = [&](const Vec& x, const Vec& y, const Vec& z) {
        // t-linear part of mu_t(mu_t(x,y),z) - mu_t(x,mu_t(y,z))
        Vec v = phi.eval(alg.multiply(x, y), z);
        Vec t = alg.multiply(phi.eval(x, y), z);
        Vec u = phi.eval(x, alg.multiply(y, z));
        Vec w = alg.multiply(x, phi.eval(y, z));
        for (std::size_t l = 0; l < d; ++l) v[l] += t[l] - u[l] - w[l];
        return v;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec ea = alg.basis_vector(i), eb = alg.basis_vector(j), ec = alg.basis_vector(k);
                Vec s = t1_associator(ea, eb, ec);
                Vec t = t1_associator(eb, ea, ec);
                for (std::size_t l = 0; l < d; ++l)
                    if (!(s[l] + t[l]).is_zero()) return false;
            }
    return true;
}

/// dim Hom(P!(p) ⊗_{Sigma_p} V^{⊗p}, V) where P!(p) is presented by the
/// degree-3 word identities: the coinvariant space is realized as the
/// quotient of V^{⊗p} by the folded relation images.
inline std::size_t cochain_space_dim(const std::vector<MonomialIdentity>& ids, int p,
                                     std::size_t adim) {
    if (p < 1 || p > 6) throw std::out_of_range("cochain_space_dim: degree out of range");
    if (p == 1) return adim * adim;
    std::size_t tensors = 1;
    for (int i = 0; i < p; ++i) tensors *= adim;
    if (p == 2) return tensors * adim;   // no degree-2 relations

    auto words = all_permutations(p);
    SparseEchelon u;
    bool full = false;
    detail::multilinear_relation_rows(ids, p, [&](SparseVec row) {
        if (full) return;
        // fold the word relation through every tensor basis element
        std::vector<std::size_t> t(static_cast<std::size_t>(p), 0);
        while (true) {
            SparseVec folded;
            for (const auto& [j, cf] : row) {
                const auto& img = words[static_cast<std::size_t>(j)].images();
                std::int64_t idx = 0;
                for (int i = 0; i < p; ++i)
                    idx = idx * static_cast<std::int64_t>(adim) +
                          static_cast<std::int64_t>(t[static_cast<std::size_t>(img[static_cast<std::size_t>(i)] - 1)]);
                folded.emplace_back(idx, cf);
            }
            std::sort(folded.begin(), folded.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            SparseVec merged;
            for (auto& [c, x] : folded) {
                if (!merged.empty() && merged.back().first == c) merged.back().second += x;
                else merged.emplace_back(c, x);
            }
            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                        [](const auto& q) { return q.second.is_zero(); }),
                         merged.end());
            if (!merged.empty()) u.insert(std::move(merged));
            if (u.rank() == tensors) { full = true; return; }
            int i = p - 1;
            while (i >= 0 && ++t[static_cast<std::size_t>(i)] == adim) {
                t[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
    });
    return (tensors - u.rank()) * adim;
}

}  // namespace operadlab
