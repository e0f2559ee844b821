#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "operadlab/matrix.hpp"
#include "operadlab/operad3.hpp"
#include "operadlab/trees.hpp"

namespace operadlab {

namespace detail {

// Tree with exactly one ternary vertex: the placement skeleton for an
// arity-3 relation inside an arity-n tree monomial.
struct CtxNode {
    int kind;   // 1 = leaf, 2 = binary, 3 = ternary
    std::vector<CtxNode> ch;
    int nleaves;
};

inline std::vector<CtxNode> ctx_trees(int n, int t) {
    if (n == 1) {
        if (t == 0) return {CtxNode{1, {}, 1}};
        return {};
    }
    std::vector<CtxNode> out;
    for (int ls = n - 1; ls >= 1; --ls) {
        for (int lt = 0; lt <= t; ++lt) {
            for (const auto& L : ctx_trees(ls, lt))
                for (const auto& R : ctx_trees(n - ls, t - lt))
                    out.push_back(CtxNode{2, {L, R}, n});
        }
    }
    if (t >= 1) {
        for (int a = 1; a <= n - 2; ++a)
            for (int b = 1; b <= n - a - 1; ++b) {
                int c = n - a - b;
                for (int ta = 0; ta < t; ++ta)
                    for (int tb = 0; tb < t - ta; ++tb) {
                        int tc = t - 1 - ta - tb;
                        if (tc < 0) continue;
                        for (const auto& A : ctx_trees(a, ta))
                            for (const auto& B : ctx_trees(b, tb))
                                for (const auto& C : ctx_trees(c, tc))
                                    out.push_back(CtxNode{3, {A, B, C}, n});
                    }
            }
    }
    return out;
}

struct BuiltShape {
    int arity;
    int shape;
    std::vector<int> positions;   // original leaf positions, new left-to-right order
};

inline BuiltShape join2(const BuiltShape& l, const BuiltShape& r) {
    const auto& reg = ShapeRegistry::instance();
    BuiltShape out;
    out.arity = l.arity + r.arity;
    out.shape = reg.intern(out.arity, {l.arity, l.shape, r.shape});
    out.positions = l.positions;
    out.positions.insert(out.positions.end(), r.positions.begin(), r.positions.end());
    return out;
}

// Fill the ternary vertex with the arity-3 monomial (shape3, q): subtree
// q(1) becomes the monomial's first input, etc.
inline BuiltShape build_ctx(const CtxNode& node, int shape3, const Permutation& q,
                            int& pos_counter) {
    if (node.kind == 1) {
        return {1, 0, {pos_counter++}};
    }
    if (node.kind == 2) {
        BuiltShape l = build_ctx(node.ch[0], shape3, q, pos_counter);
        BuiltShape r = build_ctx(node.ch[1], shape3, q, pos_counter);
        return join2(l, r);
    }
    BuiltShape sub[3];
    for (int k = 0; k < 3; ++k) sub[k] = build_ctx(node.ch[k], shape3, q, pos_counter);
    const BuiltShape& a = sub[q(1) - 1];
    const BuiltShape& b = sub[q(2) - 1];
    const BuiltShape& c = sub[q(3) - 1];
    return shape3 == 0 ? join2(join2(a, b), c)    // (x.x).x
                       : join2(a, join2(b, c));   // x.(x.x)
}

}  // namespace detail

/// Arity-n component of the operadic ideal generated by arity-3 relations:
/// spanned by all leaf-labeled trees with one vertex filled by a generator.
class IdealComponent {
public:
    IdealComponent(const OperadSpec& spec, int n, bool allow_arity6 = false) : arity_(n) {
        if (n < 3 || n > 6 || (n == 6 && !allow_arity6))
            throw std::out_of_range("ideal_component: arity out of supported range");
        ambient_ = free_operad_dim(n);
        auto perms = all_permutations(n);
        std::set<SparseVec> seen;
        for (const auto& ctx : detail::ctx_trees(n, 1)) {
            // result shape + leaf-position map for each of the 12 monomial slots
            std::vector<detail::BuiltShape> slot(12);
            for (int s3 = 0; s3 < 2; ++s3)
                for (std::size_t qi = 0; qi < 6; ++qi) {
                    int counter = 0;
                    slot[s3 * 6 + qi] = detail::build_ctx(ctx, s3, sigma3()[qi], counter);
                }
            for (const auto& lab : perms) {
                for (const auto& g : spec.generators) {
                    SparseVec row;
                    for (std::size_t m = 0; m < kArity3Dim; ++m) {
                        if (g[m].is_zero()) continue;
                        const auto& bs = slot[m];
                        std::vector<int> newlab(n);
                        for (int i = 0; i < n; ++i)
                            newlab[i] = lab(bs.positions[i] + 1);
                        std::int64_t col =
                            static_cast<std::int64_t>(
                                TreeMonomial{n, bs.shape, newlab}.index());
                        row.emplace_back(col, g[m]);
                    }
                    std::sort(row.begin(), row.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    if (row.empty()) continue;
                    SparseVec key = row;
                    Rational lead = key.front().second;
                    for (auto& [c, x] : key) x /= lead;
                    if (!seen.insert(std::move(key)).second) continue;
                    ech_.insert(std::move(row));
                }
            }
        }
    }

    int arity() const { return arity_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return ech_.rank(); }
    bool contains(const SparseVec& v) const { return ech_.contains(v); }

private:
    int arity_;
    std::size_t ambient_;
    SparseEchelon ech_;
};

/// dim P(n) for P = Gamma(E)/(R): ambient minus the ideal rank.
inline std::size_t operad_dim(const OperadSpec& spec, int n, bool allow_arity6 = false) {
    if (n == 1) return 1;
    if (n == 2) return 2;
    IdealComponent ideal(spec, n, allow_arity6);
    return ideal.ambient_dim() - ideal.dim();
}

}  // namespace operadlab
