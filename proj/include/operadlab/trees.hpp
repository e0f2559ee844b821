#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "operadlab/permutation.hpp"

namespace operadlab {

/// Planar binary tree shapes with n leaves, interned per arity.
/// Enumeration order: left subtree size descending, then recursively;
/// at arity 3 this puts the left comb ((x.x).x) at index 0 and the
/// right comb (x.(x.x)) at index 1.
class ShapeRegistry {
public:
    struct Node {
        int left_arity;   // 0 for the leaf (arity 1)
        int left_index;
        int right_index;
        friend bool operator<(const Node& a, const Node& b) {
            return std::tie(a.left_arity, a.left_index, a.right_index) <
                   std::tie(b.left_arity, b.left_index, b.right_index);
        }
    };

    static constexpr int kMaxArity = 8;

    static const ShapeRegistry& instance() {
        static const ShapeRegistry reg;
        return reg;
    }

    int count(int arity) const { return static_cast<int>(nodes_[arity].size()); }
    const Node& node(int arity, int index) const { return nodes_[arity][index]; }

    int intern(int arity, const Node& n) const {
        auto it = index_[arity].find(n);
        if (it == index_[arity].end())
            throw std::logic_error("ShapeRegistry: unknown shape");
        return it->second;
    }

private:
    ShapeRegistry() : nodes_(kMaxArity + 1), index_(kMaxArity + 1) {
        nodes_[1].push_back({0, 0, 0});
        index_[1][{0, 0, 0}] = 0;
        for (int n = 2; n <= kMaxArity; ++n) {
            for (int ls = n - 1; ls >= 1; --ls) {
                for (int li = 0; li < count(ls); ++li) {
                    for (int ri = 0; ri < count(n - ls); ++ri) {
                        Node nd{ls, li, ri};
                        index_[n][nd] = static_cast<int>(nodes_[n].size());
                        nodes_[n].push_back(nd);
                    }
                }
            }
        }
    }

    std::vector<std::vector<Node>> nodes_;
    mutable std::vector<std::map<Node, int>> index_;
};

/// dim Gamma(E)(n) = Catalan(n-1) * n! : 12 at n=3, 120 at n=4, 1680 at n=5.
inline std::size_t free_operad_dim(int n) {
    return static_cast<std::size_t>(ShapeRegistry::instance().count(n)) * factorial(n);
}

/// Basis monomial of the free binary operad: a planar shape with leaves
/// labeled (left to right) by a permutation of 1..n.
struct TreeMonomial {
    int arity;
    int shape;                 // index into ShapeRegistry for this arity
    std::vector<int> labels;   // labels[pos] = variable at leaf position pos

    std::size_t index() const {
        return static_cast<std::size_t>(shape) * factorial(arity) +
               Permutation(labels).lex_rank();
    }

    friend bool operator==(const TreeMonomial& a, const TreeMonomial& b) {
        return a.arity == b.arity && a.shape == b.shape && a.labels == b.labels;
    }
};

inline TreeMonomial binary_generator() { return {2, 0, {1, 2}}; }

namespace detail {

// Replace leaf at position `pos` of (arity, shape) by (s_arity, s_shape).
inline std::pair<int, int> replace_leaf(int arity, int shape, int pos,
                                        int s_arity, int s_shape) {
    const auto& reg = ShapeRegistry::instance();
    if (arity == 1) return {s_arity, s_shape};
    const auto& nd = reg.node(arity, shape);
    int ls = nd.left_arity;
    if (pos < ls) {
        auto [na, ni] = replace_leaf(ls, nd.left_index, pos, s_arity, s_shape);
        int ra = arity - ls;
        return {na + ra, reg.intern(na + ra, {na, ni, nd.right_index})};
    }
    auto [na, ni] = replace_leaf(arity - ls, nd.right_index, pos - ls, s_arity, s_shape);
    return {ls + na, reg.intern(ls + na, {ls, nd.left_index, ni})};
}

}  // namespace detail

/// Operadic partial composition t ∘_slot s: substitutes s into the leaf of t
/// labeled `slot`, with the standard re-indexing (labels of s shift by
/// slot-1, labels of t above slot shift by arity(s)-1).
inline TreeMonomial graft(const TreeMonomial& t, const TreeMonomial& s, int slot) {
    if (slot < 1 || slot > t.arity)
        throw std::out_of_range("graft: slot out of range");
    int pos = -1;
    for (std::size_t p = 0; p < t.labels.size(); ++p)
        if (t.labels[p] == slot) { pos = static_cast<int>(p); break; }
    auto [na, nshape] =
        detail::replace_leaf(t.arity, t.shape, pos, s.arity, s.shape);
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(na));
    auto shifted = [&](int l) { return l > slot ? l + s.arity - 1 : l; };
    for (int p = 0; p < pos; ++p) labels.push_back(shifted(t.labels[p]));
    for (int q = 0; q < s.arity; ++q) labels.push_back(s.labels[q] + slot - 1);
    for (std::size_t p = pos + 1; p < t.labels.size(); ++p)
        labels.push_back(shifted(t.labels[p]));
    return {na, nshape, std::move(labels)};
}

/// Leaf relabeling l -> g(l); the Sigma_n action on Gamma(E)(n).
inline TreeMonomial relabel(const Permutation& g, const TreeMonomial& t) {
    TreeMonomial out = t;
    for (auto& l : out.labels) l = g(l);
    return out;
}

}  // namespace operadlab
