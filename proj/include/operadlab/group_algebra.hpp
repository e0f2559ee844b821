#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "operadlab/matrix.hpp"
#include "operadlab/permutation.hpp"
#include "operadlab/rational.hpp"

#include <json.hpp>

namespace operadlab {

/// The six elements of Sigma_3 in lexicographic one-line order:
/// 123, 132, 213, 231, 312, 321. This order indexes every coefficient
/// vector over K[Sigma_3].
inline const std::vector<Permutation>& sigma3() {
    static const std::vector<Permutation> s = all_permutations(3);
    return s;
}

namespace sym3 {
inline Permutation id() { return Permutation({1, 2, 3}); }
inline Permutation t12() { return Permutation({2, 1, 3}); }
inline Permutation t13() { return Permutation({3, 2, 1}); }
inline Permutation t23() { return Permutation({1, 3, 2}); }
inline Permutation c() { return Permutation({2, 3, 1}); }   // 3-cycle (1,2,3)
inline Permutation c2() { return Permutation({3, 1, 2}); }
}  // namespace sym3

/// Element of the group algebra K[Sigma_3]: six rational coefficients
/// in the lexicographic order of sigma3().
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;

    Rational& operator[](const Permutation& p) { return c_[p.lex_rank()]; }
    const Rational& operator[](const Permutation& p) const { return c_[p.lex_rank()]; }
    Rational& at(std::size_t i) { return c_[i]; }
    const Rational& at(std::size_t i) const { return c_[i]; }

    Vec coefficients() const { return Vec(c_.begin(), c_.end()); }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
        for (std::size_t i = 0; i < 6; ++i) c_[i] += o.c_[i];
        return *this;
    }
    GroupAlgebraElement scaled(const Rational& r) const {
        GroupAlgebraElement out = *this;
        for (auto& x : out.c_) x *= r;
        return out;
    }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.c_ == b.c_;
    }

private:
    std::array<Rational, 6> c_{};
};

inline GroupAlgebraElement ga_from_terms(
    const std::vector<std::pair<Rational, Permutation>>& terms) {
    GroupAlgebraElement v;
    for (auto& [coef, p] : terms) v[p] += coef;
    return v;
}

/// v_{G_i} = sum of the elements of the i-th subgroup of Sigma_3
/// (paper numbering: G1={Id}, G2=<t12>, G3=<t23>, G4=<t13>, G5=<c>, G6=Sigma_3).
inline GroupAlgebraElement subgroup_vector(int i) {
    using namespace sym3;
    switch (i) {
        case 1: return ga_from_terms({{1, id()}});
        case 2: return ga_from_terms({{1, id()}, {1, t12()}});
        case 3: return ga_from_terms({{1, id()}, {1, t23()}});
        case 4: return ga_from_terms({{1, id()}, {1, t13()}});
        case 5: return ga_from_terms({{1, id()}, {1, c()}, {1, c2()}});
        case 6: {
            GroupAlgebraElement v;
            for (std::size_t k = 0; k < 6; ++k) v.at(k) = Rational(1);
            return v;
        }
        default:
            throw std::out_of_range("subgroup index must be 1..6");
    }
}

/// The other 1-dimensional invariant vector: Id - t12 - t23 - t13 + c + c^2.
inline GroupAlgebraElement lie_admissible_vector() {
    using namespace sym3;
    return ga_from_terms({{1, id()}, {-1, t12()}, {-1, t23()}, {-1, t13()},
                          {1, c()}, {1, c2()}});
}

/// Left action (sigma, sum a_i sigma_i) -> sum a_i sigma^{-1} ∘ sigma_i.
inline GroupAlgebraElement act(const Permutation& s, const GroupAlgebraElement& v) {
    GroupAlgebraElement w;
    Permutation si = s.inverse();
    for (std::size_t i = 0; i < 6; ++i) {
        if (v.at(i).is_zero()) continue;
        w[si.compose(sigma3()[i])] += v.at(i);
    }
    return w;
}

/// sum a_i (sigma_i ∘ rho), used for the G5 orbit comparison.
inline GroupAlgebraElement compose_right(const GroupAlgebraElement& v, const Permutation& rho) {
    GroupAlgebraElement w;
    for (std::size_t i = 0; i < 6; ++i) {
        if (v.at(i).is_zero()) continue;
        w[sigma3()[i].compose(rho)] += v.at(i);
    }
    return w;
}

/// Spanning set of F_v = K(O(v)), the span of the Sigma_3-orbit of v.
inline std::vector<Vec> orbit_span(const GroupAlgebraElement& v) {
    std::vector<Vec> rows;
    for (const auto& s : sigma3()) rows.push_back(act(s, v).coefficients());
    return rows;
}

inline std::size_t orbit_span_dim(const GroupAlgebraElement& v) {
    return subspace_dim(orbit_span(v));
}

/// True iff v_{Sigma_3} lies in the orbit span of v.
inline bool contains_full_sum(const GroupAlgebraElement& v) {
    return subspace_contains(orbit_span(v), subgroup_vector(6).coefficients());
}

// JSON wire format: list of {coeff: "p/q", perm: [images]}.
inline nlohmann::json to_json(const GroupAlgebraElement& v) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < 6; ++i) {
        if (v.at(i).is_zero()) continue;
        out.push_back({{"coeff", v.at(i).str()}, {"perm", sigma3()[i].images()}});
    }
    return out;
}

inline GroupAlgebraElement group_algebra_from_json(const nlohmann::json& j) {
    GroupAlgebraElement v;
    for (const auto& t : j) {
        Permutation p(t.at("perm").get<std::vector<int>>());
        if (p.arity() != 3) throw std::invalid_argument("group algebra element: arity must be 3");
        v[p] += Rational::parse(t.at("coeff").is_string()
                                    ? t.at("coeff").get<std::string>()
                                    : t.at("coeff").dump());
    }
    return v;
}

}  // namespace operadlab
