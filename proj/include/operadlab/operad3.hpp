#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "operadlab/group_algebra.hpp"
#include "operadlab/matrix.hpp"
#include "operadlab/trees.hpp"

#include <json.hpp>

namespace operadlab {

// The 12-dimensional arity-3 component of the free binary operad.
// Monomial index: shape*6 + lex rank of labels, shape 0 = (x.x).x,
// shape 1 = x.(x.x).
inline constexpr std::size_t kArity3Dim = 12;

inline std::size_t monomial3_index(int shape, const Permutation& labels) {
    return static_cast<std::size_t>(shape) * 6 + labels.lex_rank();
}

/// The element sum_sigma a_sigma [ (x_{s^-1(1)} x_{s^-1(2)}) x_{s^-1(3)}
/// - x_{s^-1(1)} (x_{s^-1(2)} x_{s^-1(3)}) ] in the 12-monomial basis.
inline Vec associator_vector(const GroupAlgebraElement& v) {
    Vec w(kArity3Dim);
    for (std::size_t i = 0; i < 6; ++i) {
        if (v.at(i).is_zero()) continue;
        Permutation lab = sigma3()[i].inverse();
        w[monomial3_index(0, lab)] += v.at(i);
        w[monomial3_index(1, lab)] -= v.at(i);
    }
    return w;
}

/// Leaf relabeling on a 12-vector.
inline Vec relabel3(const Permutation& g, const Vec& w) {
    Vec out(kArity3Dim);
    for (int shape = 0; shape < 2; ++shape)
        for (std::size_t i = 0; i < 6; ++i) {
            const Rational& x = w[shape * 6 + i];
            if (x.is_zero()) continue;
            out[monomial3_index(shape, g.compose(sigma3()[i]))] += x;
        }
    return out;
}

/// Subspace of the 12-dim monomial space with a canonical echelon basis.
class RelationSpace {
public:
    RelationSpace() = default;
    explicit RelationSpace(std::vector<Vec> spanning) {
        for (auto& v : spanning)
            if (v.size() != kArity3Dim)
                throw std::invalid_argument("RelationSpace: vectors must have length 12");
        detail::rref(spanning, kArity3Dim);
        basis_ = std::move(spanning);
    }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    bool contains(const Vec& v) const { return subspace_contains(basis_, v); }
    bool is_sigma3_stable() const {
        for (const auto& b : basis_)
            for (const auto& g : sigma3())
                if (!contains(relabel3(g, b))) return false;
        return true;
    }

    friend bool operator==(const RelationSpace& a, const RelationSpace& b) {
        return a.basis_ == b.basis_;
    }

private:
    std::vector<Vec> basis_;   // canonical rref rows
};

/// Smallest Sigma_3-stable subspace containing the generators.
inline RelationSpace relation_space(const std::vector<Vec>& generators) {
    std::vector<Vec> rows;
    for (const auto& v : generators)
        for (const auto& g : sigma3()) rows.push_back(relabel3(g, v));
    return RelationSpace(std::move(rows));
}

/// Gram matrix of the duality pairing: diagonal, <m,m> = sign(labels) for
/// left combs and -sign(labels) for right combs, mixed shapes pair to zero.
inline Matrix pairing_matrix() {
    Matrix g(kArity3Dim, kArity3Dim);
    for (int shape = 0; shape < 2; ++shape)
        for (std::size_t i = 0; i < 6; ++i) {
            int s = sigma3()[i].sign() * (shape == 0 ? 1 : -1);
            g.at(shape * 6 + i, shape * 6 + i) = Rational(s);
        }
    return g;
}

/// R^perp = {w : <w, r> = 0 for all r in R}; dim R + dim R^perp = 12.
inline RelationSpace annihilator(const RelationSpace& r) {
    Matrix gram = pairing_matrix();
    Matrix m(r.dim(), kArity3Dim);
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < kArity3Dim; ++j)
            m.at(i, j) = r.basis()[i][j] * gram.at(j, j);
    return RelationSpace(kernel_basis(m));
}

// ---- dual presentation ------------------------------------------------

/// Degree-3 word x_a x_b x_c as the label permutation (a,b,c).
inline std::string word_name(const Permutation& p) {
    std::string s;
    for (int k = 1; k <= 3; ++k) s += static_cast<char>('a' + p(k) - 1);
    return s;
}

struct DualPresentation {
    bool associative = false;
    // Echelonized relations among the six degree-3 words, lex word order.
    std::vector<Vec> word_relations;

    std::size_t word_quotient_dim() const { return 6 - word_relations.size(); }

    std::string text() const {
        if (!associative) return "not associative-presented";
        std::string out = "associative";
        for (const auto& row : word_relations) {
            std::size_t lead = 0;
            while (row[lead].is_zero()) ++lead;
            std::string lhs = word_name(sigma3()[lead]);
            std::string rhs;
            for (std::size_t j = lead + 1; j < 6; ++j) {
                if (row[j].is_zero()) continue;
                Rational c = -row[j];
                rhs += rhs.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
                Rational a = abs(c);
                if (!(a == Rational(1))) rhs += a.str() + "*";
                rhs += word_name(sigma3()[j]);
            }
            if (rhs.empty()) rhs = "0";
            out += "; " + lhs + " = " + rhs;
        }
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json rels = nlohmann::json::array();
        for (const auto& row : word_relations) {
            nlohmann::json rel = nlohmann::json::array();
            for (std::size_t j = 0; j < 6; ++j)
                if (!row[j].is_zero())
                    rel.push_back({row[j].str(), word_name(sigma3()[j])});
            rels.push_back(rel);
        }
        return {{"associative", associative}, {"relations", rels}};
    }
};

/// Detects whether all six associativity vectors lie in rperp; if so,
/// rewrites the quotient relations as identities among degree-3 words.
inline DualPresentation dual_presentation(const RelationSpace& rperp) {
    DualPresentation out;
    out.associative = true;
    for (const auto& p : sigma3()) {
        Vec assoc(kArity3Dim);
        assoc[monomial3_index(0, p)] = Rational(1);
        assoc[monomial3_index(1, p)] = Rational(-1);
        if (!rperp.contains(assoc)) { out.associative = false; return out; }
    }
    std::vector<Vec> wrows;
    for (const auto& u : rperp.basis()) {
        Vec w(6);
        for (std::size_t i = 0; i < 6; ++i) w[i] = u[i] + u[6 + i];
        wrows.push_back(std::move(w));
    }
    detail::rref(wrows, 6);
    out.word_relations = std::move(wrows);
    return out;
}

// ---- built-in operads ---------------------------------------------------

struct OperadSpec {
    std::string name;
    std::vector<Vec> generators;   // arity-3 relation generators (12-vectors)
};

inline const std::vector<std::string>& builtin_operad_names() {
    static const std::vector<std::string> names = {
        "ass", "g2p3", "g3p3", "g4p3", "g5p3", "g6p3", "alt", "lieadm"};
    return names;
}

/// Built-in operads by name (g1p3 is an alias of ass); "name!" or
/// dual=true gives the Koszul dual (relations = R^perp).
inline OperadSpec builtin_operad(std::string name, bool dual = false) {
    if (!name.empty() && name.back() == '!') {
        name.pop_back();
        dual = true;
    }
    if (name == "g1p3") name = "ass";
    std::vector<Vec> gens;
    if (name == "ass") gens = {associator_vector(subgroup_vector(1))};
    else if (name == "g2p3") gens = {associator_vector(subgroup_vector(2))};
    else if (name == "g3p3") gens = {associator_vector(subgroup_vector(3))};
    else if (name == "g4p3") gens = {associator_vector(subgroup_vector(4))};
    else if (name == "g5p3") gens = {associator_vector(subgroup_vector(5))};
    else if (name == "g6p3") gens = {associator_vector(subgroup_vector(6))};
    else if (name == "alt")
        gens = {associator_vector(subgroup_vector(2)),
                associator_vector(subgroup_vector(3))};
    else if (name == "lieadm") gens = {associator_vector(lie_admissible_vector())};
    else throw std::invalid_argument("unknown operad: " + name);
    if (!dual) return {name, std::move(gens)};
    RelationSpace rp = annihilator(relation_space(gens));
    return {name + "!", rp.basis()};
}

// ---- the §4.2 theorem vector ---------------------------------------------

struct AlternativeTheoremCheck {
    bool with_c = false;    // v = 2Id + t12 + t13 + t23 + c
    bool with_c2 = false;   // v = 2Id + t12 + t13 + t23 + c^2
    bool holds() const { return with_c || with_c2; }
};

/// Compares the Sigma_3-stable span generated by the theorem vector's
/// associator against the dim-5 span generated from Id+t12 and Id+t23.
inline AlternativeTheoremCheck alternative_vector_theorem_check() {
    using namespace sym3;
    RelationSpace alt = relation_space({associator_vector(subgroup_vector(2)),
                                        associator_vector(subgroup_vector(3))});
    auto probe = [&](const Permutation& cyc) {
        GroupAlgebraElement v = ga_from_terms(
            {{2, id()}, {1, t12()}, {1, t13()}, {1, t23()}, {1, cyc}});
        return relation_space({associator_vector(v)}) == alt;
    };
    return {probe(c()), probe(c2())};
}

}  // namespace operadlab
