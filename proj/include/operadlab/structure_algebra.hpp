#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "operadlab/matrix.hpp"
#include "operadlab/rational.hpp"

#include <json.hpp>

namespace operadlab {

/// Finite-dimensional algebra over Q given by exact structure constants:
/// e_i * e_j = sum_k c(i,j,k) e_k. No unit assumed.
class StructureAlgebra {
public:
    StructureAlgebra() : dim_(0) {}
    StructureAlgebra(std::size_t dim, std::vector<std::string> names)
        : dim_(dim), names_(std::move(names)), c_(dim * dim * dim) {
        if (names_.empty()) {
            for (std::size_t i = 1; i <= dim_; ++i) names_.push_back("e" + std::to_string(i));
        }
        if (names_.size() != dim_)
            throw std::invalid_argument("StructureAlgebra: basis name count");
    }
    explicit StructureAlgebra(std::size_t dim) : StructureAlgebra(dim, {}) {}

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    Rational& c(std::size_t i, std::size_t j, std::size_t k) {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    Vec basis_vector(std::size_t i) const {
        Vec v(dim_);
        v[i] = Rational(1);
        return v;
    }

    Vec multiply(const Vec& x, const Vec& y) const {
        Vec out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                Rational f = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!c(i, j, k).is_zero()) out[k] += f * c(i, j, k);
            }
        }
        return out;
    }

    Vec product(std::size_t i, std::size_t j) const {
        Vec out(dim_);
        for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
        return out;
    }

    /// Associator A(x,y,z) = (xy)z - x(yz).
    Vec associator(const Vec& x, const Vec& y, const Vec& z) const {
        Vec a = multiply(multiply(x, y), z);
        Vec b = multiply(x, multiply(y, z));
        for (std::size_t k = 0; k < dim_; ++k) a[k] -= b[k];
        return a;
    }

    bool is_associative() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    Vec a = associator(basis_vector(i), basis_vector(j), basis_vector(k));
                    for (const auto& x : a)
                        if (!x.is_zero()) return false;
                }
        return true;
    }

    bool is_commutative() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!(c(i, j, k) == c(j, i, k))) return false;
        return true;
    }

    friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

    nlohmann::json to_json() const {
        nlohmann::json table = nlohmann::json::array();
        for (std::size_t i = 0; i < dim_; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < dim_; ++j) {
                nlohmann::json entry = nlohmann::json::array();
                for (std::size_t k = 0; k < dim_; ++k) entry.push_back(c(i, j, k).str());
                row.push_back(entry);
            }
            table.push_back(row);
        }
        return {{"basis", names_}, {"table", table}};
    }

    static StructureAlgebra from_json(const nlohmann::json& j) {
        auto names = j.at("basis").get<std::vector<std::string>>();
        StructureAlgebra a(names.size(), names);
        const auto& table = j.at("table");
        if (table.size() != a.dim_) throw std::invalid_argument("algebra table: row count");
        for (std::size_t i = 0; i < a.dim_; ++i) {
            if (table[i].size() != a.dim_)
                throw std::invalid_argument("algebra table: column count");
            for (std::size_t jj = 0; jj < a.dim_; ++jj) {
                const auto& entry = table[i][jj];
                if (entry.size() != a.dim_)
                    throw std::invalid_argument("algebra table: entry length");
                for (std::size_t k = 0; k < a.dim_; ++k) {
                    const auto& cell = entry[k];
                    a.c(i, jj, k) = cell.is_string()
                                        ? Rational::parse(cell.get<std::string>())
                                        : Rational(cell.get<long>());
                }
            }
        }
        return a;
    }

private:
    std::size_t dim_;
    std::vector<std::string> names_;
    std::vector<Rational> c_;
};

/// The paper's two-dimensional algebra A2: e1*e1 = e2, all other products 0.
inline StructureAlgebra algebra_a2() {
    StructureAlgebra a(2);
    a.c(0, 0, 1) = Rational(1);
    return a;
}

}  // namespace operadlab
