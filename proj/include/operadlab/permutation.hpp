#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace operadlab {

/// Permutation of {1..n} in one-line notation: images[i-1] = sigma(i).
/// Composition convention: (sigma ∘ rho)(k) = sigma(rho(k)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
                throw std::invalid_argument("Permutation: not a bijection");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }
    static Permutation transposition(int n, int i, int j) {
        auto p = identity(n);
        std::swap(p.img_[i - 1], p.img_[j - 1]);
        return p;
    }

    int arity() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_[k - 1]; }
    const std::vector<int>& images() const { return img_; }

    Permutation compose(const Permutation& rho) const {  // this ∘ rho
        std::vector<int> v(img_.size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = img_[rho.img_[k] - 1];
        return Permutation(std::move(v));
    }

    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (std::size_t k = 0; k < v.size(); ++k) v[img_[k] - 1] = static_cast<int>(k) + 1;
        return Permutation(std::move(v));
    }

    int sign() const {
        int inv = 0;
        for (std::size_t i = 0; i < img_.size(); ++i)
            for (std::size_t j = i + 1; j < img_.size(); ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv % 2 ? -1 : 1;
    }

    /// Rank in lexicographic order of all arity-n permutations (Lehmer code).
    std::size_t lex_rank() const {
        std::size_t r = 0, fact = 1;
        for (std::size_t k = 2; k < img_.size(); ++k) fact *= k;
        for (std::size_t i = 0; i < img_.size(); ++i) {
            std::size_t smaller = 0;
            for (std::size_t j = i + 1; j < img_.size(); ++j)
                if (img_[j] < img_[i]) ++smaller;
            r += smaller * fact;
            if (img_.size() - i - 1 > 1) fact /= (img_.size() - i - 1);
        }
        return r;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.img_ == b.img_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) {
        return !(a == b);
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.img_ < b.img_;
    }

private:
    std::vector<int> img_;
};

/// All arity-n permutations in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
    return f;
}

}  // namespace operadlab
