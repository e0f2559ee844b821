#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "operadlab/permutation.hpp"
#include "operadlab/rational.hpp"

namespace operadlab {

/// Truncated formal power series over Q with zero constant term:
/// coefficient(k) is the coefficient of x^k, 1 <= k <= order.
class TruncSeries {
public:
    TruncSeries() : c_() {}
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order)) {
        if (order < 1) throw std::invalid_argument("TruncSeries: order must be >= 1");
    }
    TruncSeries(std::vector<Rational> coeffs, int order) : TruncSeries(order) {
        for (std::size_t i = 0; i < c_.size() && i < coeffs.size(); ++i) c_[i] = coeffs[i];
    }

    int order() const { return static_cast<int>(c_.size()); }
    const Rational& coefficient(int k) const { return c_[static_cast<std::size_t>(k - 1)]; }
    Rational& coefficient(int k) { return c_[static_cast<std::size_t>(k - 1)]; }

    static TruncSeries x(int order) {
        TruncSeries s(order);
        s.coefficient(1) = Rational(1);
        return s;
    }

    /// -f(-x): flips the sign of every even-power coefficient.
    TruncSeries negated_argument() const {
        TruncSeries s = *this;
        for (int k = 2; k <= s.order(); k += 2) s.coefficient(k) = -s.coefficient(k);
        return s;
    }

    TruncSeries operator-(const TruncSeries& o) const {
        int n = std::min(order(), o.order());
        TruncSeries s(n);
        for (int k = 1; k <= n; ++k) s.coefficient(k) = coefficient(k) - o.coefficient(k);
        return s;
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.c_ == b.c_;
    }

    std::string text(const std::string& var = "x") const {
        std::string out;
        for (int k = 1; k <= order(); ++k) {
            const Rational& c = coefficient(k);
            if (c.is_zero()) continue;
            out += c.sign() < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
            Rational a = abs(c);
            if (!(a == Rational(1)) || k == 0) out += a.str();
            if (!(a == Rational(1))) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

private:
    std::vector<Rational> c_;
};

/// g_P(x) = sum dims[a-1]/a! x^a from a dimension table starting at arity 1.
inline TruncSeries series_from_dims(const std::vector<std::size_t>& dims) {
    TruncSeries s(static_cast<int>(dims.size()));
    for (std::size_t a = 1; a <= dims.size(); ++a)
        s.coefficient(static_cast<int>(a)) =
            Rational(static_cast<long>(dims[a - 1])) /
            Rational(static_cast<long>(factorial(static_cast<int>(a))));
    return s;
}

/// Compositional composition f(g(x)); both series have no constant term.
inline TruncSeries compose(const TruncSeries& f, const TruncSeries& g) {
    int n = std::min(f.order(), g.order());
    TruncSeries res(n);
    std::vector<Rational> gk;   // coefficients of g^k, k >= 1
    for (int k = 1; k <= n; ++k) {
        if (k == 1) {
            gk.assign(static_cast<std::size_t>(n), Rational(0));
            for (int i = 1; i <= n; ++i) gk[static_cast<std::size_t>(i - 1)] = g.coefficient(i);
        } else {
            std::vector<Rational> next(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i) {
                if (gk[static_cast<std::size_t>(i - 1)].is_zero()) continue;
                for (int j = 1; i + j <= n; ++j) {
                    if (g.coefficient(j).is_zero()) continue;
                    next[static_cast<std::size_t>(i + j - 1)] +=
                        gk[static_cast<std::size_t>(i - 1)] * g.coefficient(j);
                }
            }
            gk = std::move(next);
        }
        if (!f.coefficient(k).is_zero())
            for (int i = 1; i <= n; ++i)
                res.coefficient(i) += f.coefficient(k) * gk[static_cast<std::size_t>(i - 1)];
    }
    return res;
}

/// Compositional inverse by coefficient recursion: returns g with
/// f(g(x)) = x up to the tracked order. Requires coefficient(1) != 0.
inline TruncSeries inverse(const TruncSeries& f) {
    if (f.coefficient(1).is_zero())
        throw std::domain_error("inverse: series is not invertible (c1 = 0)");
    int n = f.order();
    TruncSeries g(n);
    g.coefficient(1) = Rational(1) / f.coefficient(1);
    for (int m = 2; m <= n; ++m) {
        TruncSeries trunc(m);
        for (int k = 1; k < m; ++k) trunc.coefficient(k) = g.coefficient(k);
        TruncSeries ftrunc(m);
        for (int k = 1; k <= m && k <= n; ++k) ftrunc.coefficient(k) = f.coefficient(k);
        Rational val = compose(ftrunc, trunc).coefficient(m);
        g.coefficient(m) = -val / f.coefficient(1);
    }
    return g;
}

/// g_P(-g_{P!}(-x)) - x; identically zero iff the Koszul functional
/// equation holds to the common order.
inline TruncSeries koszul_residual(const TruncSeries& gP, const TruncSeries& gPdual) {
    TruncSeries r = compose(gP, gPdual.negated_argument());
    r.coefficient(1) -= Rational(1);
    return r;
}

/// Euler characteristics of the minimal-model generators:
/// chi(E(n)) = -n! [x^n] inverse(g_P) for n >= 2. For a Koszul operad this
/// is (-1)^n dim P!(n); in particular chi(E(2)) = +dim P(2) always.
inline std::vector<std::pair<int, Rational>> euler_characteristics(const TruncSeries& gP) {
    if (!(gP.coefficient(1) == Rational(1)))
        throw std::domain_error("euler_characteristics: c1 must be 1");
    TruncSeries inv = inverse(gP);
    std::vector<std::pair<int, Rational>> out;
    for (int n = 2; n <= gP.order(); ++n)
        out.emplace_back(n, Rational(-static_cast<long>(factorial(n))) * inv.coefficient(n));
    return out;
}

/// First strictly negative coefficient, if any.
inline std::optional<std::pair<int, Rational>> negative_coefficient_witness(
    const TruncSeries& s) {
    for (int k = 1; k <= s.order(); ++k)
        if (s.coefficient(k).sign() < 0) return std::make_pair(k, s.coefficient(k));
    return std::nullopt;
}

}  // namespace operadlab
