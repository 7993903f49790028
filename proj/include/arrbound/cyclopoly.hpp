#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrbound/rational.hpp"

namespace arrbound {

namespace detail {

// Dense integer polynomial, coefficients lowest degree first.
using Coeffs = std::vector<Int>;

inline Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
    Coeffs out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division by a monic polynomial; throws if the division leaves a remainder.
inline Coeffs poly_div_exact(Coeffs num, const Coeffs& den) {
    if (den.empty() || den.back() != 1) throw std::invalid_argument("poly_div_exact: divisor must be monic");
    if (num.size() < den.size()) throw std::invalid_argument("poly_div_exact: degree too small");
    Coeffs q(num.size() - den.size() + 1, 0);
    for (size_t i = q.size(); i-- > 0;) {
        Int c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (Int c : num)
        if (c != 0) throw std::invalid_argument("poly_div_exact: inexact division");
    return q;
}

inline std::vector<int> divisors(int n) {
    std::vector<int> ds;
    for (int k = 1; k * k <= n; ++k) {
        if (n % k) continue;
        ds.push_back(k);
        if (k != n / k) ds.push_back(n / k);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// Coefficients of the n-th cyclotomic polynomial, by repeated exact division of
// t^n - 1 by the lower cyclotomics.  Memoized; safe for concurrent callers.
inline const Coeffs& cyclotomic(int n) {
    static std::map<int, Coeffs> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Coeffs p(static_cast<size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<size_t>(n)] = 1;
    for (int d : divisors(n)) {
        if (d == n) continue;
        auto low = cache.find(d);
        if (low == cache.end()) {
            // fill recursively; divisors() is sorted so all proper divisors of d
            // are already cached when we get here
            Coeffs q(static_cast<size_t>(d) + 1, 0);
            q[0] = -1;
            q[static_cast<size_t>(d)] = 1;
            for (int e : divisors(d))
                if (e != d) q = poly_div_exact(std::move(q), cache.at(e));
            low = cache.emplace(d, std::move(q)).first;
        }
        p = poly_div_exact(std::move(p), low->second);
    }
    return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace detail

// A product of cyclotomic polynomials Phi_n(t)^{e_n}, stored as its exponent
// map.  The empty map is the constant polynomial 1.  Values are immutable in
// spirit: every operation returns a fresh value, so they can be shared across
// threads freely.
class CycloPoly {
public:
    CycloPoly() = default;

    explicit CycloPoly(std::map<int, Int> exponents) : exps_(std::move(exponents)) {
        for (auto it = exps_.begin(); it != exps_.end();) {
            if (it->first < 1 || it->second < 0) throw std::invalid_argument("CycloPoly: bad exponent entry");
            it = it->second == 0 ? exps_.erase(it) : std::next(it);
        }
    }

    static CycloPoly one() { return CycloPoly(); }

    // Phi_n to the k-th power.
    static CycloPoly phi(int n, Int k = 1) {
        if (n < 1) throw std::invalid_argument("phi: index must be positive");
        if (k < 0) throw std::invalid_argument("phi: negative exponent");
        CycloPoly p;
        if (k > 0) p.exps_[n] = k;
        return p;
    }

    bool is_one() const { return exps_.empty(); }
    const std::map<int, Int>& exponents() const { return exps_; }

    Int eigen_exponent(int n) const {
        if (n < 1) throw std::invalid_argument("eigen_exponent: order must be positive");
        auto it = exps_.find(n);
        return it == exps_.end() ? 0 : it->second;
    }

    Int degree() const {
        Int deg = 0;
        for (const auto& [n, e] : exps_) deg += e * detail::euler_phi(n);
        return deg;
    }

    CycloPoly& operator*=(const CycloPoly& o) {
        for (const auto& [n, e] : o.exps_) exps_[n] += e;
        return *this;
    }
    friend CycloPoly operator*(CycloPoly a, const CycloPoly& b) { return a *= b; }

    CycloPoly pow(Int k) const {
        if (k < 0) throw std::invalid_argument("pow: negative exponent");
        CycloPoly out;
        if (k == 0) return out;
        for (const auto& [n, e] : exps_) out.exps_[n] = e * k;
        return out;
    }

    // Remove k factors of Phi_1 = t - 1; signals non-divisibility.
    CycloPoly strip_phi1(Int k) const {
        if (k < 0) throw std::invalid_argument("strip_phi1: negative count");
        CycloPoly out = *this;
        Int have = out.eigen_exponent(1);
        if (have < k) throw std::domain_error("strip_phi1: polynomial not divisible by (t-1)^k");
        if (have == k)
            out.exps_.erase(1);
        else if (k > 0)
            out.exps_[1] = have - k;
        return out;
    }

    // Expanded integer coefficients, lowest degree first; leading coefficient 1.
    detail::Coeffs expand() const {
        detail::Coeffs out{1};
        for (const auto& [n, e] : exps_) {
            const auto& phi_n = detail::cyclotomic(n);
            for (Int i = 0; i < e; ++i) out = detail::poly_mul(out, phi_n);
        }
        return out;
    }

    friend bool operator==(const CycloPoly&, const CycloPoly&) = default;

    std::string factored_string() const {
        if (exps_.empty()) return "1";
        std::string s;
        for (const auto& [n, e] : exps_) {
            if (!s.empty()) s += "*";
            s += n == 1 ? "(t-1)" : "Phi_" + std::to_string(n) + "(t)";
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    std::string expanded_string() const {
        auto c = expand();
        std::string s;
        for (size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            Int a = c[i];
            if (s.empty()) {
                if (a < 0) s += "-";
            } else {
                s += a < 0 ? " - " : " + ";
            }
            Int mag = a < 0 ? -a : a;
            if (mag != 1 || i == 0) s += std::to_string(mag);
            if (i >= 1) {
                s += "t";
                if (i >= 2) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    std::map<int, Int> exps_;
};

// t^m - 1 as a product of cyclotomics: one factor Phi_n for each n | m.
inline CycloPoly torsion(Int m) {
    if (m < 1) throw std::invalid_argument("torsion: exponent must be positive");
    std::map<int, Int> e;
    for (int n : detail::divisors(static_cast<int>(m))) e[n] = 1;
    return CycloPoly(std::move(e));
}

inline CycloPoly product(std::span<const std::pair<CycloPoly, Int>> factors) {
    CycloPoly out;
    for (const auto& [p, k] : factors) out *= p.pow(k);
    return out;
}

inline CycloPoly product(std::initializer_list<std::pair<CycloPoly, Int>> factors) {
    return product(std::span<const std::pair<CycloPoly, Int>>(factors.begin(), factors.size()));
}

// Pointwise minimum of exponent maps; exact because distinct Phi_n are coprime.
inline CycloPoly gcd_all(std::span<const CycloPoly> polys) {
    if (polys.empty()) throw std::invalid_argument("gcd_all: empty list");
    std::map<int, Int> out = polys.front().exponents();
    for (size_t i = 1; i < polys.size() && !out.empty(); ++i) {
        const auto& e = polys[i].exponents();
        for (auto it = out.begin(); it != out.end();) {
            auto jt = e.find(it->first);
            if (jt == e.end()) {
                it = out.erase(it);
            } else {
                it->second = std::min(it->second, jt->second);
                ++it;
            }
        }
    }
    return CycloPoly(std::move(out));
}

inline CycloPoly gcd_all(std::initializer_list<CycloPoly> polys) {
    return gcd_all(std::span<const CycloPoly>(polys.begin(), polys.size()));
}

inline CycloPoly strip_phi1(const CycloPoly& p, Int k) { return p.strip_phi1(k); }
inline Int degree(const CycloPoly& p) { return p.degree(); }
inline detail::Coeffs expand(const CycloPoly& p) { return p.expand(); }
inline Int eigen_exponent(const CycloPoly& p, int n) { return p.eigen_exponent(n); }

}  // namespace arrbound
