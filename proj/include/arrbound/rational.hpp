#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrbound {

using Int = long long;

// Exact rational number. Canonical form: gcd(|num|, den) = 1, den >= 1.
struct Rational {
    Int num = 0;
    Int den = 1;

    Rational() = default;
    Rational(Int n) : num(n), den(1) {}
    Rational(Int n, Int d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Int g = std::gcd(a.den, b.den);
        return Rational(a.num * (b.den / g) + b.num * (a.den / g), (a.den / g) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num, b.den); }
    friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Int g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        Int g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::invalid_argument("rational division by zero");
        return a * Rational(b.den, b.num);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

namespace detail {

// Scale a rational vector to the unique primitive integer vector with positive
// leading entry spanning the same line.  Throws on the zero vector.
inline std::vector<Int> primitive_vector(const std::vector<Rational>& v) {
    Int l = 1;
    for (const auto& r : v) l = std::lcm(l, r.den);
    std::vector<Int> out(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].num * (l / v[i].den);
        g = std::gcd(g, out[i] < 0 ? -out[i] : out[i]);
    }
    if (g == 0) throw std::invalid_argument("primitive_vector: zero vector");
    Int lead = 0;
    for (Int c : out)
        if (c != 0) {
            lead = c;
            break;
        }
    if (lead < 0) g = -g;
    for (Int& c : out) c /= g;
    return out;
}

// In-place reduced row echelon form over the rationals; returns the rank and
// shrinks the matrix to its nonzero rows.
inline int rref(std::vector<std::vector<Rational>>& m) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
    }
    m.resize(row);
    return static_cast<int>(row);
}

// Basis of the null space of an integer row matrix, as primitive integer vectors.
inline std::vector<std::vector<Int>> null_space(const std::vector<std::vector<Int>>& rows, size_t cols) {
    std::vector<std::vector<Rational>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rational> q(cols);
        for (size_t i = 0; i < cols; ++i) q[i] = Rational(r[i]);
        m.push_back(std::move(q));
    }
    rref(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (const auto& r : m) {
        for (size_t c = 0; c < cols; ++c)
            if (!r[c].is_zero()) {
                pivot_col.push_back(static_cast<int>(c));
                is_pivot[c] = true;
                break;
            }
    }
    std::vector<std::vector<Int>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_c] = Rational(1);
        for (size_t r = 0; r < m.size(); ++r) v[pivot_col[r]] = -m[r][free_c];
        basis.push_back(primitive_vector(v));
    }
    return basis;
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace detail

}  // namespace arrbound
