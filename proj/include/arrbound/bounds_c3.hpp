#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arrbound/cyclopoly.hpp"
#include "arrbound/lattice.hpp"

namespace arrbound {

struct EulerData {
    Int chi_proj = 0;   // chi of the projectivized complement
    Int chi_fiber = 0;  // chi(F) = d * chi_proj
};

// Everything the rank-3 bound formulas consume: the number of hyperplanes and,
// for each codim-2 flat, its multiplicity and which hyperplanes contain it.
// Built either from a full lattice or from a localization inside C^4.
struct C3View {
    int d = 0;
    struct FlatRec {
        int d_L = 0;
        std::vector<int> hyperplanes;  // indices 0..d-1
    };
    std::vector<FlatRec> flats;

    Int sum_excess() const {
        Int s = 0;
        for (const auto& f : flats) s += f.d_L - 1;
        return s;
    }
};

inline C3View view_of(const FlatLattice& lat) {
    if (lat.ambient != 3) throw std::invalid_argument("rank-3 bounds need a C^3 arrangement");
    C3View v;
    v.d = lat.d;
    for (const auto& f : lat.flats)
        if (f.dim == 1) v.flats.push_back({f.d_L(), f.hyperplanes});
    return v;
}

inline C3View view_of(const LocalArrangement& loc) {
    if (loc.rank != 3) throw std::invalid_argument("rank-3 bounds need a rank-3 localization");
    C3View v;
    v.d = static_cast<int>(loc.hyperplanes.size());
    std::map<int, int> local_index;
    for (size_t i = 0; i < loc.hyperplanes.size(); ++i)
        local_index[loc.hyperplanes[i]] = static_cast<int>(i);
    for (const auto& f : loc.flats) {
        C3View::FlatRec rec;
        rec.d_L = f.d_L();
        for (int h : f.hyperplanes) rec.hyperplanes.push_back(local_index.at(h));
        v.flats.push_back(std::move(rec));
    }
    return v;
}

struct BoundsReport {
    Int d = 0;
    Int b1_lower = 0;
    Int b1_upper_degree = 0;   // d-1 + degree of the divisor gcd (the sharper reading)
    Int b1_upper_display = 0;  // d-1 + min over hyperplanes of the term sums
    Int b1_upper_massey = 0;
    CycloPoly divisor;         // gcd over hyperplanes, the bound on p(t)
    CycloPoly massey_divisor;  // product over all flats
    Int cdo_value = 0;
    std::map<int, Int> per_eigenvalue;  // order n > 1 with n | d -> eigenspace bound
    bool monodromy_forced_trivial = false;
    Int b2_lower = 0;
    Int b2_upper = 0;
    EulerData euler;
    std::optional<Int> known_b1;
    std::optional<Int> slack;  // b1_upper_degree - known_b1
};

namespace detail {

inline CycloPoly hyperplane_divisor(const C3View& v, int h, Int d) {
    CycloPoly p;
    for (const auto& f : v.flats) {
        if (f.d_L <= 2) continue;
        if (std::find(f.hyperplanes.begin(), f.hyperplanes.end(), h) == f.hyperplanes.end()) continue;
        p *= torsion(std::gcd<Int, Int>(f.d_L, d)).strip_phi1(1).pow(f.d_L - 2);
    }
    return p;
}

}  // namespace detail

// gcd over hyperplanes of prod_{L in H_i} ((t^{(d_L,d)}-1)/(t-1))^{d_L-2}:
// the divisor bound on the nontrivial part p(t) of the characteristic
// polynomial (t-1)^{d-1} p(t) of the monodromy on H_1(F).
inline CycloPoly divisor_bound(const C3View& v) {
    std::vector<CycloPoly> per_hyperplane;
    per_hyperplane.reserve(static_cast<size_t>(v.d));
    for (int h = 0; h < v.d; ++h) per_hyperplane.push_back(detail::hyperplane_divisor(v, h, v.d));
    return gcd_all(std::span<const CycloPoly>(per_hyperplane));
}

inline CycloPoly divisor_bound(const FlatLattice& lat) { return divisor_bound(view_of(lat)); }

// All-flats variant: d-1 + sum_L (d_L-2)((d_L,d)-1), with its divisor.
inline std::pair<Int, CycloPoly> massey_bound(const C3View& v) {
    Int sum = 0;
    CycloPoly div;
    for (const auto& f : v.flats) {
        Int g = std::gcd<Int, Int>(f.d_L, v.d);
        sum += (f.d_L - 2) * (g - 1);
        if (f.d_L > 2) div *= torsion(g).strip_phi1(1).pow(f.d_L - 2);
    }
    return {v.d - 1 + sum, div};
}

inline std::pair<Int, CycloPoly> massey_bound(const FlatLattice& lat) { return massey_bound(view_of(lat)); }

// min over hyperplanes of sum_{L in H_i, (d,d_L) != 1} (d_L - 2): a uniform
// bound on every nontrivial eigenspace of the monodromy on H_1(F).
inline Int cdo_bound(const C3View& v) {
    Int best = -1;
    for (int h = 0; h < v.d; ++h) {
        Int s = 0;
        for (const auto& f : v.flats) {
            if (std::find(f.hyperplanes.begin(), f.hyperplanes.end(), h) == f.hyperplanes.end()) continue;
            if (std::gcd<Int, Int>(f.d_L, v.d) != 1) s += f.d_L - 2;
        }
        if (best < 0 || s < best) best = s;
    }
    return best < 0 ? 0 : best;
}

inline Int cdo_bound(const FlatLattice& lat) { return cdo_bound(view_of(lat)); }

// Characteristic polynomial of the monodromy for a pencil of k concurrent
// lines in C^2: (t-1)(t^k-1)^{k-2}.
inline CycloPoly pencil_charpoly(Int k) {
    if (k < 2) throw std::invalid_argument("pencil_charpoly: need at least 2 lines");
    return torsion(1) * torsion(k).pow(k - 2);
}

inline Int b2_from_b1(const C3View& v, Int b1) {
    if (b1 < v.d - 1) throw std::invalid_argument("b2_from_b1: b1 below the forced minimum d-1");
    return b1 - (2 * static_cast<Int>(v.d) - 1) * (v.d - 1) + v.d * v.sum_excess();
}

inline Int b2_from_b1(const FlatLattice& lat, Int b1) { return b2_from_b1(view_of(lat), b1); }

inline EulerData euler_c3(const FlatLattice& lat) {
    if (lat.ambient != 3) throw std::invalid_argument("euler_c3: arrangement is not in C^3");
    EulerData e;
    e.chi_proj = 3 - 2 * static_cast<Int>(lat.d) + lat.sum_codim2_excess();
    if (e.chi_proj != lat.proj_complement_euler())
        throw std::logic_error("euler_c3: closed form disagrees with stratified count");
    e.chi_fiber = lat.d * e.chi_proj;
    return e;
}

namespace detail {

// The bound data that makes sense for any rank-3 combinatorics, including
// localizations that have no lattice of their own.
struct C3Core {
    Int b1_lower, b1_upper_degree, b1_upper_display, b1_upper_massey;
    CycloPoly divisor, massey_divisor;
    Int cdo_value;
};

inline C3Core analyze_core(const C3View& v) {
    C3Core c;
    c.b1_lower = v.d - 1;
    c.divisor = divisor_bound(v);
    c.b1_upper_degree = c.b1_lower + c.divisor.degree();
    Int min_term = -1;
    for (int h = 0; h < v.d; ++h) {
        Int s = 0;
        for (const auto& f : v.flats) {
            if (std::find(f.hyperplanes.begin(), f.hyperplanes.end(), h) == f.hyperplanes.end()) continue;
            s += (f.d_L - 2) * (std::gcd<Int, Int>(f.d_L, v.d) - 1);
        }
        if (min_term < 0 || s < min_term) min_term = s;
    }
    c.b1_upper_display = c.b1_lower + (min_term < 0 ? 0 : min_term);
    auto [mval, mdiv] = massey_bound(v);
    c.b1_upper_massey = mval;
    c.massey_divisor = mdiv;
    c.cdo_value = cdo_bound(v);
    return c;
}

}  // namespace detail

inline BoundsReport analyze_c3(const FlatLattice& lat, std::optional<Int> known_b1 = std::nullopt) {
    C3View v = view_of(lat);
    auto core = detail::analyze_core(v);
    BoundsReport r;
    r.d = lat.d;
    r.b1_lower = core.b1_lower;
    r.b1_upper_degree = core.b1_upper_degree;
    r.b1_upper_display = core.b1_upper_display;
    r.b1_upper_massey = core.b1_upper_massey;
    r.divisor = core.divisor;
    r.massey_divisor = core.massey_divisor;
    r.cdo_value = core.cdo_value;
    for (int n : detail::divisors(lat.d))
        if (n > 1) r.per_eigenvalue[n] = std::min(r.divisor.eigen_exponent(n), r.cdo_value);
    r.monodromy_forced_trivial = r.divisor.is_one();
    r.b2_lower = b2_from_b1(v, r.b1_lower);
    r.b2_upper = b2_from_b1(v, r.b1_upper_degree);
    r.euler = euler_c3(lat);
    if (known_b1) {
        r.known_b1 = known_b1;
        r.slack = r.b1_upper_degree - *known_b1;
    }
    return r;
}

}  // namespace arrbound
