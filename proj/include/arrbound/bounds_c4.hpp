#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "arrbound/bounds_c3.hpp"
#include "arrbound/lattice.hpp"

namespace arrbound {

struct C4HyperplaneTerm {
    int hyperplane = 0;
    Int b_sum = 0;      // sum of local b2 bounds over dim-1 flats in the hyperplane
    Int plane_sum = 0;  // sum of (2 p_L + 1)(d_L - 2)((d, d_L) - 1) over dim-2 flats
    Int total() const { return b_sum + plane_sum; }
};

struct C4Bounds {
    Int d = 0;
    Int chi_fiber_paper = 0;   // the closed-form expression, under the fixed reading below
    Int chi_fiber_oracle = 0;  // d * chi of the projectivized complement (authoritative)
    bool chi_agree = false;
    Int b2_complement = 0;
    Int b2_upper = 0;
    Int b3_upper = 0;
    std::vector<C4HyperplaneTerm> per_hyperplane;
    int min_hyperplane = 0;
};

// Closed-form Euler characteristic
//   chi(F) = 4d - 3d^2 + d*N + d*sum_L (3 d_L - d_L^2 + p_L - 2)
// read with L running over the dim-2 flats, d_L the hyperplanes through L,
// p_L the dim-1 flats inside L, and N the number of dim-1 flats.  This is the
// only dimensionally consistent reading we found, and it still disagrees with
// the covering-degree oracle on simple inputs, so callers must report the two
// side by side and never use this value as chi(F).
inline Int euler_c4_paper(const FlatLattice& lat) {
    if (lat.ambient != 4) throw std::invalid_argument("euler_c4_paper: arrangement is not in C^4");
    const Int d = lat.d;
    Int n_lines = static_cast<Int>(lat.flat_ids_of_dim(1).size());
    Int sum = 0;
    for (const auto& f : lat.flats) {
        if (f.dim != 2) continue;
        Int d_L = f.d_L();
        Int p_L = lat.lines_in_plane(f);
        sum += 3 * d_L - d_L * d_L + p_L - 2;
    }
    return 4 * d - 3 * d * d + d * n_lines + d * sum;
}

// chi(F) = d * chi(P^3 \ [A]), by the cyclic covering of the projectivized
// complement; the right-hand side comes from exact stratified counting.
inline Int euler_c4_oracle(const FlatLattice& lat) {
    if (lat.ambient != 4) throw std::invalid_argument("euler_c4_oracle: arrangement is not in C^4");
    return lat.d * lat.proj_complement_euler();
}

// Upper bound for b2 of the Milnor fiber of the rank-3 localization at a
// dim-1 flat: run the rank-3 divisor bound on the local combinatorics and
// push the resulting b1 bound through the b2 identity.
inline Int local_b2_bound(const FlatLattice& lat, int flat_id) {
    const Flat& f = lat.flat(flat_id);
    if (lat.ambient != 4 || f.dim != 1)
        throw std::invalid_argument("local_b2_bound: flat is not a line in C^4");
    C3View local = view_of(lat.localize(flat_id));
    auto core = detail::analyze_core(local);
    return b2_from_b1(local, core.b1_upper_degree);
}

inline C4Bounds analyze_c4(const FlatLattice& lat) {
    if (lat.ambient != 4) throw std::invalid_argument("analyze_c4: arrangement is not in C^4");
    C4Bounds r;
    r.d = lat.d;
    r.chi_fiber_paper = euler_c4_paper(lat);
    r.chi_fiber_oracle = euler_c4_oracle(lat);
    r.chi_agree = r.chi_fiber_paper == r.chi_fiber_oracle;
    r.b2_complement = 0;
    {
        auto betti = lat.complement_betti();
        if (betti.size() > 2) r.b2_complement = betti[2];
    }
    auto lines = lat.flat_ids_of_dim(1);
    for (int h = 0; h < lat.d; ++h) {
        C4HyperplaneTerm term;
        term.hyperplane = h;
        for (int id : lines)
            if (lat.hyperplane_contains(h, lat.flat(id))) term.b_sum += local_b2_bound(lat, id);
        for (const auto& f : lat.flats) {
            if (f.dim != 2 || !lat.hyperplane_contains(h, f)) continue;
            Int d_L = f.d_L();
            Int p_L = lat.lines_in_plane(f);
            term.plane_sum += (2 * p_L + 1) * (d_L - 2) * (std::gcd<Int, Int>(lat.d, d_L) - 1);
        }
        r.per_hyperplane.push_back(term);
    }
    Int best = -1;
    for (const auto& t : r.per_hyperplane)
        if (best < 0 || t.total() < best) {
            best = t.total();
            r.min_hyperplane = t.hyperplane;
        }
    if (best < 0) best = 0;
    r.b2_upper = r.b2_complement + best;
    r.b3_upper = 2 - r.d - r.chi_fiber_oracle + r.b2_upper;
    return r;
}

}  // namespace arrbound
